// Frozen expectations for the bundled data, computed by an independent
// reference implementation. Generated; do not edit by hand.

#pragma once
#include <cstdint>

namespace mofs::frozen {

struct RelationExpect {
    const char* rows;
    const char* cols;
    const char* squares;
    int a, b;
};

struct DatasetExpect {
    const char* file;
    int n, k;
    bool has_first;
    RelationExpect first;
    bool has_full;
    RelationExpect full;
    bool certified;
    long long mates;
};

inline constexpr DatasetExpect kDatasets[] = {
    {"17-mofs-6-01.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-02.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-03.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-04.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-05.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-06.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-07.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-08.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-09.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-10.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-11.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-12.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-13.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-14.fsq", 6, 17, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-15.fsq", 6, 17, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-16.fsq", 6, 17, true, {"1,2,3", "2,3,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,2,3", "2,3,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-17.fsq", 6, 17, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"17-mofs-6-18.fsq", 6, 17, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, {"1,4,5", "4,5,6", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 3, 3}, true, 0LL},
    {"display-10.fsq", 6, 5, true, {"1,2,3,4,5", "1,2,3", "1,2,3,4,5", 5, 3}, true, {"1,2,3,4,5", "1,2,3", "1,2,3,4,5", 5, 3}, true, 0LL},
    {"display-11.fsq", 6, 5, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"display-12.fsq", 4, 9, true, {"1,3", "3,4", "1", 2, 2}, true, {"1,2,3,4", "-", "1,2,3,4,5,6,7,8,9", 4, 0}, false, 0LL},
    {"display-16.fsq", 6, 9, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9", 3, 3}, true, {"1,2,3", "1,2,3", "1,2,3,4,5,6,7,8,9", 3, 3}, true, 0LL},
    {"display-17.fsq", 6, 13, true, {"1,2,3,4,5", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13", 5, 3}, true, {"1,2,3,4,5", "1,2,3", "1,2,3,4,5,6,7,8,9,10,11,12,13", 5, 3}, true, 0LL},
    {"max-06.fsq", 6, 6, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-07.fsq", 6, 7, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-08.fsq", 6, 8, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-09-rel-1-1.fsq", 6, 9, true, {"1", "1", "1,2,3,4,5,6,7,8,9", 1, 1}, true, {"1", "1", "1,2,3,4,5,6,7,8,9", 1, 1}, true, 0LL},
    {"max-09-rel-5-1.fsq", 6, 9, true, {"2,3,4,5,6", "6", "1,2,3,4,5,6,7,8,9", 5, 1}, true, {"2,3,4,5,6", "6", "1,2,3,4,5,6,7,8,9", 5, 1}, true, 0LL},
    {"max-10.fsq", 6, 10, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-11.fsq", 6, 11, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-12.fsq", 6, 12, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-14.fsq", 6, 14, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"max-15.fsq", 6, 15, false, {"", "", "", 0, 0}, false, {"", "", "", 0, 0}, false, 0LL},
    {"mofs10-17.fsq", 10, 17, true, {"1,2,3,4,5", "1,2,3,4,5", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 5, 5}, true, {"1,2,3,4,5", "1,2,3,4,5", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17", 5, 5}, true, -1LL},
    {"mofs10-9.fsq", 10, 9, true, {"1,2,3,4,5", "1,2,3,4,5", "1,2,3,4,5,6,7,8,9", 5, 5}, true, {"1,2,3,4,5", "1,2,3,4,5", "1,2,3,4,5,6,7,8,9", 5, 5}, true, -1LL},
};

struct TradeDerivation {
    const char* source;
    const char* trade;
    const char* target;
    const char* switched;
};

inline constexpr TradeDerivation kDerived17[] = {
    {"17-mofs-6-01.fsq", "17-mofs-6-01-dark.trade", "17-mofs-6-11.fsq", "12,13,14,15,16,17"},
    {"17-mofs-6-01.fsq", "17-mofs-6-01-light.trade", "17-mofs-6-10.fsq", "1,2,3,4,5,6"},
    {"17-mofs-6-02.fsq", "17-mofs-6-02-light.trade", "17-mofs-6-12.fsq", "1,2,3,4,5,6"},
    {"17-mofs-6-03.fsq", "17-mofs-6-03-light.trade", "17-mofs-6-13.fsq", "1,2,3,4,5,6"},
    {"17-mofs-6-04.fsq", "17-mofs-6-04-light.trade", "17-mofs-6-14.fsq", "1,2,3,4,5,6"},
    {"17-mofs-6-05.fsq", "17-mofs-6-05-cols.trade", "17-mofs-6-16.fsq", "1"},
    {"17-mofs-6-05.fsq", "17-mofs-6-05-rows.trade", "17-mofs-6-15.fsq", "1"},
    {"17-mofs-6-06.fsq", "17-mofs-6-06-rows.trade", "17-mofs-6-17.fsq", "1"},
    {"17-mofs-6-07.fsq", "17-mofs-6-07-rows.trade", "17-mofs-6-18.fsq", "1"},
};

inline constexpr const char* kCanon17[18] = {
    "1c72f4e38:1dce23372:2f13a95b4:2f88d6b15:363e13d0e:37469c8e3:3b497168b:4d9b348ce:4e6b1a665:4f254db2a:55c8cbcac:5695b23a9:56aa6c593:666ca52dc:68e6719a5:7138f8366:713b07ab1",
    "1c766ad38:1d93b1e26:1f8a96959:2cdd1c8f2:2f4c47e0e:372b0b4f4:3784ec5a3:4e5aac695:4ea97854e:563e153aa:5aa4cda74:5b47298cb:6562f48ec:6695a399c:69398dd29:6b1366372:70be26c47",
    "1c766ad38:1da3b1a74:1f8c7238d:2e5e16a56:356e256a3:3a3d194ec:4d9b0eca5:4f4aa954e:5695a666a:56aa5c1f2:58dc99b23:64bca599c:67254bb26:6a32f4725:6ac7231f1:713b3294b:7158ea2f4",
    "1c766ad38:1d93b1e26:1eccb1399:2d6974a5a:2f27381e5:35ad07ca9:3638dc6b4:3b1e07372:4e6e0de07:4e9b264dc:4f81ceb31:55cc6a2e6:595a9c8e9:5aa95956a:64ea93974:6742e55aa:6a5553aac",
    "1c72f4e38:35ac655aa:3725aca53:3a9c958dc:3b16a3725:4eab25695:4ec5b136a:569a8e572:56c4eac8d:5b136999a:656aa395c:6637169a9:68dc66b13:6959ac4e9:6a664dc66:72397264e:7268d93b1",
    "1c72f4e38:356c695aa:3726a3b15:3a5c998dc:3b15ac663:4e6b29656:4ec5b13a9:55a9ac8d9:56371a96a:58dc6ab13:599aa356c:5aa64dca5:665a8e5b1:66c4e6c4e:6b136599a:72397268d:72a8d5372",
    "1c72f4e38:356c695aa:3725aca53:3a5c998dc:3b16a3725:4e6b29695:4ec5b136a:55aaa395c:56371a9a9:58dc6ab13:5999ac4e9:5aa64dc66:665a8e572:66c4e6c8d:6b136599a:72397264e:72a8d53b1",
    "1c72f4e38:1d9b1a9b1:1ead2c653:2dcca55a9:2e6e13374:36c8d9c96:3995b1a66:4ec572a8d:4f43a995a:54be23d0e:57268daa5:5788d636a:647d1c8ea:6693a64f4:6aa355d23:70e4ea971:7239b1399",
    "1c72f4e38:1d9b1a972:1eae23715:2dcca556a:2e6d1c2f1:36c8d9c96:3995b1aa5:4ec572a4e:4f43a9999:54bd2cc8b:57268da66:5788d63a9:647e139ac:6693a64f4:6aa355d23:70e4ea971:7239b135a",
    "1c72f4e38:1dce23372:2f1593b2c:2f2a4dd16:369ab2595:37469c8e3:3b497168b:4d9b348ce:4e6b1a665:4f81ec3b1:55c8cbcac:5637295aa:56ac56b0b:666ca52dc:68e6719a5:7138f8366:713b07ab1",
    "1c72f4e38:1dce313a3:2f15b2b0d:2f2a6c595:37468ec63:3aa653974:3b496365a:4ecb168d9:4f81cdb32:593b0bd29:5ac4e9c8d:64daa3d16:656c47aac:6953788e6:71a8f494b:723725a93:7258da3b1",
    "1c766ad38:1d93b1e26:2ced1cc63:2f194e6b4:2f86a6955:365ab44da:4e6a99374:55aa568ec:57472a2e3:5939aca59:5aca47e13:655c87b2a:6661f2e0d:695a78987:6b236556a:72368dca5:7291da972",
    "1c766ad38:1d9ab43b1:2f43a3e15:363b15c9a:374c4e6a3:39a565a72:3aae13565:3b11f84ec:4d9b0ec66:56a8e665c:5722d9b26:5a5e292d6:5b894b999:653d233ac:66c3721f2:70799aa71:7316a694b",
    "1c766ad38:1d93b1e26:1eccb1399:2e3b344dc:2f21dcb31:356c782e6:35ad07ca9:3b1e07372:4dc966a5a:4e6e0de07:4f872a1e5:5698ce6b4:595a9c8e9:5aa95956a:64ea93974:6742e55aa:6a5553aac",
    "1c72f4e38:356c695aa:3726ac8d5:3a5c99b13:3b15a366c:4e6b29656:4ec58dca9:55a9a3b19:56371a96a:58dc6a8dc:599aac563:5aa6713a5:665ab258d:66c4e6372:6b136599a:72394e6b1:72a8d5c4e",
    "1c72f4e38:356c695aa:3725a3a5c:3a5c99b13:3b16ac4e5:4e6b29695:4ec58dc6a:55aaac953:56371a9a9:58dc6a8dc:5999a3729:5aa671366:665ab254e:66c4e63b1:6b136599a:72394e672:72a8d5c8d",
    "1c72f4e38:356c696a6:3725ac8d9:3a5c99b13:3b16a356c:4e6b2955a:4ec68dca5:55aaa3b15:56371aa66:58dc6a8dc:5999ac663:5aa5713a9:6659b268d:66c4e6372:6b1365a96:723a4e5b1:72a8d5c4e",
    "1c72f4e38:356c696a6:3726a395c:3a5c99b13:3b15ac4e9:4e6b29599:4ec68dc66:55a9aca53:56371aaa5:58dc6a8dc:599aa3725:5aa57136a:6659b264e:66c4e63b1:6b1365a96:723a4e572:72a8d5c8d",
};

inline constexpr const char* kCanonMofs4[3] = {
    "33cc:3c3c:3cc3:55aa:5a69:5a96:6699:695a:69a5",
    "33cc:3c3c:3cc3:569a:59a6:5a69:65a9:695a:6a95",
    "33cc:3c3c:3cc3:55aa:5a5a:5aa5:6699:6969:6996",
};

inline constexpr long long kRawCount2 = 2;
inline constexpr long long kRawCount4 = 90;
inline constexpr long long kRawCount6 = 297200;
inline constexpr long long kStandardizedCount4 = 45;
inline constexpr long long kComplete4Count = 22;
inline constexpr long long kComplete4Classes = 3;
inline constexpr long long kIsoToA4 = 18;
inline constexpr long long kIsoToA6 = 200;
inline constexpr long long kSingleClasses6 = 6;
inline constexpr long long kA4Mates = 56;

struct MateGraphExpect {
    const char* setFile;
    int vertices;
    int minDegree;
};

inline constexpr MateGraphExpect kMateGraphs[3] = {
    {"17-mofs-6-01.fsq", 6973, 1245},
    {"17-mofs-6-02.fsq", 6999, 1208},
    {"17-mofs-6-03.fsq", 7028, 1254},
};

}  // namespace mofs::frozen
