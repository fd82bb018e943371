#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mofs/data.hpp"
#include "mofs/designs.hpp"
#include "mofs/errors.hpp"
#include "mofs/io.hpp"
#include "mofs/isomorphism.hpp"
#include "mofs/relations.hpp"
#include "mofs/search.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct InputText {
    std::string text;
    std::string origin;
};

// File arguments resolve against the filesystem first, then against the
// bundled data registry, so `verify 17-mofs-6-01.fsq` works anywhere.
InputText load_input(const std::string& path) {
    if (std::filesystem::exists(path)) return {mofs::read_text_file(path), path};
    std::string base = std::filesystem::path(path).filename().string();
    return {mofs::bundled_text(base), base};
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        mofs::write_text_file(path, text);
}

std::string comment_block(const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    return out;
}

int cmd_verify(const std::string& path, bool relations, bool certify,
               bool profile) {
    InputText in = load_input(path);
    mofs::FsqFile file = mofs::parse_fsq(in.text);
    const mofs::MofsSet& s = file.set;
    mofs::ValidationReport rep = mofs::verify_mofs(s);

    std::printf("file: %s\n", in.origin.c_str());
    std::printf("order: %d squares: %d\n", s.n, s.k());
    if (!rep.valid) {
        std::printf("invalid\n");
        for (const auto& f : rep.failures) std::printf("  %s\n", f.c_str());
        return kExitDomain;
    }
    std::printf("valid\n");

    if (relations) {
        auto first = mofs::find_relation(s);
        if (first)
            std::printf("first %s\n", mofs::relation_line(*first, s.n).c_str());
        else
            std::printf("first relation: none\n");
        auto full = mofs::find_relation(s, true);
        if (full)
            std::printf("full %s\n", mofs::relation_line(*full, s.n).c_str());
        else
            std::printf("full relation: none\n");
    }
    if (certify) {
        mofs::MaximalityCertificate cert = mofs::certify_maximal(s);
        if (cert.certified)
            std::printf("maximality certificate: %s\n",
                        mofs::relation_line(*cert.witness, s.n).c_str());
        else
            std::printf("maximality certificate: none\n");
    }
    if (profile) {
        mofs::SuperpositionProfile prof = mofs::superposition_profile(s);
        std::printf("profile:");
        for (int i = 0; i <= prof.k; ++i)
            std::printf(" %d:%lld", i, prof.counts[i]);
        std::printf("\n");
    }
    return kExitValid;
}

struct ConstructArgs {
    std::string kind;
    int n = 0;
    int k = 0, lambda = 0, a = 0, b = 0;
    std::string in;
    std::string out;
    bool binary = false;
};

int cmd_construct(const ConstructArgs& args,
                  const std::vector<std::string>& argv) {
    std::vector<std::string> comments;
    mofs::MofsSet set;

    if (args.kind == "hadamard") {
        mofs::HadamardMatrix h = mofs::hadamard(args.n);
        if (!mofs::hadamard_check(h)) throw mofs::PreconditionFailed("self-check failed");
        emit(args.out, comment_block(mofs::provenance(argv, "")) +
                           mofs::format_hadamard(h));
        return kExitValid;
    }

    if (args.kind == "complete") {
        set = mofs::complete_from_hadamard(mofs::hadamard(args.n));
    } else if (args.kind == "bachelor") {
        mofs::FrequencySquare sq = mofs::bachelor_square(args.n);
        set.n = args.n;
        set.squares = {sq};
    } else if (args.kind == "mate") {
        InputText in = load_input(args.in);
        mofs::FsqFile file = mofs::parse_fsq(in.text);
        if (file.set.k() != 1)
            throw mofs::WrongShape("mate construction starts from a single square");
        mofs::FrequencySquare mate = mofs::orthogonal_mate(file.set.squares[0]);
        set.n = file.set.n;
        set.squares = {file.set.squares[0], mate};
        comments.push_back("input: " + in.origin);
    } else if (args.kind == "five-max") {
        mofs::FiveMaxResult r = mofs::five_max(args.n);
        set = r.set;
        comments.push_back("relation: " + mofs::relation_line(r.relation, set.n));
        comments.push_back(std::string("maximality certificate: ") +
                           (r.certificate.certified ? "yes" : "no"));
    } else if (args.kind == "seventeen") {
        mofs::SeventeenSchedule sched;
        set = mofs::seventeen(args.n, &sched);
        comments.push_back("schedule: base=" + std::to_string(sched.base) +
                           " b=" + std::to_string(sched.b) +
                           " lambda=" + std::to_string(sched.lambda));
    } else if (args.kind == "small-k-relation") {
        set = mofs::construct_small_k(args.k, args.lambda, args.a, args.b);
    } else {
        throw CLI::ValidationError("unknown construct kind: " + args.kind);
    }

    mofs::ValidationReport rep = mofs::verify_mofs(set);
    if (!rep.valid)
        throw mofs::PreconditionFailed("constructed set fails verification: " +
                                       rep.failures.front());

    std::string input_text;
    if (!args.in.empty()) input_text = load_input(args.in).text;
    std::vector<std::string> header = mofs::provenance(argv, input_text);
    header.insert(header.end(), comments.begin(), comments.end());
    emit(args.out, mofs::format_fsq(set, !args.binary, header));
    return kExitValid;
}

struct SearchArgs {
    std::string kind;
    std::string in;
    std::string pair = "1,2";
    std::string out;
    std::string graph;
    std::string checkpoint;
    int min = 15;
    int k = 0;
    int batch = 1;
    int threads = 1;
    std::uint64_t budget = 0;
    std::uint64_t max_sets = 1;
    bool relation_55 = false;
};

std::pair<int, int> parse_pair_indices(const std::string& text, int k) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw mofs::ParseError("pair must look like 1,2");
    int i = 0, j = 0;
    try {
        i = std::stoi(text.substr(0, comma));
        j = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw mofs::ParseError("pair must hold two integers");
    }
    if (i < 1 || j < 1 || i > k || j > k || i == j)
        throw mofs::OutOfRange("pair indices must be distinct and within 1.." +
                               std::to_string(k));
    return {i - 1, j - 1};
}

void export_graph(const std::string& path, const mofs::MateGraph& g) {
    std::string text = "# mate graph: " + std::to_string(g.vertices.size()) +
                       " vertices, adjacency list, 1-based\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        text += std::to_string(v + 1) + ":";
        for (std::size_t u = 0; u < g.vertices.size(); ++u)
            if (g.edge(static_cast<int>(v), static_cast<int>(u)))
                text += " " + std::to_string(u + 1);
        text += "\n";
    }
    emit(path, text);
}

int cmd_search(const SearchArgs& args, const std::vector<std::string>& argv) {
    if (args.kind == "mates") {
        InputText in = load_input(args.in);
        mofs::FsqFile file = mofs::parse_fsq(in.text);
        std::vector<mofs::FrequencySquare> found =
            mofs::mates(file.set, args.threads);
        std::printf("mates: %zu\n", found.size());
        if (!args.out.empty()) {
            mofs::MofsSet container;
            container.n = file.set.n;
            container.squares = found;
            std::vector<std::string> header = mofs::provenance(argv, in.text);
            header.push_back("square list: each entry is one orthogonal mate of " +
                             in.origin + ", not a mutually orthogonal set");
            emit(args.out, mofs::format_fsq(container, true, header));
        }
        return kExitValid;
    }

    if (args.kind == "clique") {
        InputText in = load_input(args.in);
        mofs::FsqFile file = mofs::parse_fsq(in.text);
        auto [i, j] = parse_pair_indices(args.pair, file.set.k());
        mofs::MofsSet pair;
        pair.n = file.set.n;
        pair.squares = {file.set.squares[i], file.set.squares[j]};
        mofs::MateGraph g = mofs::mate_graph(pair, args.threads);

        int mind = g.vertices.empty() ? 0 : g.degree(0);
        for (int v = 1; v < static_cast<int>(g.vertices.size()); ++v)
            mind = std::min(mind, g.degree(v));
        std::printf("vertices: %zu\nmin degree: %d\n", g.vertices.size(), mind);
        if (!args.graph.empty()) export_graph(args.graph, g);

        mofs::CliqueResult res = mofs::cliques_at_least(g, args.min, args.budget);
        std::printf("cliques >= %d: %zu\ncomplete: %s\nnodes: %llu\n", args.min,
                    res.cliques.size(), res.complete ? "yes" : "no",
                    static_cast<unsigned long long>(res.nodes));
        return kExitValid;
    }

    if (args.kind == "block-circulant") {
        mofs::BlockCirculantResult res = mofs::block_circulant_search(
            10, args.k, args.relation_55, args.budget, args.max_sets);
        std::printf("sets: %zu\ncomplete: %s\nnodes: %llu\n", res.sets.size(),
                    res.complete ? "yes" : "no",
                    static_cast<unsigned long long>(res.nodes));
        if (!args.out.empty() && !res.sets.empty())
            emit(args.out,
                 mofs::format_fsq(res.sets.front(), true, mofs::provenance(argv, "")));
        return kExitValid;
    }

    if (args.kind == "census") {
        if (args.checkpoint.empty())
            throw CLI::ValidationError("census needs --checkpoint");
        std::vector<mofs::CensusRow> rows = mofs::run_census(
            args.checkpoint, args.batch, args.budget, args.threads,
            [](const mofs::CensusRow& r) {
                std::printf("class %d: vertices=%d min-degree=%d cliques15=%llu%s\n",
                            r.index + 1, r.vertex_count, r.min_degree,
                            static_cast<unsigned long long>(r.cliques15),
                            r.complete ? "" : " (budget hit)");
                std::fflush(stdout);
            });
        std::printf("rows finished: %zu\n", rows.size());
        return kExitValid;
    }

    throw CLI::ValidationError("unknown search kind: " + args.kind);
}

int cmd_trade(const std::string& mode, const std::string& set_path,
              const std::string& trade_path, const std::string& out,
              const std::vector<std::string>& argv) {
    InputText set_in = load_input(set_path);
    mofs::FsqFile file = mofs::parse_fsq(set_in.text);
    InputText trade_in = load_input(trade_path);
    std::vector<mofs::CellList> cells = mofs::parse_trade(trade_in.text);
    mofs::TradeSpec spec = mofs::make_trade(file.set, cells);

    std::printf("trade: %s on %s\n", trade_in.origin.c_str(), set_in.origin.c_str());
    std::printf("basic: %s\nswitched squares:", spec.basic ? "yes" : "no");
    for (int i : spec.switched()) std::printf(" %d", i + 1);
    std::printf("\n");

    if (mode == "switch") {
        mofs::MofsSet switched = mofs::switch_trade(file.set, spec);
        std::vector<std::string> header = mofs::provenance(argv, set_in.text);
        header.push_back("switched by trade: " + trade_in.origin);
        emit(out, mofs::format_fsq(switched, file.decimal, header));
    }
    return kExitValid;
}

int cmd_data(const std::string& mode, const std::string& name) {
    if (mode == "list") {
        for (const auto& n : mofs::bundled_names()) std::printf("%s\n", n.c_str());
        return kExitValid;
    }
    std::fputs(mofs::bundled_text(name).c_str(), stdout);
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> raw_argv(argv, argv + argc);
    CLI::App app{"binary MOFS toolkit"};
    app.require_subcommand(1);
    int seed = 0;
    app.add_option("--seed", seed, "seed for randomized internals")
        ->default_val(0);

    auto* verify = app.add_subcommand("verify", "validate an FSQ file");
    std::string verify_path;
    bool flag_relations = false, flag_certify = false, flag_profile = false;
    verify->add_option("path", verify_path, "FSQ v1 file")->required();
    verify->add_flag("--relations", flag_relations, "scan for relations");
    verify->add_flag("--certify", flag_certify, "maximality certificate");
    verify->add_flag("--profile", flag_profile, "superposition profile");

    auto* construct = app.add_subcommand("construct", "build and verify a set");
    ConstructArgs cargs;
    construct
        ->add_option("kind", cargs.kind,
                     "hadamard | complete | bachelor | mate | five-max | "
                     "seventeen | small-k-relation")
        ->required();
    construct->add_option("--n", cargs.n, "order");
    construct->add_option("--k", cargs.k, "set size (small-k-relation)");
    construct->add_option("--lambda", cargs.lambda, "half order (small-k-relation)");
    construct->add_option("--a", cargs.a, "|X1| (small-k-relation)");
    construct->add_option("--b", cargs.b, "|X2| (small-k-relation)");
    construct->add_option("--in", cargs.in, "input square file (mate)");
    construct->add_option("--out", cargs.out, "output path, - for stdout");
    construct->add_flag("--binary", cargs.binary, "write binary strings, not decimal");

    auto* search = app.add_subcommand("search", "enumerative searches");
    SearchArgs sargs;
    search
        ->add_option("kind", sargs.kind, "mates | clique | block-circulant | census")
        ->required();
    search->add_option("--in", sargs.in, "input FSQ file");
    search->add_option("--pair", sargs.pair, "1-based square pair, e.g. 1,2");
    search->add_option("--min", sargs.min, "clique size threshold");
    search->add_option("--k", sargs.k, "set size (block-circulant)");
    search->add_flag("--relation-55", sargs.relation_55,
                     "keep only sets whose Z2 sum is the (5,5) block pattern");
    search->add_option("--budget", sargs.budget, "node budget, 0 = unlimited");
    search->add_option("--max-sets", sargs.max_sets, "stop after this many sets");
    search->add_option("--batch", sargs.batch, "census rows per run");
    search->add_option("--threads", sargs.threads, "worker threads");
    search->add_option("--checkpoint", sargs.checkpoint, "census checkpoint path");
    search->add_option("--out", sargs.out, "output path, - for stdout");
    search->add_option("--graph", sargs.graph, "adjacency-list export path");

    auto* trade = app.add_subcommand("trade", "validate or apply a trade");
    std::string trade_mode, trade_set, trade_file, trade_out;
    trade->add_option("mode", trade_mode, "validate | switch")
        ->required()
        ->check(CLI::IsMember({"validate", "switch"}));
    trade->add_option("--in", trade_set, "FSQ set file")->required();
    trade->add_option("--trade", trade_file, "trade file")->required();
    trade->add_option("--out", trade_out, "switched output path, - for stdout");

    auto* data = app.add_subcommand("data", "bundled datasets");
    std::string data_mode, data_name;
    data->add_option("mode", data_mode, "list | cat")
        ->required()
        ->check(CLI::IsMember({"list", "cat"}));
    data->add_option("name", data_name, "dataset name (cat)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*verify)
            return cmd_verify(verify_path, flag_relations, flag_certify, flag_profile);
        if (*construct) return cmd_construct(cargs, raw_argv);
        if (*search) return cmd_search(sargs, raw_argv);
        if (*trade)
            return cmd_trade(trade_mode, trade_set, trade_file, trade_out, raw_argv);
        if (*data) {
            if (data_mode == "cat" && data_name.empty())
                throw CLI::ValidationError("data cat needs a name");
            return cmd_data(data_mode, data_name);
        }
    } catch (const mofs::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const mofs::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return kExitValid;
}
