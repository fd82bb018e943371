#include "mofs/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mofs/errors.hpp"

namespace mofs {

namespace {

struct Line {
    int number;
    std::string text;
};

struct ParsedText {
    std::vector<std::string> comments;
    std::vector<Line> lines;  // non-comment, non-blank
};

ParsedText split_lines(const std::string& text) {
    ParsedText out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            size_t start = first + 1;
            if (start < line.size() && line[start] == ' ') ++start;
            out.comments.push_back(line.substr(start));
            continue;
        }
        out.lines.push_back({number, line});
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) fail(line, "bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line, "bad integer '" + tok + "'");
    }
}

struct GridFile {
    int n = 0, k = 0;
    bool decimal = false;
    bool holes_allowed = false;
    std::vector<std::vector<long long>> entries;  // -1 marks a hole
};

GridFile parse_grid(const ParsedText& pt, const std::string& keyword,
                    bool holes_allowed) {
    if (pt.lines.empty()) throw ParseError("empty file");
    auto head = tokens_of(pt.lines[0].text);
    int hline = pt.lines[0].number;
    GridFile g;
    g.holes_allowed = holes_allowed;
    if (head.size() != 3) fail(hline, "expected '" + keyword + " <n> <k>'");
    if (head[0] == keyword) g.decimal = false;
    else if (head[0] == keyword + "-dec") g.decimal = true;
    else fail(hline, "expected header '" + keyword + "' or '" + keyword + "-dec', got '" + head[0] + "'");
    g.n = static_cast<int>(parse_int(head[1], hline));
    g.k = static_cast<int>(parse_int(head[2], hline));
    if (g.n <= 0 || g.n % 2 != 0) fail(hline, "order must be a positive even number");
    if (g.k <= 0) fail(hline, "square count must be positive");
    if (!g.decimal && g.k > 120) fail(hline, "binary tokens support at most 120 squares");
    if (g.decimal && g.k > 63) fail(hline, "decimal entries support at most 63 squares");
    if (static_cast<int>(pt.lines.size()) != g.n + 1)
        throw ParseError("expected " + std::to_string(g.n) + " data lines, found " +
                         std::to_string(pt.lines.size() - 1));
    for (int r = 0; r < g.n; ++r) {
        const Line& ln = pt.lines[r + 1];
        auto toks = tokens_of(ln.text);
        if (static_cast<int>(toks.size()) != g.n)
            fail(ln.number, "expected " + std::to_string(g.n) + " entries, found " +
                            std::to_string(toks.size()));
        std::vector<long long> row;
        row.reserve(g.n);
        for (const auto& tok : toks) {
            bool all_dots = tok.find_first_not_of('.') == std::string::npos;
            if (all_dots) {
                if (!holes_allowed) fail(ln.number, "hole token '" + tok + "' not allowed here");
                row.push_back(-1);
                continue;
            }
            if (g.decimal) {
                long long v = parse_int(tok, ln.number);
                if (v < 0 || static_cast<unsigned long long>(v) >= (1ull << g.k))
                    fail(ln.number, "entry " + tok + " out of range for " +
                                    std::to_string(g.k) + " squares");
                row.push_back(v);
            } else {
                if (static_cast<int>(tok.size()) != g.k)
                    fail(ln.number, "token '" + tok + "' is not " + std::to_string(g.k) +
                                    " binary digits");
                long long v = 0;
                for (char ch : tok) {
                    if (ch != '0' && ch != '1')
                        fail(ln.number, "token '" + tok + "' is not binary");
                    v = v << 1 | (ch - '0');
                }
                row.push_back(v);
            }
        }
        g.entries.push_back(std::move(row));
    }
    return g;
}

// entry bit (k-1-i) belongs to square i, matching decode_superposition
std::vector<FrequencySquare> grid_squares(const GridFile& g) {
    std::vector<FrequencySquare> squares(g.k);
    for (int i = 0; i < g.k; ++i) {
        squares[i].n = g.n;
        squares[i].rows.assign(g.n, 0);
    }
    for (int r = 0; r < g.n; ++r)
        for (int c = 0; c < g.n; ++c) {
            long long e = g.entries[r][c];
            if (e < 0) continue;
            for (int i = 0; i < g.k; ++i)
                if (e >> (g.k - 1 - i) & 1) squares[i].rows[r] |= col_bit(c);
        }
    return squares;
}

std::string entry_token(long long e, int k, bool decimal) {
    if (e < 0) return decimal ? "." : std::string(k, '.');
    if (decimal) return std::to_string(e);
    std::string t(k, '0');
    for (int i = 0; i < k; ++i)
        if (e >> (k - 1 - i) & 1) t[i] = '1';
    return t;
}

std::string format_grid(const std::string& keyword, int n, int k, bool decimal,
                        const std::vector<std::vector<long long>>& entries,
                        const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << keyword << (decimal ? "-dec " : " ") << n << ' ' << k << "\n";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out << ' ';
            out << entry_token(entries[r][c], k, decimal);
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<long long>> square_entries(const std::vector<FrequencySquare>& squares,
                                                   int n) {
    int k = static_cast<int>(squares.size());
    std::vector<std::vector<long long>> entries(n, std::vector<long long>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            long long e = 0;
            for (int i = 0; i < k; ++i) e = e << 1 | squares[i].at(r, c);
            entries[r][c] = e;
        }
    return entries;
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& text) { return fnv1a64(text.data(), text.size()); }

FsqFile parse_fsq(const std::string& text) {
    ParsedText pt = split_lines(text);
    GridFile g = parse_grid(pt, "mofs", false);
    FsqFile f;
    f.decimal = g.decimal;
    f.comments = pt.comments;
    f.set.n = g.n;
    f.set.squares = grid_squares(g);
    return f;
}

FsqFile read_fsq(const std::string& path) { return parse_fsq(read_text_file(path)); }

std::string format_fsq(const MofsSet& s, bool decimal,
                       const std::vector<std::string>& comments) {
    if (decimal && s.k() > 63)
        throw OutOfRange("decimal entries support at most 63 squares");
    return format_grid("mofs", s.n, s.k(), decimal, square_entries(s.squares, s.n),
                       comments);
}

void write_fsq(const std::string& path, const MofsSet& s, bool decimal,
               const std::vector<std::string>& comments) {
    write_text_file(path, format_fsq(s, decimal, comments));
}

ImofsFile parse_imofs(const std::string& text) {
    ParsedText pt = split_lines(text);
    GridFile g = parse_grid(pt, "imofs", true);
    int holes = 0;
    int smax = 0;
    for (int r = 0; r < g.n; ++r)
        for (int c = 0; c < g.n; ++c)
            if (g.entries[r][c] < 0) {
                ++holes;
                smax = std::max(smax, std::max(r, c) + 1);
            }
    if (holes != smax * smax)
        throw ParseError("hole cells do not tile a top-left square");
    for (int r = 0; r < smax; ++r)
        for (int c = 0; c < smax; ++c)
            if (g.entries[r][c] >= 0)
                throw ParseError("cell (" + std::to_string(r + 1) + "," +
                                 std::to_string(c + 1) + ") should be a hole");
    ImofsFile f;
    f.decimal = g.decimal;
    f.comments = pt.comments;
    f.imofs.n = g.n;
    f.imofs.s = smax;
    f.imofs.squares = grid_squares(g);
    return f;
}

ImofsFile read_imofs(const std::string& path) { return parse_imofs(read_text_file(path)); }

std::string format_imofs(const Imofs& p, bool decimal,
                         const std::vector<std::string>& comments) {
    if (decimal && p.k() > 63)
        throw OutOfRange("decimal entries support at most 63 squares");
    auto entries = square_entries(p.squares, p.n);
    for (int r = 0; r < p.s; ++r)
        for (int c = 0; c < p.s; ++c) entries[r][c] = -1;
    return format_grid("imofs", p.n, p.k(), decimal, entries, comments);
}

std::vector<CellList> parse_trade(const std::string& text) {
    ParsedText pt = split_lines(text);
    if (pt.lines.empty()) throw ParseError("empty file");
    auto head = tokens_of(pt.lines[0].text);
    int hline = pt.lines[0].number;
    if (head.size() != 2 || head[0] != "trade") fail(hline, "expected 'trade <k>'");
    int k = static_cast<int>(parse_int(head[1], hline));
    if (k <= 0) fail(hline, "square count must be positive");
    if (static_cast<int>(pt.lines.size()) != k + 1)
        throw ParseError("expected " + std::to_string(k) + " square lines, found " +
                         std::to_string(pt.lines.size() - 1));
    std::vector<CellList> cell_sets(k);
    for (int i = 0; i < k; ++i) {
        const Line& ln = pt.lines[i + 1];
        auto toks = tokens_of(ln.text);
        if (toks.empty() || toks[0] != std::to_string(i + 1) + ":")
            fail(ln.number, "expected '" + std::to_string(i + 1) + ":' prefix");
        if (toks.size() == 2 && toks[1] == "-") continue;
        for (size_t t = 1; t < toks.size(); ++t) {
            const std::string& tok = toks[t];
            size_t comma = tok.find(',');
            if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')' ||
                comma == std::string::npos)
                fail(ln.number, "bad cell token '" + tok + "'");
            long long r = parse_int(tok.substr(1, comma - 1), ln.number);
            long long c = parse_int(tok.substr(comma + 1, tok.size() - comma - 2), ln.number);
            if (r < 1 || c < 1) fail(ln.number, "cell indices are 1-based");
            cell_sets[i].push_back({static_cast<int>(r - 1), static_cast<int>(c - 1)});
        }
        if (cell_sets[i].empty()) fail(ln.number, "expected cells or '-'");
    }
    return cell_sets;
}

std::vector<CellList> read_trade(const std::string& path) {
    return parse_trade(read_text_file(path));
}

std::string format_trade(const std::vector<CellList>& cell_sets,
                         const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "trade " << cell_sets.size() << "\n";
    for (size_t i = 0; i < cell_sets.size(); ++i) {
        out << (i + 1) << ':';
        if (cell_sets[i].empty()) {
            out << " -";
        } else {
            for (const auto& [r, c] : cell_sets[i])
                out << " (" << (r + 1) << ',' << (c + 1) << ')';
        }
        out << "\n";
    }
    return out.str();
}

HadamardMatrix parse_hadamard(const std::string& text) {
    ParsedText pt = split_lines(text);
    if (pt.lines.empty()) throw ParseError("empty file");
    auto head = tokens_of(pt.lines[0].text);
    int hline = pt.lines[0].number;
    if (head.size() != 2 || head[0] != "hadamard") fail(hline, "expected 'hadamard <n>'");
    int n = static_cast<int>(parse_int(head[1], hline));
    if (n <= 0) fail(hline, "order must be positive");
    if (static_cast<int>(pt.lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " sign lines, found " +
                         std::to_string(pt.lines.size() - 1));
    HadamardMatrix m;
    m.n = n;
    for (int r = 0; r < n; ++r) {
        const Line& ln = pt.lines[r + 1];
        auto toks = tokens_of(ln.text);
        if (toks.size() != 1 || static_cast<int>(toks[0].size()) != n)
            fail(ln.number, "expected " + std::to_string(n) + " sign characters");
        std::vector<int> row;
        row.reserve(n);
        for (char ch : toks[0]) {
            if (ch == '+') row.push_back(1);
            else if (ch == '-') row.push_back(-1);
            else fail(ln.number, "signs must be '+' or '-'");
        }
        m.h.push_back(std::move(row));
    }
    return m;
}

HadamardMatrix read_hadamard(const std::string& path) {
    return parse_hadamard(read_text_file(path));
}

std::string format_hadamard(const HadamardMatrix& m,
                            const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "hadamard " << m.n << "\n";
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) out << (m.h[r][c] > 0 ? '+' : '-');
        out << "\n";
    }
    return out.str();
}

std::string format_design(const ResolvableDesign& d,
                          const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "design " << d.points << ' ' << d.block_size << ' ' << d.pair_index << "\n";
    for (size_t ci = 0; ci < d.classes.size(); ++ci) {
        if (ci) out << "\n";
        for (int bi : d.classes[ci]) {
            bool first = true;
            for (int p : d.blocks[bi]) {
                if (!first) out << ' ';
                out << (p + 1);
                first = false;
            }
            out << "\n";
        }
    }
    return out.str();
}

ResolvableDesign parse_design(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ResolvableDesign d;
    bool seen_header = false;
    bool gap = false;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') continue;
        if (first == std::string::npos) {
            gap = true;
            continue;
        }
        auto toks = tokens_of(line);
        if (!seen_header) {
            if (toks.size() != 4 || toks[0] != "design")
                fail(number, "expected 'design <v> <k> <lambda>'");
            d.points = static_cast<int>(parse_int(toks[1], number));
            d.block_size = static_cast<int>(parse_int(toks[2], number));
            d.pair_index = static_cast<int>(parse_int(toks[3], number));
            seen_header = true;
            gap = true;
            continue;
        }
        if (gap) {
            d.classes.push_back({});
            gap = false;
        }
        std::vector<int> block;
        for (const auto& tok : toks) {
            long long p = parse_int(tok, number);
            if (p < 1 || p > d.points) fail(number, "point " + tok + " out of range");
            block.push_back(static_cast<int>(p - 1));
        }
        std::sort(block.begin(), block.end());
        d.classes.back().push_back(static_cast<int>(d.blocks.size()));
        d.blocks.push_back(std::move(block));
    }
    if (!seen_header) throw ParseError("empty file");
    return d;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ParseError("cannot write '" + path + "'");
}

std::string tool_version() { return "mofs 1.0.0"; }

std::vector<std::string> provenance(const std::vector<std::string>& argv,
                                    const std::string& input_text) {
    std::string cmd;
    for (const auto& a : argv) {
        if (!cmd.empty()) cmd += ' ';
        cmd += a;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(input_text)));
    return {"tool: " + tool_version(), "command: " + cmd,
            "input-hash: fnv1a64:" + std::string(hex)};
}

}  // namespace mofs
