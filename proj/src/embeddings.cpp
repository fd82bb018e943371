#include "mofs/embeddings.hpp"

#include <algorithm>
#include <map>

#include "mofs/errors.hpp"
#include "seed_grids.inc"

namespace mofs {

namespace {

std::vector<std::pair<int, int>> frame_cells(int n, int s) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r >= s || c >= s) cells.push_back({r, c});
    return cells;
}

}  // namespace

std::array<std::array<Row, 2>, 2> i_block(Row r, int width) {
    Row comp = r ^ row_mask(width);
    return {{{r, comp}, {comp, r}}};
}

ValidationReport validate_imofs(const Imofs& p) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& msg) {
        rep.valid = false;
        rep.failures.push_back(msg);
    };
    if (p.n <= 0 || p.n % 2 != 0) flag("order must be a positive even number");
    if (p.s < 0 || p.s >= p.n || p.s % 2 != 0)
        flag("hole size must be even and smaller than the order");
    for (const auto& sq : p.squares)
        if (sq.n != p.n || static_cast<int>(sq.rows.size()) != p.n)
            flag("square shape does not match the order");
    if (!rep.valid) return rep;

    auto cells = frame_cells(p.n, p.s);
    for (int i = 0; i < p.k(); ++i) {
        const auto& sq = p.squares[i];
        std::vector<std::array<int, 2>> rowcnt(p.n, {0, 0}), colcnt(p.n, {0, 0});
        for (const auto& [r, c] : cells) {
            ++rowcnt[r][sq.at(r, c)];
            ++colcnt[c][sq.at(r, c)];
        }
        for (int r = 0; r < p.n; ++r) {
            if (rowcnt[r][0] != rowcnt[r][1])
                flag("square " + std::to_string(i + 1) + " row " + std::to_string(r + 1) +
                     " is unbalanced");
            if (colcnt[r][0] != colcnt[r][1])
                flag("square " + std::to_string(i + 1) + " column " + std::to_string(r + 1) +
                     " is unbalanced");
        }
        for (int r = 0; r < p.s; ++r)
            if (sq.rows[r] & row_mask(p.s))
                flag("square " + std::to_string(i + 1) + " has a nonzero bit inside the hole");
    }
    for (int i = 0; i < p.k(); ++i)
        for (int j = i + 1; j < p.k(); ++j) {
            long long cnt[4] = {0, 0, 0, 0};
            for (const auto& [r, c] : cells)
                ++cnt[2 * p.squares[i].at(r, c) + p.squares[j].at(r, c)];
            if (cnt[0] != cnt[1] || cnt[0] != cnt[2] || cnt[0] != cnt[3])
                flag("squares " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                     " are not orthogonal over the frame");
        }
    return rep;
}

Imofs two_imofs(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("two_imofs needs an even order of at least 4");
    int s = n - 2;
    Imofs p;
    p.n = n;
    p.s = s;
    p.squares.assign(2, FrequencySquare{n, std::vector<Row>(n, 0)});

    auto put = [&p](int r, int c, int pair_value) {
        if (pair_value >> 1 & 1) p.squares[0].rows[r] |= col_bit(c);
        if (pair_value & 1) p.squares[1].rows[r] |= col_bit(c);
    };

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int v = seeds::kCornerBlock[i][j];
            if (v >= 0) put(n - 4 + i, n - 4 + j, v);
        }
    for (int c = 0; c + 1 < n - 4 + 1; c += 2) {
        put(n - 2, c, 0);
        put(n - 2, c + 1, 3);
        put(n - 1, c, 3);
        put(n - 1, c + 1, 0);
    }
    for (int r = 0; r + 1 < n - 4 + 1; r += 2) {
        put(r, n - 2, 1);
        put(r, n - 1, 2);
        put(r + 1, n - 2, 2);
        put(r + 1, n - 1, 1);
    }
    ValidationReport rep = validate_imofs(p);
    if (!rep.valid) throw Error("two_imofs output failed validation: " + rep.failures[0]);
    return p;
}

bool corner_structure_check(const Imofs& p) {
    if (p.k() != 2) throw WrongShape("corner check needs exactly two squares");
    if (p.s != p.n - 2) throw WrongShape("corner check needs hole size n-2");
    int v[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int r = p.n - 2 + i, c = p.n - 2 + j;
            v[i][j] = 2 * p.squares[0].at(r, c) + p.squares[1].at(r, c);
        }
    int seen = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) seen |= 1 << v[i][j];
    if (seen != 0b1111) return false;
    return (v[0][0] ^ v[0][1]) != 3 && (v[1][0] ^ v[1][1]) != 3 &&
           (v[0][0] ^ v[1][0]) != 3 && (v[0][1] ^ v[1][1]) != 3;
}

NoThreeImofsReport no_three_imofs_witness(int n) {
    if (n != 4 && n != 6)
        throw OrderTooLarge("exhaustive frame search is limited to orders 4 and 6");
    int s = n - 2;
    auto cells = frame_cells(n, s);

    // every balanced filling: each top row picks one of the two right columns,
    // each left column one of the two bottom rows, plus the 2x2 corner
    std::vector<FrequencySquare> frames;
    for (int rp = 0; rp < (1 << s); ++rp)
        for (int cp = 0; cp < (1 << s); ++cp)
            for (int bits = 0; bits < 16; ++bits) {
                FrequencySquare sq{n, std::vector<Row>(n, 0)};
                for (int r = 0; r < s; ++r)
                    sq.rows[r] = col_bit(rp >> r & 1 ? s : s + 1);
                for (int c = 0; c < s; ++c)
                    sq.rows[cp >> c & 1 ? s : s + 1] |= col_bit(c);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        if (bits >> (2 * i + j) & 1) sq.rows[s + i] |= col_bit(s + j);
                Imofs one{n, s, {sq}};
                if (validate_imofs(one).valid) frames.push_back(sq);
            }

    NoThreeImofsReport rep;
    rep.frame_count = static_cast<int>(frames.size());
    size_t quarter = cells.size() / 4;
    auto orth = [&](const FrequencySquare& a, const FrequencySquare& b) {
        size_t cnt[4] = {0, 0, 0, 0};
        for (const auto& [r, c] : cells) ++cnt[2 * a.at(r, c) + b.at(r, c)];
        return cnt[0] == quarter && cnt[1] == quarter && cnt[2] == quarter &&
               cnt[3] == quarter;
    };
    int m = rep.frame_count;
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (orth(frames[i], frames[j])) {
                adj[i][j] = adj[j][i] = 1;
                rep.pair_exists = true;
            }
    for (int i = 0; i < m && !rep.triple_exists; ++i)
        for (int j = i + 1; j < m && !rep.triple_exists; ++j) {
            if (!adj[i][j]) continue;
            for (int l = j + 1; l < m; ++l)
                if (adj[i][l] && adj[j][l]) {
                    rep.triple_exists = true;
                    break;
                }
        }
    return rep;
}

Imofs fill_imofs(int n, int b, const OrthogonalArray2& oa) {
    if (n <= 0 || n % 2 != 0 || b < 1 || n - 2 * b < 0)
        throw BadOrder("frame needs even n and 0 <= n-2b");
    int s = n - 2 * b;
    long long cells = 4ll * b * (n - b);
    if (cells % (4 * oa.lambda) != 0)
        throw DivisibilityFailed("4*lambda = " + std::to_string(4 * oa.lambda) +
                                 " does not divide b(n-b) = " + std::to_string(b * (n - b)));
    int k = oa.factors;
    Imofs p;
    p.n = n;
    p.s = s;
    p.squares.assign(k, FrequencySquare{n, std::vector<Row>(n, 0)});

    int rr = static_cast<int>(oa.rows.size());
    long long t = 0;
    for (int pp = 0; pp < n / 2; ++pp)
        for (int qq = 0; qq < n / 2; ++qq) {
            if (pp < s / 2 && qq < s / 2) continue;
            const auto& row = oa.rows[t % rr];
            ++t;
            for (int i = 0; i < k; ++i) {
                int v = row[i];
                if (v) {
                    p.squares[i].rows[2 * pp] |= col_bit(2 * qq);
                    p.squares[i].rows[2 * pp + 1] |= col_bit(2 * qq + 1);
                } else {
                    p.squares[i].rows[2 * pp] |= col_bit(2 * qq + 1);
                    p.squares[i].rows[2 * pp + 1] |= col_bit(2 * qq);
                }
            }
        }
    if (t != cells / 4) throw TilingFailed("tiled " + std::to_string(t) + " blocks, expected " +
                                           std::to_string(cells / 4));
    ValidationReport rep = validate_imofs(p);
    if (!rep.valid) throw TilingFailed("frame failed validation: " + rep.failures[0]);
    return p;
}

MofsSet plug(const Imofs& p, const MofsSet& inner) {
    if (inner.n != p.s)
        throw ShapeMismatch("hole has size " + std::to_string(p.s) + ", inner set has order " +
                            std::to_string(inner.n));
    if (inner.k() != p.k())
        throw ShapeMismatch("frame has " + std::to_string(p.k()) + " squares, inner set " +
                            std::to_string(inner.k()));
    MofsSet out;
    out.n = p.n;
    out.squares = p.squares;
    for (int i = 0; i < p.k(); ++i)
        for (int r = 0; r < p.s; ++r)
            out.squares[i].rows[r] |= inner.squares[i].rows[r];
    ValidationReport rep = verify_mofs(out);
    if (!rep.valid) throw Error("plugged set failed verification: " + rep.failures[0]);
    return out;
}

}  // namespace mofs
