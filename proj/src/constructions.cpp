#include "mofs/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "mofs/data.hpp"
#include "mofs/embeddings.hpp"
#include "mofs/errors.hpp"
#include "mofs/search.hpp"
#include "seed_grids.inc"

namespace mofs {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

using Grid = std::vector<std::vector<int>>;

Grid sylvester_double(const Grid& h) {
    int m = static_cast<int>(h.size());
    Grid out(2 * m, std::vector<int>(2 * m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            out[r][c] = h[r][c];
            out[r][c + m] = h[r][c];
            out[r + m][c] = h[r][c];
            out[r + m][c + m] = -h[r][c];
        }
    return out;
}

// chi(a-b) over GF(q): +1 for nonzero squares, -1 for non-squares, 0 on the
// diagonal
Grid jacobsthal(int q) {
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
    Grid m(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) m[a][b] = chi[((a - b) % q + q) % q];
    return m;
}

Grid paley1(int q) {
    Grid qm = jacobsthal(q);
    int n = q + 1;
    Grid h(n, std::vector<int>(n, 1));
    for (int a = 0; a < q; ++a) {
        h[a + 1][0] = -1;
        for (int b = 0; b < q; ++b)
            h[a + 1][b + 1] = qm[a][b] + (a == b ? 1 : 0);
    }
    return h;
}

Grid paley2(int q) {
    Grid qm = jacobsthal(q);
    int m = q + 1;
    Grid s(m, std::vector<int>(m, 0));
    for (int i = 1; i < m; ++i) {
        s[0][i] = 1;
        s[i][0] = 1;
        for (int j = 1; j < m; ++j) s[i][j] = qm[i - 1][j - 1];
    }
    int n = 2 * m;
    Grid h(n, std::vector<int>(n));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int blk[2][2];
            if (a == b) {
                blk[0][0] = 1; blk[0][1] = -1; blk[1][0] = -1; blk[1][1] = -1;
            } else {
                int sign = s[a][b] == 1 ? 1 : -1;
                blk[0][0] = sign; blk[0][1] = sign; blk[1][0] = sign; blk[1][1] = -sign;
            }
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) h[2 * a + i][2 * b + j] = blk[i][j];
        }
    return h;
}

Grid kron(const Grid& a, const Grid& b) {
    int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
    Grid out(da * db, std::vector<int>(da * db));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int r = 0; r < db; ++r)
                for (int c = 0; c < db; ++c)
                    out[i * db + r][j * db + c] = a[i][j] * b[r][c];
    return out;
}

std::optional<Grid> construct_hadamard(int n) {
    if (n == 1) return Grid{{1}};
    if (n == 2) return Grid{{1, 1}, {1, -1}};
    if (n % 4 != 0) return std::nullopt;
    if (auto half = construct_hadamard(n / 2)) return sylvester_double(*half);
    if (is_prime(n - 1) && (n - 1) % 4 == 3) return paley1(n - 1);
    if (is_prime(n / 2 - 1) && (n / 2 - 1) % 4 == 1) return paley2(n / 2 - 1);
    for (int d = 4; d * d <= n; d += 4) {
        if (n % d != 0) continue;
        auto a = construct_hadamard(d);
        if (!a) continue;
        auto b = construct_hadamard(n / d);
        if (b) return kron(*a, *b);
    }
    return std::nullopt;
}

void normalize(Grid& h) {
    int n = static_cast<int>(h.size());
    for (int c = 0; c < n; ++c)
        if (h[0][c] < 0)
            for (int r = 0; r < n; ++r) h[r][c] = -h[r][c];
    for (int r = 0; r < n; ++r)
        if (h[r][0] < 0)
            for (int c = 0; c < n; ++c) h[r][c] = -h[r][c];
}

std::vector<std::vector<unsigned long long>> int_grid(const int* data, int rows, int cols) {
    std::vector<std::vector<unsigned long long>> g(rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            g[r].push_back(static_cast<unsigned long long>(data[r * cols + c]));
    return g;
}

}  // namespace

bool HadamardMatrix::normalized() const {
    for (int c = 0; c < n; ++c)
        if (h[0][c] != 1) return false;
    for (int r = 0; r < n; ++r)
        if (h[r][0] != 1) return false;
    return true;
}

HadamardMatrix hadamard(int n) {
    if (n <= 0) throw OrderNotSupported("order must be positive");
    auto g = construct_hadamard(n);
    if (!g)
        throw OrderNotSupported("no doubling, Paley, or product chain reaches order " +
                                std::to_string(n));
    normalize(*g);
    HadamardMatrix m{n, std::move(*g)};
    if (!hadamard_check(m))
        throw OrderNotSupported("generated matrix failed the H*Ht check at order " +
                                std::to_string(n));
    return m;
}

bool hadamard_check(const HadamardMatrix& m) {
    if (static_cast<int>(m.h.size()) != m.n) return false;
    for (const auto& row : m.h) {
        if (static_cast<int>(row.size()) != m.n) return false;
        for (int v : row)
            if (v != 1 && v != -1) return false;
    }
    for (int a = 0; a < m.n; ++a)
        for (int b = a; b < m.n; ++b) {
            long long dot = 0;
            for (int c = 0; c < m.n; ++c) dot += m.h[a][c] * m.h[b][c];
            if (dot != (a == b ? m.n : 0)) return false;
        }
    return true;
}

OrthogonalArray2 oa_from_hadamard(const HadamardMatrix& m) {
    if (m.n < 4) throw BadOrder("orthogonal array extraction needs order 4 or more");
    if (!m.normalized()) throw NotNormalized("hadamard matrix must be normalized");
    OrthogonalArray2 oa;
    oa.factors = m.n - 1;
    oa.lambda = m.n / 4;
    oa.rows.assign(m.n, std::vector<int>(m.n - 1));
    for (int r = 0; r < m.n; ++r)
        for (int c = 1; c < m.n; ++c) oa.rows[r][c - 1] = (m.h[r][c] + 1) / 2;
    return oa;
}

OrthogonalArray2 restrict_columns(const OrthogonalArray2& oa, int factors) {
    if (factors < 1 || factors > oa.factors)
        throw OutOfRange("cannot restrict " + std::to_string(oa.factors) +
                         " columns to " + std::to_string(factors));
    OrthogonalArray2 out;
    out.factors = factors;
    out.lambda = oa.lambda;
    for (const auto& row : oa.rows)
        out.rows.emplace_back(row.begin(), row.begin() + factors);
    return out;
}

bool oa_check(const OrthogonalArray2& oa) {
    if (static_cast<int>(oa.rows.size()) != 4 * oa.lambda) return false;
    for (const auto& row : oa.rows)
        if (static_cast<int>(row.size()) != oa.factors) return false;
    for (int i = 0; i < oa.factors; ++i)
        for (int j = i + 1; j < oa.factors; ++j) {
            int cnt[4] = {0, 0, 0, 0};
            for (const auto& row : oa.rows) ++cnt[2 * row[i] + row[j]];
            for (int t = 0; t < 4; ++t)
                if (cnt[t] != oa.lambda) return false;
        }
    return true;
}

MofsSet complete_from_hadamard(const HadamardMatrix& m) {
    if (m.n < 2) throw BadOrder("complete sets need order 2 or more");
    if (!m.normalized()) throw NotNormalized("hadamard matrix must be normalized");
    int n = m.n;
    std::vector<int> rord(n);
    for (int i = 0; i < n; ++i) rord[i] = i;
    std::stable_sort(rord.begin(), rord.end(),
                     [&](int a, int b) { return (m.h[1][a] < 0) < (m.h[1][b] < 0); });
    MofsSet out;
    out.n = n;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            FrequencySquare f;
            f.n = n;
            f.rows.assign(n, 0);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (m.h[i][rord[r]] * m.h[j][rord[c]] < 0) f.rows[r] |= col_bit(c);
            out.squares.push_back(std::move(f));
        }
    return out;
}

FrequencySquare bachelor_square(int n) {
    if (n <= 0 || n % 2 != 0) throw OddOrder("bachelor square needs a positive even order");
    int lam = n / 2;
    Row bottom = row_mask(lam);
    Row top = bottom << lam;
    FrequencySquare f;
    f.n = n;
    f.rows.assign(lam, top);
    f.rows.insert(f.rows.end(), lam, bottom);
    return f;
}

namespace {

bool is_bachelor_layout(const FrequencySquare& b) {
    std::set<Row> vals(b.rows.begin(), b.rows.end());
    if (vals.size() != 2) return false;
    auto it = vals.begin();
    Row x = *it++;
    Row y = *it;
    return (x ^ y) == row_mask(b.n);
}

std::optional<std::vector<std::pair<int, int>>> pair_rows(const FrequencySquare& b) {
    int n = b.n, lam = n / 2;
    if (is_bachelor_layout(b)) {
        if (lam % 2) return std::nullopt;
        std::map<Row, std::vector<int>> groups;
        for (int r = 0; r < n; ++r) groups[b.rows[r]].push_back(r);
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [val, g] : groups)
            for (size_t i = 0; i + 1 < g.size(); i += 2) pairs.push_back({g[i], g[i + 1]});
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    }
    Row full = row_mask(n);
    std::vector<std::vector<char>> bad(n, std::vector<char>(n));
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2) bad[r1][r2] = (b.rows[r1] ^ b.rows[r2]) == full;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> bool {
        int r1 = -1;
        for (int r = 0; r < n; ++r)
            if (!used[r]) { r1 = r; break; }
        if (r1 < 0) return true;
        used[r1] = 1;
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            if (used[r2] || bad[r1][r2]) continue;
            used[r2] = 1;
            pairs.push_back({r1, r2});
            if (self(self)) return true;
            pairs.pop_back();
            used[r2] = 0;
        }
        used[r1] = 0;
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return pairs;
}

}  // namespace

FrequencySquare orthogonal_mate(const FrequencySquare& b) {
    int n = b.n, lam = n / 2;
    if (!is_balanced(b)) throw RowUnbalanced("mate construction needs a balanced square");
    auto pairs = pair_rows(b);
    if (!pairs) {
        if (is_bachelor_layout(b) && lam % 2)
            throw IsBachelor("no mate exists for the bachelor square of order " +
                             std::to_string(n));
        throw Error("row pairing failed");
    }
    FrequencySquare mate;
    mate.n = n;
    mate.rows.assign(n, 0);
    for (const auto& [r1, r2] : *pairs) {
        std::vector<int> buckets[4];  // 1a, 1b, 2a, 2b
        for (int c = 0; c < n; ++c) {
            int x = b.at(r1, c), y = b.at(r2, c);
            int which = x == y ? x : 2 + x;
            buckets[which].push_back(c);
        }
        int t1a = static_cast<int>(buckets[0].size());
        int t2a = static_cast<int>(buckets[2].size());
        int half2a = (t2a + 1) / 2;
        int quota[4] = {lam - t1a / 2 - 2 * half2a, t1a / 2, half2a, half2a};
        Row two_a = 0;
        for (int t = 0; t < 4; ++t)
            for (int j = 0; j < quota[t]; ++j) two_a |= col_bit(buckets[t][j]);
        mate.rows[r2] = two_a;
        mate.rows[r1] = row_mask(n) ^ two_a;
    }
    return mate;
}

namespace {

std::vector<std::vector<unsigned long long>> five_max_grid(int kappa) {
    int n = 4 * kappa + 2;
    const long long none = -1;
    std::vector<std::vector<long long>> grid(n, std::vector<long long>(n, none));

    int rows6[6] = {0, 1, 2, 3, 4, 2 * kappa + 3};
    int cols6[6] = {0, 1, 2, 2 * kappa + 1, 2 * kappa + 2, 2 * kappa + 3};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            grid[rows6[i]][cols6[j]] = seeds::kFiveMaxBase[i][j];

    auto put_array = [&grid](const int cols[4], const int arr[4][4], bool comp) {
        for (int r = 0; r < 4; ++r)
            for (int j = 0; j < 4; ++j)
                grid[r][cols[j]] = comp ? arr[r][j] ^ 31 : arr[r][j];
    };

    int x2free = 3;
    int x2pfree = 2 * kappa + 4;
    int acopies, s1count, s2count;
    if (kappa % 4 == 1 || kappa % 4 == 2) {
        acopies = kappa - 1;
        s1count = kappa - 1;
        s2count = (kappa * kappa + kappa - 2) / 4 - kappa + 1;
    } else {
        int bcols[4] = {3, 4, 5, 6};
        put_array(bcols, seeds::kFiveMaxSeedB, true);
        int bcols2[4] = {x2pfree, x2pfree + 1, x2pfree + 2, x2pfree + 3};
        put_array(bcols2, seeds::kFiveMaxSeedB, false);
        x2free += 4;
        x2pfree += 4;
        acopies = kappa - 3;
        s1count = kappa - 3;
        s2count = (kappa * kappa - 3 * kappa + 8) / 4;
    }
    for (int t = 0; t < acopies; ++t) {
        int acols[4] = {x2free, x2free + 1, x2pfree, x2pfree + 1};
        put_array(acols, seeds::kFiveMaxSeedA, false);
        x2free += 2;
        x2pfree += 2;
    }

    std::vector<int> seed_first;
    for (int r = 0; r < 4; ++r) seed_first.push_back(seeds::kFiveMaxSeedA[r][0]);
    std::vector<int> even, non_a_even;
    for (int v = 0; v < 32; ++v)
        if (__builtin_popcount(v) % 2 == 0) {
            even.push_back(v);
            if (std::find(seed_first.begin(), seed_first.end(), v) == seed_first.end())
                non_a_even.push_back(v);
        }

    std::vector<int> fills;
    for (int r : non_a_even) fills.insert(fills.end(), s1count, r);
    for (int r : even) fills.insert(fills.end(), s2count, r);

    size_t next = 0;
    for (int i = 1; i < 2 * kappa; ++i)
        for (int j = 1; j < 2 * kappa + 2; ++j) {
            if (i == 1 && j <= 3) continue;
            int r = fills[next++];
            int u = 3 + i, v = 2 * kappa + 2 + i;
            int x = j - 1, y = 2 * kappa + j;
            grid[u][x] = r;
            grid[u][y] = r ^ 31;
            grid[v][x] = r ^ 31;
            grid[v][y] = r;
        }

    std::vector<std::vector<unsigned long long>> out(n, std::vector<unsigned long long>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (grid[r][c] == none) throw Error("five_max grid left a cell unfilled");
            out[r][c] = static_cast<unsigned long long>(grid[r][c]);
        }
    return out;
}

}  // namespace

FiveMaxResult five_max(int n) {
    if (n < 6 || n % 4 != 2)
        throw BadOrder("five_max needs n congruent to 2 mod 4, n >= 6");
    int kappa = (n - 2) / 4;
    FiveMaxResult res;
    if (kappa == 1) {
        res.set = decode_superposition(int_grid(&seeds::kFiveMaxBase[0][0], 6, 6), 5);
    } else {
        res.set = decode_superposition(five_max_grid(kappa), 5);
    }
    ValidationReport rep = verify_mofs(res.set);
    if (!rep.valid) throw Error("five_max output failed verification: " + rep.failures[0]);
    auto rel = find_relation(res.set, true);
    if (!rel) throw Error("five_max output has no full relation");
    res.relation = *rel;
    res.certificate = certify_maximal(res.set);
    return res;
}

MofsSet seventeen(int n) { return seventeen(n, nullptr); }

MofsSet seventeen(int n, SeventeenSchedule* schedule) {
    if (n < 6 || n % 4 != 2)
        throw BadOrder("seventeen needs n congruent to 2 mod 4, n >= 6");
    if (n == 6) {
        if (schedule) *schedule = {6, 0, 0};
        return bundled_set("17-mofs-6-01");
    }
    if (n == 10) {
        if (schedule) *schedule = {10, 0, 0};
        std::vector<std::vector<unsigned long long>> row_pair(2);
        for (int band = 0; band < 2; ++band)
            for (int c = 0; c < 10; ++c)
                row_pair[band].push_back(
                    static_cast<unsigned long long>(seeds::kCircRows17[band][c]));
        return reconstruct_block_circulant(10, row_pair, 17);
    }
    int m, bb, lamstar;
    if (n <= 34) {
        bb = (n - 10) / 2;
        lamstar = (bb / 2) * (5 + bb / 2);
        m = 10;
    } else {
        m = (n - 6) % 32 + 6;
        bb = (n - m) / 2;
        lamstar = 8;
    }
    if (schedule) *schedule = {m, bb, lamstar};
    OrthogonalArray2 oa = restrict_columns(oa_from_hadamard(hadamard(4 * lamstar)), 17);
    Imofs frame = fill_imofs(n, bb, oa);
    MofsSet inner = seventeen(m);
    MofsSet out = plug(frame, inner);
    return out;
}

}  // namespace mofs
