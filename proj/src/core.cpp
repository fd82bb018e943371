#include "mofs/core.hpp"

#include <algorithm>

namespace mofs {

long long SuperpositionProfile::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

long long SuperpositionProfile::ones() const {
    long long t = 0;
    for (int i = 0; i <= k; ++i) t += static_cast<long long>(i) * counts[i];
    return t;
}

long long SuperpositionProfile::pair_overlaps() const {
    long long t = 0;
    for (int i = 0; i <= k; ++i)
        t += static_cast<long long>(i) * (i - 1) / 2 * counts[i];
    return t;
}

FrequencySquare new_frequency_square(const std::vector<std::vector<int>>& matrix) {
    int n = static_cast<int>(matrix.size());
    if (n == 0 || n % 2 != 0) throw OddOrder("order " + std::to_string(n));
    FrequencySquare f;
    f.n = n;
    f.rows.reserve(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(matrix[r].size()) != n)
            throw RowUnbalanced("row " + std::to_string(r + 1) + " has wrong length");
        Row m = 0;
        for (int c = 0; c < n; ++c) {
            if (matrix[r][c] != 0 && matrix[r][c] != 1)
                throw EntryOutOfRange("cell (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + ") not binary");
            if (matrix[r][c]) m |= Row{1} << c;
        }
        if (popcount(m) != n / 2)
            throw RowUnbalanced("row " + std::to_string(r + 1));
        f.rows.push_back(m);
    }
    for (int c = 0; c < n; ++c) {
        int cnt = 0;
        for (int r = 0; r < n; ++r) cnt += f.at(r, c);
        if (cnt != n / 2) throw ColUnbalanced("column " + std::to_string(c + 1));
    }
    return f;
}

bool is_balanced(const FrequencySquare& f) {
    int n = f.n, h = n / 2;
    if (static_cast<int>(f.rows.size()) != n || n == 0 || n % 2) return false;
    Row mask = row_mask(n);
    for (Row r : f.rows)
        if ((r & ~mask) != 0 || popcount(r) != h) return false;
    for (int c = 0; c < n; ++c) {
        int cnt = 0;
        for (int r = 0; r < n; ++r) cnt += f.at(r, c);
        if (cnt != h) return false;
    }
    return true;
}

PairReport verify_pair(const FrequencySquare& f, const FrequencySquare& g) {
    if (f.n != g.n) throw OrderMismatch();
    int n = f.n;
    Row mask = row_mask(n);
    PairReport rep;
    for (int r = 0; r < n; ++r) {
        Row a = f.rows[r], b = g.rows[r];
        rep.c11 += popcount(a & b);
        rep.c10 += popcount(a & ~b & mask);
        rep.c01 += popcount(~a & b & mask);
        rep.c00 += popcount(~a & ~b & mask);
    }
    long long q = static_cast<long long>(n) * n / 4;
    rep.orthogonal = rep.c00 == q && rep.c01 == q && rep.c10 == q && rep.c11 == q;
    return rep;
}

bool are_orthogonal(const FrequencySquare& f, const FrequencySquare& g) {
    int n = f.n;
    long long c11 = 0;
    for (int r = 0; r < n; ++r) c11 += popcount(f.rows[r] & g.rows[r]);
    return c11 == static_cast<long long>(n) * n / 4;
}

ValidationReport verify_mofs(const MofsSet& s) {
    ValidationReport rep;
    int k = s.k();
    for (int i = 0; i < k; ++i) {
        if (s.squares[i].n != s.n) {
            rep.valid = false;
            rep.failures.push_back("square " + std::to_string(i + 1) + ": order mismatch");
            continue;
        }
        if (!is_balanced(s.squares[i])) {
            rep.valid = false;
            rep.failures.push_back("square " + std::to_string(i + 1) + ": not balanced");
        }
    }
    if (!rep.valid) return rep;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!are_orthogonal(s.squares[i], s.squares[j])) {
                rep.valid = false;
                rep.failures.push_back("squares " + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ": not orthogonal");
            }
    return rep;
}

bool verify_triple(const FrequencySquare& f1, const FrequencySquare& f2,
                   const FrequencySquare& f3) {
    if (f1.n != f2.n || f1.n != f3.n) throw OrderMismatch();
    int n = f1.n;
    long long x[8] = {};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            ++x[4 * f1.at(r, c) + 2 * f2.at(r, c) + f3.at(r, c)];
    return x[0] == x[3] && x[0] == x[5] && x[0] == x[6] &&
           x[1] == x[2] && x[1] == x[4] && x[1] == x[7];
}

MofsSet decode_superposition(const std::vector<std::vector<unsigned long long>>& entries,
                             int k) {
    int n = static_cast<int>(entries.size());
    unsigned long long limit =
        k >= 64 ? ~0ULL : (1ULL << k);
    MofsSet s;
    s.n = n;
    s.squares.assign(k, FrequencySquare{n, std::vector<Row>(n, 0)});
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(entries[r].size()) != n)
            throw EntryOutOfRange("row " + std::to_string(r + 1) + " has wrong length");
        for (int c = 0; c < n; ++c) {
            unsigned long long e = entries[r][c];
            if (k < 64 && e >= limit)
                throw EntryOutOfRange("cell (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + ")");
            for (int i = 1; i <= k; ++i)
                if ((e >> (k - i)) & 1ULL)
                    s.squares[i - 1].rows[r] |= Row{1} << c;
        }
    }
    return s;
}

std::vector<std::vector<unsigned long long>> encode_superposition(const MofsSet& s) {
    int n = s.n, k = s.k();
    std::vector<std::vector<unsigned long long>> out(n,
        std::vector<unsigned long long>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            unsigned long long e = 0;
            for (int i = 0; i < k; ++i)
                e |= static_cast<unsigned long long>(s.squares[i].at(r, c))
                     << (k - 1 - i);
            out[r][c] = e;
        }
    return out;
}

BitMatrix z2_subset_sum(const MofsSet& s, const std::vector<int>& subset) {
    if (subset.empty()) throw EmptySubset();
    BitMatrix m;
    m.n = s.n;
    m.rows.assign(s.n, 0);
    for (int i : subset) {
        if (i < 0 || i >= s.k()) throw OutOfRange("square index");
        for (int r = 0; r < s.n; ++r) m.rows[r] ^= s.squares[i].rows[r];
    }
    return m;
}

SuperpositionProfile superposition_profile(const MofsSet& s) {
    SuperpositionProfile p;
    p.n = s.n;
    p.k = s.k();
    p.counts.assign(p.k + 1, 0);
    for (int r = 0; r < s.n; ++r)
        for (int c = 0; c < s.n; ++c) {
            int cnt = 0;
            for (int i = 0; i < p.k; ++i) cnt += s.squares[i].at(r, c);
            ++p.counts[cnt];
        }
    return p;
}

FrequencySquare transpose(const FrequencySquare& f) {
    FrequencySquare t;
    t.n = f.n;
    t.rows.assign(f.n, 0);
    for (int r = 0; r < f.n; ++r)
        for (int c = 0; c < f.n; ++c)
            if (f.at(r, c)) t.rows[c] |= Row{1} << r;
    return t;
}

FrequencySquare complement(const FrequencySquare& f) {
    FrequencySquare g = f;
    Row mask = row_mask(f.n);
    for (Row& r : g.rows) r = ~r & mask;
    return g;
}

MofsSet standardize(const MofsSet& s) {
    MofsSet out = s;
    for (auto& sq : out.squares)
        if (sq.at(0, 0)) sq = complement(sq);
    return out;
}

bool is_standardized(const MofsSet& s) {
    for (const auto& sq : s.squares)
        if (sq.at(0, 0)) return false;
    return true;
}

}  // namespace mofs
