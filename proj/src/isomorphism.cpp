#include "mofs/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mofs {

MofsSet apply_isomorphism(const MofsSet& s, const Isomorphism& iso) {
    int n = s.n, k = s.k();
    if (static_cast<int>(iso.row_perm.size()) != n ||
        static_cast<int>(iso.col_perm.size()) != n ||
        static_cast<int>(iso.complemented.size()) != k ||
        static_cast<int>(iso.square_perm.size()) != k)
        throw DimensionMismatch();

    std::vector<FrequencySquare> work;
    work.reserve(k);
    for (int i = 0; i < k; ++i) {
        FrequencySquare sq = iso.transposed ? transpose(s.squares[i]) : s.squares[i];
        FrequencySquare out;
        out.n = n;
        out.rows.assign(n, 0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (sq.at(iso.row_perm[r], iso.col_perm[c]))
                    out.rows[r] |= Row{1} << c;
        if (iso.complemented[i]) out = complement(out);
        work.push_back(std::move(out));
    }
    MofsSet result;
    result.n = n;
    result.squares.reserve(k);
    for (int j = 0; j < k; ++j) result.squares.push_back(work[iso.square_perm[j]]);
    return result;
}

namespace {

using Enc = unsigned __int128;

struct CanonState {
    int n = 0, k = 0;
    bool has_best = false;
    std::vector<Enc> best;
    // per variant (2*i+comp): permuted row masks and column vectors
    std::vector<std::vector<int>> rowsof;
    std::vector<std::vector<int>> vecs;
};

Enc encode_square(const std::vector<int>& rows, const std::vector<int>& colord, int n) {
    Enc s = 0;
    for (int m : rows) {
        int v = 0;
        for (int c : colord) v = (v << 1) | ((m >> c) & 1);
        s = (s << n) | static_cast<unsigned>(v);
    }
    return s;
}

void rec(CanonState& st, const std::vector<std::vector<int>>& partition,
         unsigned used, int used_count, std::vector<Enc>& acc) {
    if (st.has_best) {
        size_t len = acc.size();
        bool greater = false, decided = false;
        for (size_t i = 0; i < len; ++i) {
            if (acc[i] != st.best[i]) {
                greater = acc[i] > st.best[i];
                decided = true;
                break;
            }
        }
        if (decided && greater) return;
    }
    if (used_count == st.k) {
        if (!st.has_best || acc < st.best) {
            st.best = acc;
            st.has_best = true;
        }
        return;
    }

    struct Cand { int i, idx; Enc s; };
    std::vector<Cand> cands;
    cands.reserve(2 * (st.k - used_count));
    std::vector<int> colord;
    colord.reserve(st.n);
    for (int i = 0; i < st.k; ++i) {
        if (used & (1u << i)) continue;
        for (int comp = 0; comp < 2; ++comp) {
            int idx = 2 * i + comp;
            const std::vector<int>& vv = st.vecs[idx];
            colord.clear();
            for (const auto& grp : partition) {
                size_t start = colord.size();
                colord.insert(colord.end(), grp.begin(), grp.end());
                std::stable_sort(colord.begin() + start, colord.end(),
                                 [&](int a, int b) { return vv[a] < vv[b]; });
            }
            cands.push_back({i, idx, encode_square(st.rowsof[idx], colord, st.n)});
        }
    }
    Enc mn = cands[0].s;
    for (const Cand& c : cands) mn = std::min(mn, c.s);

    std::set<std::pair<std::vector<int>, int>> seen;
    for (const Cand& c : cands) {
        if (c.s != mn) continue;
        const std::vector<int>& vv = st.vecs[c.idx];
        std::vector<std::vector<int>> newpart;
        std::vector<int> key;
        for (const auto& grp : partition) {
            std::map<int, std::vector<int>> bygrp;
            for (int col : grp) bygrp[vv[col]].push_back(col);
            for (auto& [val, cols] : bygrp) {
                (void)val;
                newpart.push_back(cols);
                key.insert(key.end(), cols.begin(), cols.end());
                key.push_back(-1);
            }
        }
        if (!seen.insert({key, c.i}).second) continue;
        acc.push_back(c.s);
        rec(st, newpart, used | (1u << c.i), used_count + 1, acc);
        acc.pop_back();
    }
}

void leaf(CanonState& st, const std::vector<FrequencySquare>& cur,
          const std::vector<int>& roword) {
    int n = st.n, k = st.k;
    st.rowsof.assign(2 * k, {});
    st.vecs.assign(2 * k, {});
    int mask = (1 << n) - 1;
    for (int i = 0; i < k; ++i) {
        for (int comp = 0; comp < 2; ++comp) {
            int idx = 2 * i + comp;
            std::vector<int>& rows = st.rowsof[idx];
            rows.reserve(n);
            for (int r : roword) {
                int m = static_cast<int>(cur[i].rows[r]);
                rows.push_back(comp ? (~m & mask) : m);
            }
            std::vector<int>& vv = st.vecs[idx];
            vv.assign(n, 0);
            for (int c = 0; c < n; ++c) {
                int v = 0;
                for (int m : rows) v = (v << 1) | ((m >> c) & 1);
                vv[c] = v;
            }
        }
    }
    std::vector<std::vector<int>> partition(1, std::vector<int>(n));
    std::iota(partition[0].begin(), partition[0].end(), 0);
    std::vector<Enc> acc;
    acc.reserve(k);
    rec(st, partition, 0, 0, acc);
}

}  // namespace

std::vector<unsigned __int128> canonical_encoding(const MofsSet& s) {
    if (s.n > 10) throw OrderTooLarge("canonical form bounded at order 10");
    if (s.k() > 31) throw OrderTooLarge("canonical form bounded at 31 squares");
    CanonState st;
    st.n = s.n;
    st.k = s.k();
    for (int t = 0; t < 2; ++t) {
        std::vector<FrequencySquare> cur;
        cur.reserve(s.k());
        for (const auto& sq : s.squares) cur.push_back(t ? transpose(sq) : sq);
        std::vector<int> perm(s.n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            leaf(st, cur, perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return st.best;
}

std::string canonical_form(const MofsSet& s) {
    std::vector<Enc> enc = canonical_encoding(s);
    int width = (s.n * s.n + 3) / 4;
    std::string out;
    for (size_t i = 0; i < enc.size(); ++i) {
        if (i) out += ':';
        std::string hex(width, '0');
        Enc v = enc[i];
        for (int d = width - 1; d >= 0; --d) {
            hex[d] = "0123456789abcdef"[static_cast<int>(v & 15)];
            v >>= 4;
        }
        out += hex;
    }
    return out;
}

bool are_isomorphic(const MofsSet& a, const MofsSet& b) {
    if (a.n != b.n || a.k() != b.k()) return false;
    return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace mofs
