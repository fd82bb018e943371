#include "mofs/relations.hpp"

#include <algorithm>

namespace mofs {

std::optional<std::pair<Row, Row>> block_structure(const BitMatrix& m) {
    int n = m.n;
    Row full = row_mask(n);
    Row x2 = m.rows[0];
    for (int r = 1; r < n; ++r)
        if (m.rows[r] != x2 && m.rows[r] != (x2 ^ full)) return std::nullopt;
    Row x1 = 0;
    for (int r = 0; r < n; ++r)
        if (m.rows[r] != x2) x1 |= Row{1} << r;

    auto better = [](std::pair<Row, Row> p, std::pair<Row, Row> q) {
        int pb = popcount(p.second), qb = popcount(q.second);
        if (pb != qb) return pb < qb;
        int pa = popcount(p.first), qa = popcount(q.first);
        if (pa != qa) return pa > qa;
        return p.first < q.first;
    };
    std::pair<Row, Row> cand{x1, x2}, alt{x1 ^ full, x2 ^ full};
    return better(alt, cand) ? alt : cand;
}

namespace {

std::optional<Relation> relation_for_subset(const MofsSet& s,
                                            const std::vector<int>& subset) {
    BitMatrix m = z2_subset_sum(s, subset);
    auto bs = block_structure(m);
    if (!bs) return std::nullopt;
    Relation rel;
    rel.x1 = bs->first;
    rel.x2 = bs->second;
    rel.squares = subset;
    rel.kind = static_cast<int>(subset.size()) == s.k() ? RelationKind::Full
                                                        : RelationKind::NonTrivial;
    return rel;
}

}  // namespace

std::optional<Relation> find_relation(const MofsSet& s, bool full_only) {
    int k = s.k();
    if (k > 24) throw SubsetScanTooLarge("k = " + std::to_string(k));
    if (k == 0) return std::nullopt;
    if (full_only) {
        std::vector<int> all(k);
        for (int i = 0; i < k; ++i) all[i] = i;
        return relation_for_subset(s, all);
    }
    for (int sz = 1; sz <= k; ++sz) {
        std::vector<int> idx(sz);
        for (int i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            if (auto rel = relation_for_subset(s, idx)) return rel;
            int i = sz - 1;
            while (i >= 0 && idx[i] == k - sz + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Feasibility relation_feasibility(int k, int lambda, int a, int b) {
    if (k < 1 || lambda < 1 || a < 0 || b < 0 || a > 2 * lambda || b > 2 * lambda)
        throw OutOfRange("relation_feasibility parameters");
    Feasibility f;
    if (lambda % 2 == 1 && k % 4 != 1) {
        f.feasible = false;
        f.reason = FeasibilityReason::KNotOneMod4;
        f.detail = "odd lambda admits a full relation only when k = 1 (mod 4)";
        return f;
    }
    int p = (lambda * k) % 2;
    if (a % 2 != p || b % 2 != p) {
        f.feasible = false;
        f.reason = FeasibilityReason::SizeParity;
        f.detail = "|X1| and |X2| must be congruent to lambda*k mod 2";
        return f;
    }
    if (lambda % 2 == 1) {
        int want = (k % 8 == 1) ? 1 : 3;
        if ((a * b) % 4 != want) {
            f.feasible = false;
            f.reason = FeasibilityReason::ProductParity;
            f.detail = "|X1||X2| must be " + std::to_string(want) +
                       " (mod 4) when k = " + std::to_string(k % 8) + " (mod 8)";
            return f;
        }
    }
    return f;
}

MaximalityCertificate certify_maximal(const MofsSet& s) {
    MaximalityCertificate cert;
    int lambda = s.n / 2;
    if (s.k() % 2 == 0 || lambda % 2 == 0) return cert;
    auto rel = find_relation(s, true);
    if (rel) {
        cert.certified = true;
        cert.witness = rel;
    }
    return cert;
}

namespace {

FrequencySquare square_from_rows(int n, std::vector<Row> rows) {
    FrequencySquare f;
    f.n = n;
    f.rows = std::move(rows);
    return f;
}

MofsSet expand_block_grid(const int pat[4][4], const int szr[4], const int szc[4],
                          int k) {
    std::vector<std::vector<unsigned long long>> ent;
    for (int bi = 0; bi < 4; ++bi)
        for (int t = 0; t < szr[bi]; ++t) {
            std::vector<unsigned long long> row;
            for (int bj = 0; bj < 4; ++bj)
                row.insert(row.end(), szc[bj],
                           static_cast<unsigned long long>(pat[bi][bj]));
            ent.push_back(std::move(row));
        }
    return decode_superposition(ent, k);
}

}  // namespace

MofsSet construct_small_k(int k, int lambda, int a, int b) {
    int n = 2 * lambda;
    if (lambda < 1 || a < 0 || b < 0 || a > n || b > n)
        throw InfeasibleParameters("parameters out of range");
    if (k == 1) {
        if (a != lambda || b != lambda)
            throw InfeasibleParameters("k=1 requires a = b = lambda");
        Row top = row_mask(lambda) << lambda;
        Row bot = row_mask(lambda);
        MofsSet s;
        s.n = n;
        std::vector<Row> rows(lambda, top);
        rows.insert(rows.end(), lambda, bot);
        s.squares.push_back(square_from_rows(n, rows));
        return s;
    }
    if (k == 2) {
        if (lambda % 2 || a % 2 || b % 2 || (a != lambda && b != lambda))
            throw InfeasibleParameters(
                "k=2 requires lambda, a, b even and a = lambda or b = lambda");
        static const int pat[4][4] = {
            {0b00, 0b11, 0b01, 0b10},
            {0b11, 0b00, 0b10, 0b01},
            {0b01, 0b10, 0b00, 0b11},
            {0b10, 0b01, 0b11, 0b00}};
        int szr[4] = {a / 2, a / 2, lambda - a / 2, lambda - a / 2};
        int szc[4] = {b / 2, b / 2, lambda - b / 2, lambda - b / 2};
        return expand_block_grid(pat, szr, szc, 2);
    }
    if (k == 3) {
        if (lambda % 2 || a % 2 || b % 2)
            throw InfeasibleParameters("k=3 requires lambda, a, b even");
        static const int bgrid[4][4] = {
            {0b000, 0b011, 0b101, 0b110},
            {0b110, 0b101, 0b011, 0b000},
            {0b101, 0b110, 0b000, 0b011},
            {0b011, 0b000, 0b110, 0b101}};
        auto bblock = [&](int y1, int y2, bool comp) {
            std::vector<std::vector<unsigned long long>> ent;
            int szr[4] = {(y1 + 2) / 4, (y1 + 2) / 4, y1 / 4, y1 / 4};
            int szc[4] = {(y2 + 2) / 4, (y2 + 2) / 4, y2 / 4, y2 / 4};
            for (int bi = 0; bi < 4; ++bi)
                for (int t = 0; t < szr[bi]; ++t) {
                    std::vector<unsigned long long> row;
                    for (int bj = 0; bj < 4; ++bj) {
                        unsigned long long v = bgrid[bi][bj];
                        if (comp) v ^= 7;
                        row.insert(row.end(), szc[bj], v);
                    }
                    ent.push_back(std::move(row));
                }
            return ent;
        };
        auto tl = bblock(a, b, false);
        auto tr = bblock(a, n - b, true);
        auto bl = bblock(n - a, b, true);
        auto br = bblock(n - a, n - b, false);
        std::vector<std::vector<unsigned long long>> ent;
        for (int r = 0; r < a; ++r) {
            auto row = tl[r];
            row.insert(row.end(), tr[r].begin(), tr[r].end());
            ent.push_back(std::move(row));
        }
        for (int r = 0; r < n - a; ++r) {
            auto row = bl[r];
            row.insert(row.end(), br[r].begin(), br[r].end());
            ent.push_back(std::move(row));
        }
        return decode_superposition(ent, 3);
    }
    throw InfeasibleParameters("k must be 1, 2 or 3");
}

bool relation_holds(const MofsSet& s, const Relation& rel) {
    for (int r = 0; r < s.n; ++r)
        for (int c = 0; c < s.n; ++c) {
            int sum = row_bit(rel.x1, r) + row_bit(rel.x2, c);
            for (int i : rel.squares) sum += s.squares[i].at(r, c);
            if (sum % 2) return false;
        }
    return true;
}

namespace {

std::string index_list(Row mask, int n) {
    std::string out;
    for (int i = 0; i < n; ++i)
        if (row_bit(mask, i)) {
            if (!out.empty()) out += ',';
            out += std::to_string(i + 1);
        }
    return out.empty() ? "-" : out;
}

}  // namespace

std::string relation_line(const Relation& rel, int n) {
    std::string sq;
    for (int i : rel.squares) {
        if (!sq.empty()) sq += ',';
        sq += std::to_string(i + 1);
    }
    if (sq.empty()) sq = "-";
    return "relation a=" + std::to_string(rel.a()) +
           " b=" + std::to_string(rel.b()) +
           " rows=" + index_list(rel.x1, n) +
           " cols=" + index_list(rel.x2, n) +
           " squares=" + sq +
           " full=" + (rel.kind == RelationKind::Full ? "1" : "0");
}

}  // namespace mofs
