#include "mofs/designs.hpp"

#include <algorithm>
#include <numeric>

#include "mofs/errors.hpp"

namespace mofs {

ResolvableDesign design_from_complete(const MofsSet& s) {
    int n = s.n, k = s.k();
    if (n < 2 || n % 2) throw OddOrder("design extraction needs a positive even order");
    if (k != (n - 1) * (n - 1))
        throw NotComplete("design extraction needs all (n-1)^2 squares");

    ResolvableDesign d;
    d.points = n;
    d.block_size = n / 2;
    d.pair_index = (n - 1) * (n - 2) / 2;
    for (const auto& sq : s.squares) {
        std::vector<int> zeros, ones;
        for (int c = 0; c < n; ++c) (sq.at(0, c) ? ones : zeros).push_back(c);
        int base = static_cast<int>(d.blocks.size());
        d.blocks.push_back(std::move(zeros));
        d.blocks.push_back(std::move(ones));
        d.classes.push_back({base, base + 1});
    }
    return d;
}

DesignReport verify_design(const ResolvableDesign& d) {
    DesignReport rep;
    auto fail = [&](const std::string& msg) {
        rep.valid = false;
        rep.violations.push_back(msg);
    };

    int v = d.points;
    if (v <= 0) fail("point count must be positive");
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& blk = d.blocks[b];
        if (static_cast<int>(blk.size()) != d.block_size)
            fail("block " + std::to_string(b + 1) + " has the wrong size");
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] < 0 || blk[i] >= v)
                fail("block " + std::to_string(b + 1) + " holds an out-of-range point");
            if (i && blk[i] <= blk[i - 1])
                fail("block " + std::to_string(b + 1) + " is not strictly increasing");
        }
    }

    for (std::size_t c = 0; c < d.classes.size(); ++c) {
        std::vector<int> cover(std::max(v, 0), 0);
        bool in_range = true;
        for (int b : d.classes[c]) {
            if (b < 0 || b >= static_cast<int>(d.blocks.size())) {
                fail("class " + std::to_string(c + 1) + " references a missing block");
                in_range = false;
                continue;
            }
            for (int p : d.blocks[b])
                if (p >= 0 && p < v) ++cover[p];
        }
        if (in_range &&
            !std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }))
            fail("class " + std::to_string(c + 1) + " does not partition the points");
    }

    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            int cnt = 0;
            for (const auto& blk : d.blocks) {
                bool hx = std::find(blk.begin(), blk.end(), x) != blk.end();
                bool hy = std::find(blk.begin(), blk.end(), y) != blk.end();
                cnt += hx && hy;
            }
            if (cnt != d.pair_index)
                fail("pair (" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
                     ") lies in " + std::to_string(cnt) + " blocks, expected " +
                     std::to_string(d.pair_index));
        }
    return rep;
}

bool standardized_z2_allones(const MofsSet& s) {
    if (s.k() == 0) throw EmptySubset("need at least one square");
    MofsSet adj = s;
    for (auto& sq : adj.squares)
        if (sq.at(0, 0) == 0) sq = complement(sq);
    std::vector<int> all(adj.k());
    std::iota(all.begin(), all.end(), 0);
    BitMatrix sum = z2_subset_sum(adj, all);
    Row full = row_mask(s.n);
    return std::all_of(sum.rows.begin(), sum.rows.end(),
                       [&](Row r) { return r == full; });
}

CompleteMofsAnswer complete_mofs_possible(int n) {
    if (n <= 2 || n % 2) throw BadOrder("question is posed for even orders above 2");
    CompleteMofsAnswer ans;
    if ((n / 2) % 2) {
        ans.verdict = CompleteVerdict::Impossible;
        ans.reason = "a full set would force a resolvable design that cannot exist "
                     "when n/2 is odd";
    } else {
        ans.verdict = CompleteVerdict::ConditionalYes;
        ans.reason = "a full set exists exactly when a Hadamard matrix of order " +
                     std::to_string(n) + " does";
    }
    return ans;
}

bool resolvable_6_3_10_exists() {
    // A parallel class on six points splits into a triple and its complement;
    // index the ten types by the triple containing point 0.
    std::vector<unsigned> types;
    for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) types.push_back(1u | 1u << a | 1u << b);

    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) pairs.push_back({x, y});

    std::vector<std::vector<int>> cov;
    for (unsigned t : types) {
        unsigned tc = 0x3fu & ~t;
        std::vector<int> row;
        for (auto [x, y] : pairs) {
            unsigned p = 1u << x | 1u << y;
            row.push_back((p & ~t) == 0 || (p & ~tc) == 0 ? 1 : 0);
        }
        cov.push_back(std::move(row));
    }

    bool found = false;
    std::vector<int> residual(15, 10);
    auto dfs = [&](auto&& self, int i, int total) -> void {
        if (found) return;
        if (total > 25) return;
        if (i == 10) {
            if (total == 25 &&
                std::all_of(residual.begin(), residual.end(),
                            [](int r) { return r == 0; }))
                found = true;
            return;
        }
        int lim = 25 - total;
        for (int j = 0; j < 15; ++j)
            if (cov[i][j]) lim = std::min(lim, residual[j]);
        for (int cnt = 0; cnt <= lim && !found; ++cnt) {
            for (int j = 0; j < 15; ++j) residual[j] -= cnt * cov[i][j];
            self(self, i + 1, total + cnt);
            for (int j = 0; j < 15; ++j) residual[j] += cnt * cov[i][j];
        }
    };
    dfs(dfs, 0, 0);
    return found;
}

}  // namespace mofs
