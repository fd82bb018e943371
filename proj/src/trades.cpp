#include "mofs/trades.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mofs/errors.hpp"

namespace mofs {

namespace {

std::string cell_str(const Cell& c) {
    return "(" + std::to_string(c.first + 1) + "," + std::to_string(c.second + 1) + ")";
}

CellList sorted_cells(CellList cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

void check_cells_in_range(int n, const CellList& cells) {
    for (const auto& [r, c] : cells) {
        if (r < 0 || r >= n || c < 0 || c >= n)
            throw OutOfRange("cell " + cell_str({r, c}) + " outside order " + std::to_string(n));
    }
}

// Groups squares by agreement pattern on the cells: two squares share a group
// when one agrees with the other on every cell or disagrees on every cell.
std::vector<std::vector<int>> trade_groups(const MofsSet& s, const CellList& cells) {
    int k = s.k();
    std::vector<std::vector<int>> pats(k);
    for (int i = 0; i < k; ++i) {
        pats[i].reserve(cells.size());
        for (const auto& [r, c] : cells) pats[i].push_back(s.squares[i].at(r, c));
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> assigned(k, 0);
    for (int i = 0; i < k; ++i) {
        if (assigned[i]) continue;
        std::vector<int> grp{i};
        assigned[i] = 1;
        for (int j = i + 1; j < k; ++j) {
            if (assigned[j]) continue;
            bool all_eq = true, all_ne = true;
            for (size_t t = 0; t < cells.size(); ++t) {
                if (pats[i][t] == pats[j][t]) all_ne = false;
                else all_eq = false;
            }
            if (all_eq || all_ne) {
                grp.push_back(j);
                assigned[j] = 1;
            }
        }
        groups.push_back(std::move(grp));
    }
    return groups;
}

// Condition 1: the anchor square meets the cells in equally many zeros and
// ones within every row and every column they touch.
bool group_condition1(const MofsSet& s, const CellList& cells, int anchor,
                      std::string* witness) {
    std::map<int, std::pair<int, int>> row_cnt, col_cnt;
    for (const auto& [r, c] : cells) {
        int v = s.squares[anchor].at(r, c);
        auto& rc = row_cnt[r];
        auto& cc = col_cnt[c];
        (v ? rc.second : rc.first)++;
        (v ? cc.second : cc.first)++;
    }
    for (const auto& [r, cnt] : row_cnt) {
        if (cnt.first != cnt.second) {
            if (witness)
                *witness = "square " + std::to_string(anchor + 1) + " row " +
                           std::to_string(r + 1) + " meets " + std::to_string(cnt.first) +
                           " zeros and " + std::to_string(cnt.second) + " ones";
            return false;
        }
    }
    for (const auto& [c, cnt] : col_cnt) {
        if (cnt.first != cnt.second) {
            if (witness)
                *witness = "square " + std::to_string(anchor + 1) + " column " +
                           std::to_string(c + 1) + " meets " + std::to_string(cnt.first) +
                           " zeros and " + std::to_string(cnt.second) + " ones";
            return false;
        }
    }
    return true;
}

// Condition 2: every square outside the group overlaps the anchor's ones and
// zeros on the cells equally often with its own ones.
bool group_condition2(const MofsSet& s, const CellList& cells,
                      const std::vector<int>& grp, std::string* witness) {
    int anchor = grp[0];
    std::set<int> inside(grp.begin(), grp.end());
    for (int j = 0; j < s.k(); ++j) {
        if (inside.count(j)) continue;
        int c11 = 0, c01 = 0;
        for (const auto& [r, c] : cells) {
            if (s.squares[j].at(r, c) != 1) continue;
            (s.squares[anchor].at(r, c) ? c11 : c01)++;
        }
        if (c11 != c01) {
            if (witness)
                *witness = "square " + std::to_string(j + 1) + " has " + std::to_string(c11) +
                           " ones over anchor ones but " + std::to_string(c01) +
                           " over anchor zeros";
            return false;
        }
    }
    return true;
}

MofsSet switch_cells(const MofsSet& s, const std::vector<CellList>& cell_sets) {
    MofsSet out = s;
    for (int i = 0; i < s.k(); ++i) {
        for (const auto& [r, c] : cell_sets[i])
            out.squares[i].rows[r] ^= col_bit(c);
    }
    return out;
}

TradeSpec finish_trade(const MofsSet& s, std::vector<CellList> cell_sets, bool basic) {
    TradeSpec t;
    t.cell_sets = std::move(cell_sets);
    t.basic = basic;
    t.fingerprint = set_fingerprint(s);
    return t;
}

}  // namespace

std::vector<int> TradeSpec::switched() const {
    std::vector<int> out;
    for (size_t i = 0; i < cell_sets.size(); ++i)
        if (!cell_sets[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

std::uint64_t set_fingerprint(const MofsSet& s) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(s.n));
    mix(static_cast<std::uint64_t>(s.k()));
    for (const auto& sq : s.squares)
        for (Row row : sq.rows) {
            mix(static_cast<std::uint64_t>(row));
            mix(static_cast<std::uint64_t>(row >> 64));
        }
    return h;
}

TradeSpec validate_basic_trade(const MofsSet& s, const CellList& cells_in) {
    if (cells_in.empty()) throw EmptyCellSet("basic trade needs at least one cell");
    CellList cells = sorted_cells(cells_in);
    check_cells_in_range(s.n, cells);

    auto groups = trade_groups(s, cells);
    std::string w1, w2;
    std::string first_w1, first_w2;
    for (const auto& grp : groups) {
        bool ok1 = group_condition1(s, cells, grp[0], &w1);
        bool ok2 = ok1 && group_condition2(s, cells, grp, &w2);
        if (ok1 && ok2) {
            std::vector<CellList> cell_sets(s.k());
            for (int i : grp) cell_sets[i] = cells;
            MofsSet sw = switch_cells(s, cell_sets);
            ValidationReport rep = verify_mofs(sw);
            if (!rep.valid)
                throw NotATrade(0, "switched set fails verification: " + rep.failures[0]);
            return finish_trade(s, std::move(cell_sets), true);
        }
        if (first_w1.empty() && first_w2.empty()) {
            if (!ok1) first_w1 = w1;
            else first_w2 = w2;
        }
    }
    if (!first_w1.empty()) throw NotATrade(1, first_w1);
    throw NotATrade(2, first_w2);
}

std::optional<TradeSpec> try_validate_basic_trade(const MofsSet& s, const CellList& cells) {
    try {
        return validate_basic_trade(s, cells);
    } catch (const NotATrade&) {
        return std::nullopt;
    }
}

TradeSpec make_trade(const MofsSet& s, const std::vector<CellList>& cell_sets_in) {
    if (static_cast<int>(cell_sets_in.size()) != s.k())
        throw OrderMismatch("trade lists cell sets for " + std::to_string(cell_sets_in.size()) +
                            " squares, set has " + std::to_string(s.k()));
    std::vector<CellList> cell_sets;
    cell_sets.reserve(cell_sets_in.size());
    bool any = false;
    for (const auto& cl : cell_sets_in) {
        check_cells_in_range(s.n, cl);
        cell_sets.push_back(sorted_cells(cl));
        if (!cell_sets.back().empty()) any = true;
    }
    if (!any) throw EmptyCellSet("trade needs at least one nonempty cell set");

    MofsSet sw = switch_cells(s, cell_sets);
    ValidationReport rep = verify_mofs(sw);
    if (!rep.valid)
        throw NotATrade(0, "switched set fails verification: " + rep.failures[0]);

    bool basic = true;
    const CellList* common = nullptr;
    for (const auto& cl : cell_sets) {
        if (cl.empty()) continue;
        if (!common) common = &cl;
        else if (*common != cl) { basic = false; break; }
    }
    return finish_trade(s, std::move(cell_sets), basic);
}

MofsSet switch_trade(const MofsSet& s, const TradeSpec& t) {
    if (static_cast<int>(t.cell_sets.size()) != s.k())
        throw OrderMismatch("trade lists cell sets for " + std::to_string(t.cell_sets.size()) +
                            " squares, set has " + std::to_string(s.k()));
    if (t.fingerprint != set_fingerprint(s))
        throw StaleTrade("trade was validated against a different set");
    MofsSet out = switch_cells(s, t.cell_sets);
    ValidationReport rep = verify_mofs(out);
    if (!rep.valid) throw StaleTrade("switched set fails verification: " + rep.failures[0]);
    return out;
}

std::vector<TradeSpec> trivial_trades(const MofsSet& s) {
    int n = s.n, k = s.k();
    if (k < 2) throw PreconditionFailed("trivial trades need at least two squares");
    std::vector<TradeSpec> out;

    CellList board;
    board.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) board.push_back({r, c});
    out.push_back(validate_basic_trade(s, board));

    for (int j = 1; j < k; ++j) {
        CellList agree, differ;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (s.squares[0].at(r, c) == s.squares[j].at(r, c)) agree.push_back({r, c});
                else differ.push_back({r, c});
            }
        out.push_back(validate_basic_trade(s, agree));
        out.push_back(validate_basic_trade(s, differ));
    }
    return out;
}

std::vector<TradeSpec> intercalate_trades(const MofsSet& s) {
    int n = s.n;
    for (int i = 0; i < s.k(); ++i) {
        const auto& rows = s.squares[i].rows;
        Row full = row_mask(n);
        for (int r = 1; r < n; ++r) {
            if (rows[r] != rows[0] && rows[r] != (rows[0] ^ full)) {
                for (int r1 = 0; r1 < r; ++r1)
                    if (rows[r1] != rows[r] && rows[r1] != (rows[r] ^ full))
                        throw PreconditionFailed(
                            "square " + std::to_string(i + 1) + " rows " + std::to_string(r1 + 1) +
                            " and " + std::to_string(r + 1) + " are neither equal nor complementary");
            }
        }
    }

    const auto& f1 = s.squares[0];
    std::vector<int> r0, r1, c0, c1;
    for (int r = 0; r < n; ++r)
        (f1.rows[r] == f1.rows[0] ? r0 : r1).push_back(r);
    for (int c = 0; c < n; ++c)
        (f1.at(0, c) == 0 ? c0 : c1).push_back(c);

    std::vector<TradeSpec> out;
    out.reserve(static_cast<size_t>(r0.size()) * r1.size() * c0.size() * c1.size());
    for (int ra : r0)
        for (int rb : r1)
            for (int ca : c0)
                for (int cb : c1)
                    out.push_back(validate_basic_trade(
                        s, CellList{{ra, ca}, {ra, cb}, {rb, ca}, {rb, cb}}));
    return out;
}

std::vector<TradeSpec> disjoint_trade_family(const MofsSet& s) {
    int n = s.n, h = n / 2;
    if (!is_standardized(s))
        throw NotStandardized("disjoint trade family needs a standardized set");
    std::vector<TradeSpec> out;
    out.reserve(static_cast<size_t>(h - 1) * (h - 1));
    for (int r = 1; r < h; ++r)
        for (int c = 1; c < h; ++c)
            out.push_back(validate_basic_trade(
                s, CellList{{r, c}, {r, c + h}, {r + h, c}, {r + h, c + h}}));
    return out;
}

MofsSet generate_variants(const MofsSet& s, unsigned long long mask) {
    int h = s.n / 2;
    int count = (h - 1) * (h - 1);
    if (count < 64 && mask >> count)
        throw OutOfRange("variant mask has bits beyond the " + std::to_string(count) +
                         " family trades");
    auto family = disjoint_trade_family(s);
    MofsSet cur = s;
    for (int t = 0; t < count; ++t) {
        if (!(mask >> t & 1ull)) continue;
        TradeSpec tr = validate_basic_trade(cur, family[t].cell_sets[family[t].switched()[0]]);
        cur = switch_trade(cur, tr);
    }
    return cur;
}

}  // namespace mofs
