#ifndef MOFS_TRADES_HPP
#define MOFS_TRADES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

using Cell = std::pair<int, int>;  // (row, col), 0-based
using CellList = std::vector<Cell>;

// Per-square cell sets; switching C_i in square i must yield a valid set.
// Cell lists are kept sorted row-major. The fingerprint records the set the
// trade was validated against, so switching a mutated set fails loudly.
struct TradeSpec {
    std::vector<CellList> cell_sets;
    bool basic = true;
    std::uint64_t fingerprint = 0;

    std::vector<int> switched() const;  // squares with nonempty cell set
};

class NotATrade : public Error {
public:
    int condition;        // 1 = cell-set balance, 2 = outside-square overlap,
                          // 0 = defining switch-and-verify test
    std::string witness;
    NotATrade(int cond, const std::string& w)
        : Error("NotATrade: condition " + std::to_string(cond) + ", " + w),
          condition(cond), witness(w) {}
};

std::uint64_t set_fingerprint(const MofsSet& s);

// Basic trade on a common cell set C. Squares are grouped by agreement
// pattern on C (squares agreeing or anti-agreeing everywhere on C share a
// group); the first group, by least member index, that satisfies both switch
// conditions becomes the switched set. Throws EmptyCellSet / NotATrade.
TradeSpec validate_basic_trade(const MofsSet& s, const CellList& cells);

std::optional<TradeSpec> try_validate_basic_trade(const MofsSet& s,
                                                  const CellList& cells);

// General trade from explicit per-square cell sets, validated by the defining
// test: switch, then verify_mofs.
TradeSpec make_trade(const MofsSet& s, const std::vector<CellList>& cell_sets);

MofsSet switch_trade(const MofsSet& s, const TradeSpec& t);

// The full-board trade plus, for each j > 1, the agreement-set and
// disagreement-set trades between F_1 and F_j: 1 + 2(k-1) trades.
std::vector<TradeSpec> trivial_trades(const MofsSet& s);

// All (n/2)^4 intercalates of F_1 meeting all four of its constant blocks.
// Requires every square to have all row pairs equal or complementary.
std::vector<TradeSpec> intercalate_trades(const MofsSet& s);

// T_{r,c} = {(r,c),(r,c+n/2),(r+n/2,c),(r+n/2,c+n/2)} for 1 <= r,c < n/2
// (0-based), pairwise disjoint. Requires a standardized set.
std::vector<TradeSpec> disjoint_trade_family(const MofsSet& s);

// Applies the family trades selected by mask (bit t = family[t]), re-validating
// each against the current set, in ascending bit order.
MofsSet generate_variants(const MofsSet& s, unsigned long long mask);

}  // namespace mofs

#endif
