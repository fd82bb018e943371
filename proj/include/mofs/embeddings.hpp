#ifndef MOFS_EMBEDDINGS_HPP
#define MOFS_EMBEDDINGS_HPP

#include <array>
#include <vector>

#include "mofs/constructions.hpp"
#include "mofs/core.hpp"

namespace mofs {

// Incomplete MOFS with an empty s x s top-left hole. Hole bits are stored as
// zero and excluded from every balance and orthogonality count.
struct Imofs {
    int n = 0;
    int s = 0;
    std::vector<FrequencySquare> squares;

    int k() const { return static_cast<int>(squares.size()); }
    bool in_hole(int r, int c) const { return r < s && c < s; }
};

// [[r, r'], [r', r]] where r' complements the low `width` bits.
std::array<std::array<Row, 2>, 2> i_block(Row r, int width);

// Filled rows/columns balanced per square; every ordered pair equally
// frequent over filled cells for every square pair.
ValidationReport validate_imofs(const Imofs& p);

// 2-IMOFS(n; n-2): fixed 4x4 corner block padded with I(00) along the bottom
// rows and I(01) along the right columns.
Imofs two_imofs(int n);

// Bottom-right 2x2 of the superposed pair: each ordered pair exactly once and
// complementary pairs only on diagonals.
bool corner_structure_check(const Imofs& p);

struct NoThreeImofsReport {
    int frame_count = 0;     // balanced single squares with the (n; n-2) hole
    bool pair_exists = false;
    bool triple_exists = false;
};

// Exhausts all hole-respecting fillings; a 3-IMOFS(n; n-2) would be a
// triangle in the orthogonality graph on single frames.
NoThreeImofsReport no_three_imofs_witness(int n);

// Tiles the non-hole cells of an (n; n-2b) frame with I-blocks drawn from the
// OA rows in row-major cycling order.
Imofs fill_imofs(int n, int b, const OrthogonalArray2& oa);

// Fills the hole of p with s, giving a k-MOFS(n).
MofsSet plug(const Imofs& p, const MofsSet& inner);

}  // namespace mofs

#endif
