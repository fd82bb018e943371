#ifndef MOFS_ISOMORPHISM_HPP
#define MOFS_ISOMORPHISM_HPP

#include <string>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

// Equivalence move on a MOFS set: optional transpose applied to every square,
// a common row and column permutation, per-square complementation, and a
// reordering of the squares.
struct Isomorphism {
    bool transposed = false;
    std::vector<int> row_perm;         // output row r reads input row row_perm[r]
    std::vector<int> col_perm;
    std::vector<bool> complemented;    // indexed by input square
    std::vector<int> square_perm;      // output slot j holds input square square_perm[j]
};

MofsSet apply_isomorphism(const MofsSet& s, const Isomorphism& iso);

// Lexicographically least encoding over transpose x row perms x column perms
// x per-square complement x square order. The encoding concatenates per-square
// row-major bit strings (first row, then first column, most significant).
// Exponential in n; guarded by OrderTooLarge above order 10.
std::vector<unsigned __int128> canonical_encoding(const MofsSet& s);

// canonical_encoding rendered as fixed-width lowercase hex blocks joined by ':'.
std::string canonical_form(const MofsSet& s);

bool are_isomorphic(const MofsSet& a, const MofsSet& b);

}  // namespace mofs

#endif
