#ifndef MOFS_CONSTRUCTIONS_HPP
#define MOFS_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "mofs/core.hpp"
#include "mofs/relations.hpp"

namespace mofs {

struct HadamardMatrix {
    int n = 0;
    std::vector<std::vector<int>> h;  // entries +1 / -1

    bool normalized() const;
};

// Binary orthogonal array with 4*lambda rows: every column pair carries each
// of the four ordered bit pairs exactly lambda times.
struct OrthogonalArray2 {
    int factors = 0;   // column count k*
    int lambda = 0;    // index lambda*
    std::vector<std::vector<int>> rows;  // 4*lambda rows of 0/1
};

// Sylvester doubling, Paley I/II, and Kronecker products, normalized.
// Throws OrderNotSupported when no chain reaches n.
HadamardMatrix hadamard(int n);

bool hadamard_check(const HadamardMatrix& m);

// Drops the all-ones first column of a normalized H and maps +1 -> 1, -1 -> 0,
// giving a (2, n-1, n/4) orthogonal array.
OrthogonalArray2 oa_from_hadamard(const HadamardMatrix& m);

OrthogonalArray2 restrict_columns(const OrthogonalArray2& oa, int factors);

bool oa_check(const OrthogonalArray2& oa);

// Complete (n-1)^2-MOFS(n): F_{i,j}[r,c] = (1 - H[i,r] H[j,c]) / 2 for
// i,j >= 1, rows and columns reordered so the first square lands in the
// sorted block layout. Output is standardized.
MofsSet complete_from_hadamard(const HadamardMatrix& m);

// The unique square with a non-trivial single-square relation: an all-ones
// top-right and bottom-left block of size n/2.
FrequencySquare bachelor_square(int n);

// Builds a mate via row pairing and column-type quotas. Throws IsBachelor
// when b is isomorphic to the bachelor square of odd half-order.
FrequencySquare orthogonal_mate(const FrequencySquare& b);

struct FiveMaxResult {
    MofsSet set;
    Relation relation;
    MaximalityCertificate certificate;
};

// 5-maxMOFS(n) for n = 4*kappa + 2 with a full (2*kappa+3, 2*kappa+1)-relation.
FiveMaxResult five_max(int n);

struct SeventeenSchedule {
    int base = 0;      // order of the plugged sub-MOFS
    int b = 0;         // hole margin, s = n - 2b
    int lambda = 0;    // OA index used for the frame, 0 when no frame
};

MofsSet seventeen(int n);
MofsSet seventeen(int n, SeventeenSchedule* schedule);

}  // namespace mofs

#endif
