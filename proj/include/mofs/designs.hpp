#ifndef MOFS_DESIGNS_HPP
#define MOFS_DESIGNS_HPP

#include <string>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

// Blocks are sorted point lists (0-based); classes index into blocks.
struct ResolvableDesign {
    int points = 0;
    int block_size = 0;
    int pair_index = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> classes;
};

struct DesignReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// For each square, the two blocks are the column sets holding 0 and 1 in the
// first row; each square contributes one parallel class. Complete input gives
// a resolvable (n, n/2, (n-1)(n-2)/2)-design.
ResolvableDesign design_from_complete(const MofsSet& s);

DesignReport verify_design(const ResolvableDesign& d);

// After complementing squares so that every square holds 1 at cell (1,1),
// the Z2 sum of a complete set is the all-ones matrix.
bool standardized_z2_allones(const MofsSet& s);

enum class CompleteVerdict { ConditionalYes, Impossible };

struct CompleteMofsAnswer {
    CompleteVerdict verdict = CompleteVerdict::Impossible;
    std::string reason;
};

// Impossible when n/2 is odd (no resolvable design with those parameters can
// exist); otherwise conditional on a Hadamard matrix of order n.
CompleteMofsAnswer complete_mofs_possible(int n);

// Exhaustive multiset search over the ten parallel-class types on six points.
bool resolvable_6_3_10_exists();

}  // namespace mofs

#endif
