#ifndef MOFS_RELATIONS_HPP
#define MOFS_RELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

enum class RelationKind { Trivial, NonTrivial, Full };

// A relation on a subset of squares: the Z2 sum over `squares` equals the
// block pattern [r in X1] xor [c in X2] at every cell.
struct Relation {
    Row x1 = 0;                 // bit r = row r+1
    Row x2 = 0;                 // bit c = column c+1
    std::vector<int> squares;   // participating squares, 0-based
    RelationKind kind = RelationKind::NonTrivial;

    int a() const { return popcount(x1); }
    int b() const { return popcount(x2); }
};

struct MaximalityCertificate {
    bool certified = false;
    std::optional<Relation> witness;
};

enum class FeasibilityReason {
    None,
    KNotOneMod4,     // lambda odd and k != 1 (mod 4): no full relation exists
    SizeParity,      // |X1| or |X2| differs from lambda*k mod 2
    ProductParity,   // lambda odd: |X1||X2| mod 4 clashes with k mod 8
};

struct Feasibility {
    bool feasible = true;
    FeasibilityReason reason = FeasibilityReason::None;
    std::string detail;
};

// Decomposes M as M[r][c] = [r in X1] xor [c in X2]. Such a decomposition
// exists iff every row equals row 1 or its complement. Of the two equivalent
// (X1, X2) choices the smaller |X2| wins, then the larger |X1|, then the
// numerically least X1 mask.
std::optional<std::pair<Row, Row>> block_structure(const BitMatrix& m);

// Scans nonempty subsets by size then lexicographic order and returns the
// first block-structured Z2 sum; with fullOnly set, tests only the full set.
std::optional<Relation> find_relation(const MofsSet& s, bool full_only = false);

// Parity obstructions for a full (a,b)-relation on a k-MOFS(2*lambda).
Feasibility relation_feasibility(int k, int lambda, int a, int b);

// Certified iff k odd, lambda odd, and a full relation exists.
MaximalityCertificate certify_maximal(const MofsSet& s);

// k-MOFS(2*lambda) realizing a full (a,b)-relation for k in {1,2,3}.
MofsSet construct_small_k(int k, int lambda, int a, int b);

// True iff [r in X1] + [c in X2] + sum of the relation's squares is even at
// every cell.
bool relation_holds(const MofsSet& s, const Relation& rel);

// `relation a=.. b=.. rows=.. cols=.. squares=.. full=0|1` with 1-based
// comma-separated lists, '-' when empty.
std::string relation_line(const Relation& rel, int n);

}  // namespace mofs

#endif
