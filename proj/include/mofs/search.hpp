#ifndef MOFS_SEARCH_HPP
#define MOFS_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mofs/core.hpp"

namespace mofs {

// Raw mode: every balanced square, row-major backtracking order.
// Class mode: one canonical representative per isomorphism class.
std::vector<FrequencySquare> enumerate_squares(int n, bool up_to_equivalence);

// Every balanced square orthogonal to all members of s, in backtracking
// order. An empty result proves s maximal.
std::vector<FrequencySquare> mates(const MofsSet& s, int threads = 1);

struct MateGraph {
    std::vector<FrequencySquare> vertices;  // standardized mates, sorted
    std::vector<std::vector<std::uint64_t>> adj;  // bitset rows

    bool edge(int u, int v) const { return adj[u][v >> 6] >> (v & 63) & 1; }
    int degree(int v) const;
    bool edge_in_triangle(int u, int v) const;
};

MateGraph mate_graph(const MofsSet& pair, int threads = 1);

struct CliqueResult {
    std::vector<std::vector<int>> cliques;  // maximal cliques of size >= t
    bool complete = true;                   // false when the budget ran out
    std::uint64_t nodes = 0;
};

// Pivoted Bron-Kerbosch over a degeneracy ordering with a greedy-coloring
// cutoff. `budget` caps expanded nodes; exceeding it flags a partial result.
CliqueResult cliques_at_least(const MateGraph& g, int t,
                              std::uint64_t budget = 0);

bool is_maximal(const MofsSet& s);

// Expands rows 1 and 6 of each superposed square into the four cyclic 5x5
// blocks. row_pair holds the two rows of k-bit entries.
MofsSet reconstruct_block_circulant(int n,
                                    const std::vector<std::vector<unsigned long long>>& row_pair,
                                    int k);

struct BlockCirculantResult {
    std::vector<MofsSet> sets;
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Backtracking over the balanced block-circulant squares of order 10 with
// pairwise-orthogonality pruning. The relation filter requires the finished
// set's Z2 sum to equal the top-band/left-block pattern of a (5,5)-relation.
BlockCirculantResult block_circulant_search(int n, int k, bool relation_55,
                                            std::uint64_t budget,
                                            std::size_t max_sets = 1);

struct CensusRow {
    int index = 0;
    std::string canon;
    int vertex_count = 0;
    int min_degree = 0;
    std::uint64_t cliques15 = 0;
    bool complete = true;
};

// One entry per isomorphism class of 2-MOFS(6), sorted by canonical form.
std::vector<MofsSet> pair_classes_order6(int threads = 1);

// Resumable batch over pair classes: processes up to `batch` unfinished rows,
// merging with any checkpoint at path (versioned, header-hashed). Returns all
// finished rows.
std::vector<CensusRow> run_census(const std::string& checkpoint_path,
                                  int batch, std::uint64_t clique_budget,
                                  int threads = 1,
                                  const std::function<void(const CensusRow&)>& progress = {});

}  // namespace mofs

#endif
