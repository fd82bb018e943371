#ifndef MOFS_CORE_HPP
#define MOFS_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mofs/errors.hpp"

namespace mofs {

// One row of a binary frequency square, bit c = column c (0-based).
// 128 bits cover every order this toolkit constructs, including the
// recursive embeddings of order 70.
using Row = unsigned __int128;

inline int popcount(Row x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
           __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

inline Row row_mask(int n) {
    return n >= 128 ? ~Row{0} : (Row{1} << n) - 1;
}

inline int row_bit(Row r, int c) { return static_cast<int>((r >> c) & 1); }

inline Row col_bit(int c) { return Row{1} << c; }

// Binary frequency square of type F(n; n/2): every row and column holds
// each symbol exactly n/2 times.
struct FrequencySquare {
    int n = 0;
    std::vector<Row> rows;

    int at(int r, int c) const { return row_bit(rows[r], c); }
    bool operator==(const FrequencySquare&) const = default;
};

struct MofsSet {
    int n = 0;
    std::vector<FrequencySquare> squares;

    int k() const { return static_cast<int>(squares.size()); }
    bool operator==(const MofsSet&) const = default;
};

struct BitMatrix {
    int n = 0;
    std::vector<Row> rows;

    int at(int r, int c) const { return row_bit(rows[r], c); }
    bool operator==(const BitMatrix&) const = default;
};

struct PairReport {
    long long c00 = 0, c01 = 0, c10 = 0, c11 = 0;
    bool orthogonal = false;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> failures;
};

// counts[i] = number of cells where exactly i of the k squares hold a 1.
struct SuperpositionProfile {
    int n = 0;
    int k = 0;
    std::vector<long long> counts;

    long long total() const;        // sum of counts, must be n^2
    long long ones() const;         // sum of i*counts[i], must be k*n^2/2
    long long pair_overlaps() const;  // sum of C(i,2)*counts[i]
};

// Validates shape and balance; throws OddOrder / RowUnbalanced / ColUnbalanced.
FrequencySquare new_frequency_square(const std::vector<std::vector<int>>& matrix);

bool is_balanced(const FrequencySquare& f);

PairReport verify_pair(const FrequencySquare& f, const FrequencySquare& g);

bool are_orthogonal(const FrequencySquare& f, const FrequencySquare& g);

ValidationReport verify_mofs(const MofsSet& s);

// True iff the eight triple-superposition counts collapse to the two values
// forced by mutual orthogonality: x000=x011=x101=x110 and x001=x010=x100=x111.
bool verify_triple(const FrequencySquare& f1, const FrequencySquare& f2,
                   const FrequencySquare& f3);

// Decimal superposition: entry bit (k-i) belongs to square i (1-based), so
// square 1 is the most significant bit. 27 decodes to 11011.
MofsSet decode_superposition(const std::vector<std::vector<unsigned long long>>& entries,
                             int k);

std::vector<std::vector<unsigned long long>> encode_superposition(const MofsSet& s);

// Z2 sum of the chosen squares cellwise; subset indices are 0-based.
BitMatrix z2_subset_sum(const MofsSet& s, const std::vector<int>& subset);

SuperpositionProfile superposition_profile(const MofsSet& s);

FrequencySquare transpose(const FrequencySquare& f);
FrequencySquare complement(const FrequencySquare& f);

// Complements every square with a 1 at cell (1,1) so that F_i(1,1) = 0.
MofsSet standardize(const MofsSet& s);

bool is_standardized(const MofsSet& s);

}  // namespace mofs

#endif
