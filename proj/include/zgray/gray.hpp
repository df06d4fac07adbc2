#pragma once

#include <cstdint>
#include <vector>

#include "zgray/additive_code.hpp"
#include "zgray/ring.hpp"

namespace zgray {

// Per-symbol table of the generalized Gray map from Z_{2^L} to Z_2^{2^(L-1)}:
// the image of v is the all-v_L vector XOR (v_1, ..., v_{L-1}) Y, where the
// columns of Y enumerate Z_2^(L-1). The default column order is big-endian
// counting with row 1 holding the most significant bit; any other column
// order yields the same images up to a fixed coordinate permutation.
class GrayTable {
public:
    // Requires L >= 2 (the map is undefined at L = 1).
    static GrayTable build(int level);
    static GrayTable build_with_column_order(int level, const std::vector<std::uint32_t>& cols);

    int level() const { return level_; }
    std::size_t symbol_width() const { return std::size_t(1) << (level_ - 1); }
    const BitVector& image(std::uint32_t symbol) const { return images_.at(symbol); }
    const std::vector<BitVector>& y_rows() const { return y_rows_; }

private:
    GrayTable(int level, std::vector<BitVector> y_rows);

    int level_;
    std::vector<BitVector> y_rows_;   // L-1 rows of width 2^(L-1)
    std::vector<BitVector> images_;   // 2^L symbol images
};

BitVector gray(const RingVector& v, const GrayTable& t);

struct GrayImage {
    int level = 0;
    std::size_t source_length = 0;
    std::vector<BitVector> words;  // sorted, |words| = |C|

    bool contains(const BitVector& w) const;
};

GrayImage gray_image(const AdditiveCode& code, const GrayTable& t,
                     std::uint64_t budget = kDefaultBudget);

std::uint64_t lee_weight(const RingVector& v);

// delta[i] counts coordinates equal to i, i in [0, 2^L - 1].
std::vector<std::size_t> delta_profile(const RingVector& v);

// Closed forms of the Lee weight and of the Hamming weight of the Gray image
// in terms of the symbol counts; both require L >= 2.
std::uint64_t lee_weight_via_deltas(const RingVector& v);
std::uint64_t gray_hamming_weight_via_deltas(const RingVector& v);

// True iff w_H(gray(v)) equals the Lee weight of v, decided by the delta
// identity; always true at L = 2.
bool distance_preserved(const RingVector& v);

// Minimum distances; both reject the trivial code {0}.
std::uint64_t min_lee_distance(const AdditiveCode& code, std::uint64_t budget = kDefaultBudget);
std::uint64_t min_hamming_distance(const AdditiveCode& code, const GrayTable& t,
                                   std::uint64_t budget = kDefaultBudget);

// True iff the word set is invariant under the cyclic shift by 2^(L-1)
// positions (one source symbol).
bool quasi_cyclic_index_check(const GrayImage& image);

}  // namespace zgray
