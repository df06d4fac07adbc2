#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zgray/binary_code.hpp"
#include "zgray/errors.hpp"
#include "zgray/ring.hpp"

namespace zgray {

// Z_{2^L}-additive code given by generator rows. On construction the rows are
// brought into a chain-ring echelon form: pivots are entries of minimal
// 2-adic valuation, selected globally so pivot valuations are non-decreasing,
// rows are scaled to make each pivot exactly 2^e, pivot columns are cleared in
// the pending rows and reduced modulo 2^e in the finished ones. Every entry of
// a pivot row is divisible by its pivot value, which is what makes membership
// by straight reduction exact.
class AdditiveCode {
public:
    AdditiveCode(int level, std::size_t length, std::vector<RingVector> generators);

    static AdditiveCode zero(int level, std::size_t length) {
        return AdditiveCode(level, length, {RingVector::zero(level, length)});
    }

    int level() const { return level_; }
    std::size_t length() const { return n_; }
    const std::vector<RingVector>& generators() const { return gens_; }

    const std::vector<RingVector>& canonical_rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_col_; }
    const std::vector<int>& pivot_exponents() const { return pivot_exp_; }

    // Pivot columns first (in pivot order), remaining columns ascending.
    std::vector<std::size_t> column_permutation() const;
    // Canonical rows with columns permuted accordingly; at L=2 this is the
    // usual (I A B / 0 2I 2C) block shape.
    std::vector<RingVector> standard_form_rows() const;

    // |C| is always a power of two; the exponent is exact at any size.
    int cardinality_log2() const { return card_log2_; }
    unsigned __int128 cardinality() const;
    std::uint64_t cardinality_u64() const;

    bool contains(const RingVector& v) const;

    // The full additive span, sorted entry-lexicographically.
    std::vector<RingVector> enumerate(std::uint64_t budget = kDefaultBudget) const;

    bool is_cyclic(std::uint64_t budget = kDefaultBudget) const;

private:
    int level_;
    std::size_t n_;
    std::vector<RingVector> gens_;

    std::vector<RingVector> rows_;      // canonical rows, original column order
    std::vector<std::size_t> pivot_col_;
    std::vector<int> pivot_exp_;        // non-decreasing
    int card_log2_ = 0;
    unsigned __int128 card_ = 1;

    void reduce_to_canonical();
};

// The decomposition code B of an additive code together with its associated
// per-level binary codes C_1 ... C_L. The associated codes are kept both as
// explicit sorted sets and as reduced bases; any mismatch between the two is
// a hard error.
struct DecompositionView {
    int level = 0;
    std::size_t length = 0;                      // n of the source code
    std::vector<RingVector> codewords;           // sorted
    std::vector<BitVector> b_words;              // sorted, |B| = |C|
    std::vector<std::vector<BitVector>> associated_sets;  // per level, sorted, deduplicated
    std::vector<BinaryLinearCode> associated;    // bases of the associated sets
    bool b_linear = false;                       // is B closed under XOR?
    BinaryLinearCode b_span;                     // span of B (equals B iff b_linear)

    bool contains_b(const BitVector& w) const;
};

DecompositionView decomposition_view(const AdditiveCode& code,
                                     std::uint64_t budget = kDefaultBudget);

// Result of checking C_i o C_i within C_{i+1} along the associated chain.
struct SchurChainResult {
    bool closed = true;
    std::vector<bool> level_ok;  // level_ok[i] is the check C_{i+1} o C_{i+1} in C_{i+2}
    int witness_level = 0;       // 1-based, smallest failing level
    std::optional<std::pair<BitVector, BitVector>> witness;  // basis pair, u o v outside next level
};

// Basis-pair check of C_i o C_i within C_{i+1} for i in [1, L-1]; sound and
// complete because the next level is linear and the Schur product bilinear.
SchurChainResult schur_closed_chain(const DecompositionView& view);

}  // namespace zgray
