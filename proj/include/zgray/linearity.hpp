#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zgray/additive_code.hpp"
#include "zgray/gray.hpp"

namespace zgray {

// Outcome of a linearity decision. A nonlinear verdict always carries a
// witness codeword pair (c, d) with 2 (c odot d) outside the code, which
// replay_witness can re-check independently.
struct LinearityVerdict {
    bool linear = false;
    std::string method;
    std::optional<std::pair<RingVector, RingVector>> witness;
};

// Witness of a Schur-chain failure: u, v lie in the level-th associated code
// but their product does not lie in the next one.
struct SchurWitness {
    int level = 0;  // 1-based
    BitVector u, v, product;
};

// Literal oracle: the sorted word set contains zero and is closed under XOR.
bool xor_closed(const std::vector<BitVector>& sorted_words);
bool brute_force_linear(const GrayImage& image);

// Rank shortcut for large sets: a finite set equals its GF(2) span iff
// 2^rank matches its size. Decides exactly the same predicate as xor_closed.
bool xor_closed_rank(const std::vector<BitVector>& words);

// All-pairs test of 2 (c odot d) in C through canonical-form membership.
LinearityVerdict linear_by_decomposition(const AdditiveCode& code,
                                         std::uint64_t budget = kDefaultBudget);

// Same quantification routed through the decomposition code: the word
// (0, u_1 o v_1, ..., u_{L-1} o v_{L-1}) is looked up in B itself.
LinearityVerdict linear_by_schur_sum(const AdditiveCode& code,
                                     std::uint64_t budget = kDefaultBudget);

// Necessary-condition check: a Schur-chain failure proves nonlinearity; a
// closed chain is inconclusive (the octacode chain is closed yet its image
// is nonlinear).
std::optional<SchurWitness> nonlinear_by_schur_witness(const AdditiveCode& code,
                                                       std::uint64_t budget = kDefaultBudget);

// Re-checks a claimed nonlinearity witness pair.
bool replay_witness(const AdditiveCode& code, const RingVector& c, const RingVector& d);

// Sufficient condition at L = 2: no column of the given generator matrix has
// more than one odd entry. Matrix-dependent, so the rows are explicit.
bool z4_column_condition(const std::vector<RingVector>& rows);

// Binary generator rows of gray(C) for a matrix passing the condition above:
// a row with an odd entry contributes gray(r) and gray(3 r), an all-even row
// contributes gray(r).
std::vector<BitVector> z4_expand_generator(const std::vector<RingVector>& rows,
                                           const GrayTable& t);

// s-vectors s_1 ... s_{L-1} of a pair of decompositions.
std::vector<BitVector> s_vectors(const BitPlanes& u, const BitPlanes& v);

// For L in {2, 3} the two sides are provably equal; returns (B linear,
// gray(C) linear), both computed independently, and refuses to return a
// mismatched pair.
std::pair<bool, bool> decomposition_linear_iff_gray_linear(const AdditiveCode& code,
                                                           std::uint64_t budget = kDefaultBudget);

// Basis of a linear decomposition code at L = 2, built from the canonical
// generator rows as {(u1, u2), (0, u1)}; span equality against B verified.
std::vector<BitVector> z4_decomposition_basis(const AdditiveCode& code,
                                              std::uint64_t budget = kDefaultBudget);

// The set R of words (0, u_1 o v_1, ..., u_{L-1} o v_{L-1}) over all codeword
// pairs; sorted and deduplicated. Quadratic, intended for small codes.
std::vector<BitVector> r_set(const DecompositionView& view);

}  // namespace zgray
