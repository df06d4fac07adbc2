#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zgray/bitvec.hpp"

namespace zgray {

// Binary linear code held as a reduced row-echelon basis (rows sorted by
// leading column, each leading column zero in all other rows).
class BinaryLinearCode {
public:
    explicit BinaryLinearCode(std::size_t n) : n_(n) {}

    static BinaryLinearCode from_spanning(std::size_t n, std::span<const BitVector> rows);
    static BinaryLinearCode full_space(std::size_t n);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }

    // Residual of v after elimination against the basis; zero iff member.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    bool subset_of(const BinaryLinearCode& o) const;

    // Adds v to the basis if independent, keeping reduced echelon shape.
    // Returns true when the dimension grew.
    bool absorb(const BitVector& v);

    // All 2^dim codewords; guarded by the word budget.
    std::vector<BitVector> codewords(std::uint64_t budget = std::uint64_t(1) << 24) const;

    // Span of the pairwise Schur products of basis vectors; by bilinearity
    // this equals the span of all codeword products.
    BinaryLinearCode square() const;

    bool operator==(const BinaryLinearCode& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const BinaryLinearCode& o) const { return !(*this == o); }

private:
    std::size_t n_;
    std::vector<BitVector> basis_;
};

// Rank of the GF(2) span of a set of equal-length vectors.
std::size_t gf2_rank(std::span<const BitVector> vectors);

}  // namespace zgray
