#pragma once

#include <cstdint>
#include <vector>

#include "zgray/bitvec.hpp"

namespace zgray {

// Convention used throughout: bit plane 1 is the least significant bit, so a
// symbol decomposes as v = sum over i of 2^(i-1) * v_i with v_i in {0,1}.

// Vector over Z_{2^L}. Entries are reduced modulo 2^L; length and level are
// fixed after construction.
class RingVector {
public:
    RingVector(int level, std::vector<std::uint32_t> entries);

    static RingVector zero(int level, std::size_t n) {
        return RingVector(level, std::vector<std::uint32_t>(n, 0));
    }

    int level() const { return level_; }
    std::uint32_t modulus() const { return std::uint32_t(1) << level_; }
    std::size_t length() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& entries() const { return e_; }

    bool is_zero() const;

    RingVector operator+(const RingVector& o) const;
    RingVector operator-(const RingVector& o) const;
    RingVector operator*(std::uint32_t scalar) const;

    // Carry-free operations of the binary decomposition: plane-wise XOR and
    // AND, which on entries are just the integer bitwise operations.
    RingVector oplus(const RingVector& o) const;
    RingVector odot(const RingVector& o) const;

    RingVector rotated(std::size_t s) const;  // cyclic shift by s positions

    bool operator==(const RingVector& o) const { return level_ == o.level_ && e_ == o.e_; }
    bool operator!=(const RingVector& o) const { return !(*this == o); }
    bool operator<(const RingVector& o) const;  // entry-lexicographic

private:
    int level_;
    std::vector<std::uint32_t> e_;

    void check_same_shape(const RingVector& o) const;
};

// The L bit planes u_1 ... u_L of a RingVector, all of the same length.
struct BitPlanes {
    int level = 0;
    std::vector<BitVector> planes;  // planes[i] is u_{i+1}

    const BitVector& plane(int i) const { return planes[std::size_t(i) - 1]; }  // 1-based
};

BitPlanes decompose(const RingVector& v);
RingVector compose(const BitPlanes& p);

// Identity v + w = (v oplus w) + 2 (v odot w) over Z_{2^L}; holds for every
// pair and is exercised as a property, never branched on.
bool carry_identity_holds(const RingVector& v, const RingVector& w);

// Coordinate-wise (Schur) product of binary vectors.
BitVector schur(const BitVector& x, const BitVector& y);

}  // namespace zgray
