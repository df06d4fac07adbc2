#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zgray {

// Vector over GF(2), bit-packed into 64-bit words (bit i of word i/64 holds
// coordinate i). Length is fixed after construction.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    BitVector& operator^=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    bool is_zero() const;
    std::size_t popcount() const;

    // Index of the first set bit, or size() if zero.
    std::size_t leading_index() const;

    // Cyclic shift moving coordinate i to position (i + s) mod n.
    BitVector rotated(std::size_t s) const;

    // Concatenation helpers for building decomposition-code words.
    BitVector concat(const BitVector& o) const;
    BitVector slice(std::size_t from, std::size_t len) const;

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    // Coordinate-lexicographic order (coordinate 0 most significant).
    bool operator<(const BitVector& o) const;

    std::string to_string() const;  // e.g. "0110"

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;

    void check_same_size(const BitVector& o) const;
};

}  // namespace zgray
