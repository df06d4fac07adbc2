#include "zgray/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace zgray {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("BitVector: entries must be 0/1");
        if (bits[i]) v.set(i, true);
    }
    return v;
}

void BitVector::check_same_size(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector: length mismatch");
}

BitVector& BitVector::operator^=(const BitVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool BitVector::is_zero() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVector::leading_index() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
}

BitVector BitVector::rotated(std::size_t s) const {
    BitVector r(n_);
    if (n_ == 0) return r;
    s %= n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) r.set((i + s) % n_, true);
    return r;
}

BitVector BitVector::concat(const BitVector& o) const {
    BitVector r(n_ + o.n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) r.set(i, true);
    for (std::size_t i = 0; i < o.n_; ++i)
        if (o.get(i)) r.set(n_ + i, true);
    return r;
}

BitVector BitVector::slice(std::size_t from, std::size_t len) const {
    if (from + len > n_) throw std::invalid_argument("BitVector::slice: out of range");
    BitVector r(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(from + i)) r.set(i, true);
    return r;
}

bool BitVector::operator<(const BitVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        const std::uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            // First differing coordinate decides; 0 sorts before 1.
            const int bit = std::countr_zero(d);
            return ((o.w_[i] >> bit) & 1u) != 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace zgray
