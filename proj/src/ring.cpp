#include "zgray/ring.hpp"

#include <stdexcept>

namespace zgray {

RingVector::RingVector(int level, std::vector<std::uint32_t> entries)
    : level_(level), e_(std::move(entries)) {
    if (level_ < 1 || level_ > 30) throw std::invalid_argument("RingVector: level must be in [1,30]");
    if (e_.empty()) throw std::invalid_argument("RingVector: length must be >= 1");
    const std::uint32_t m = modulus();
    for (auto e : e_)
        if (e >= m) throw std::invalid_argument("RingVector: entry out of range");
}

void RingVector::check_same_shape(const RingVector& o) const {
    if (level_ != o.level_ || e_.size() != o.e_.size())
        throw std::invalid_argument("RingVector: shape mismatch");
}

bool RingVector::is_zero() const {
    for (auto e : e_)
        if (e) return false;
    return true;
}

RingVector RingVector::operator+(const RingVector& o) const {
    check_same_shape(o);
    std::vector<std::uint32_t> r(e_.size());
    const std::uint32_t mask = modulus() - 1;
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = (e_[i] + o.e_[i]) & mask;
    return RingVector(level_, std::move(r));
}

RingVector RingVector::operator-(const RingVector& o) const {
    check_same_shape(o);
    std::vector<std::uint32_t> r(e_.size());
    const std::uint32_t mask = modulus() - 1;
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = (e_[i] - o.e_[i]) & mask;
    return RingVector(level_, std::move(r));
}

RingVector RingVector::operator*(std::uint32_t scalar) const {
    std::vector<std::uint32_t> r(e_.size());
    const std::uint32_t mask = modulus() - 1;
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = (e_[i] * scalar) & mask;
    return RingVector(level_, std::move(r));
}

RingVector RingVector::oplus(const RingVector& o) const {
    check_same_shape(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] ^ o.e_[i];
    return RingVector(level_, std::move(r));
}

RingVector RingVector::odot(const RingVector& o) const {
    check_same_shape(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] & o.e_[i];
    return RingVector(level_, std::move(r));
}

RingVector RingVector::rotated(std::size_t s) const {
    const std::size_t n = e_.size();
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[(i + s) % n] = e_[i];
    return RingVector(level_, std::move(r));
}

bool RingVector::operator<(const RingVector& o) const { return e_ < o.e_; }

BitPlanes decompose(const RingVector& v) {
    BitPlanes p;
    p.level = v.level();
    p.planes.reserve(std::size_t(v.level()));
    for (int i = 0; i < v.level(); ++i) {
        BitVector u(v.length());
        for (std::size_t j = 0; j < v.length(); ++j)
            if ((v[j] >> i) & 1u) u.set(j, true);
        p.planes.push_back(std::move(u));
    }
    return p;
}

RingVector compose(const BitPlanes& p) {
    if (p.planes.empty() || p.level != int(p.planes.size()))
        throw std::invalid_argument("compose: level must match plane count");
    const std::size_t n = p.planes[0].size();
    for (const auto& u : p.planes)
        if (u.size() != n) throw std::invalid_argument("compose: plane length mismatch");
    std::vector<std::uint32_t> e(n, 0);
    for (int i = 0; i < p.level; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.planes[std::size_t(i)].get(j)) e[j] |= std::uint32_t(1) << i;
    return RingVector(p.level, std::move(e));
}

bool carry_identity_holds(const RingVector& v, const RingVector& w) {
    return v + w == v.oplus(w) + v.odot(w) * 2;
}

BitVector schur(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("schur: length mismatch");
    return x & y;
}

}  // namespace zgray
