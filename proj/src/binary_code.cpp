#include "zgray/binary_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgray {

BinaryLinearCode BinaryLinearCode::from_spanning(std::size_t n, std::span<const BitVector> rows) {
    BinaryLinearCode c(n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("BinaryLinearCode: row length mismatch");
        c.absorb(r);
    }
    return c;
}

BinaryLinearCode BinaryLinearCode::full_space(std::size_t n) {
    BinaryLinearCode c(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector e(n);
        e.set(i, true);
        c.basis_.push_back(std::move(e));
    }
    return c;
}

BitVector BinaryLinearCode::reduce(BitVector v) const {
    if (v.size() != n_) throw std::invalid_argument("BinaryLinearCode: vector length mismatch");
    for (const auto& b : basis_) {
        const std::size_t lead = b.leading_index();
        if (v.get(lead)) v ^= b;
    }
    return v;
}

bool BinaryLinearCode::subset_of(const BinaryLinearCode& o) const {
    for (const auto& b : basis_)
        if (!o.contains(b)) return false;
    return true;
}

bool BinaryLinearCode::absorb(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t lead = r.leading_index();
    for (auto& b : basis_)
        if (b.get(lead)) b ^= r;
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), r,
                                [](const BitVector& a, const BitVector& x) {
                                    return a.leading_index() < x.leading_index();
                                });
    basis_.insert(pos, std::move(r));
    return true;
}

std::vector<BitVector> BinaryLinearCode::codewords(std::uint64_t budget) const {
    if (dimension() >= 63 || (std::uint64_t(1) << dimension()) > budget)
        throw std::runtime_error("BinaryLinearCode: enumeration budget exceeded");
    const std::uint64_t count = std::uint64_t(1) << dimension();
    std::vector<BitVector> out;
    out.reserve(count);
    out.push_back(BitVector(n_));
    // Gray-code walk: flip one basis vector per step.
    BitVector cur(n_);
    for (std::uint64_t g = 1; g < count; ++g) {
        const int bit = std::countr_zero(g);
        cur ^= basis_[std::size_t(bit)];
        out.push_back(cur);
    }
    return out;
}

BinaryLinearCode BinaryLinearCode::square() const {
    BinaryLinearCode sq(n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i; j < basis_.size(); ++j) sq.absorb(basis_[i] & basis_[j]);
    return sq;
}

std::size_t gf2_rank(std::span<const BitVector> vectors) {
    if (vectors.empty()) return 0;
    BinaryLinearCode acc(vectors.front().size());
    for (const auto& v : vectors) acc.absorb(v);
    return acc.dimension();
}

}  // namespace zgray
