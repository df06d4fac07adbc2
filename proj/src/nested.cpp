#include "zgray/nested.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace zgray {

NestedSpec NestedSpec::create(std::vector<BinaryLinearCode> layer_codes) {
    if (layer_codes.empty()) throw std::invalid_argument("NestedSpec: need at least one layer");
    const std::size_t n = layer_codes.front().length();
    for (const auto& c : layer_codes)
        if (c.length() != n) throw std::invalid_argument("NestedSpec: layer length mismatch");
    for (std::size_t i = 0; i + 1 < layer_codes.size(); ++i) {
        const auto& basis = layer_codes[i].basis();
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a; b < basis.size(); ++b)
                if (!layer_codes[i + 1].contains(basis[a] & basis[b]))
                    throw std::invalid_argument("NestedSpec: chain closure violated at level " +
                                                std::to_string(i + 1));
    }
    NestedSpec spec;
    spec.level = int(layer_codes.size());
    spec.layers = std::move(layer_codes);
    return spec;
}

AdditiveCode nested_code(const NestedSpec& spec) {
    const int L = spec.level;
    const std::size_t n = spec.layers.front().length();
    std::vector<RingVector> gens;
    for (int i = 0; i < L; ++i) {
        for (const auto& b : spec.layers[std::size_t(i)].basis()) {
            std::vector<std::uint32_t> e(n, 0);
            for (std::size_t j = 0; j < n; ++j)
                if (b.get(j)) e[j] = std::uint32_t(1) << i;
            gens.emplace_back(L, std::move(e));
        }
    }
    if (gens.empty()) gens.push_back(RingVector::zero(L, n));
    return AdditiveCode(L, n, std::move(gens));
}

BinaryLinearCode reed_muller(int r, int m) {
    if (m < 0 || r < 0 || r > m) throw std::invalid_argument("reed_muller: need 0 <= r <= m");
    const std::size_t n = std::size_t(1) << m;
    std::vector<BitVector> rows;
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        if (std::popcount(mask) > r) continue;
        BitVector row(n);
        for (std::uint32_t j = 0; j < n; ++j)
            if ((j & mask) == mask) row.set(j, true);
        rows.push_back(std::move(row));
    }
    return BinaryLinearCode::from_spanning(n, rows);
}

BinaryLinearCode reed_muller_uv(int r, int m) {
    if (m < 0) throw std::invalid_argument("reed_muller_uv: m must be >= 0");
    const std::size_t n = std::size_t(1) << m;
    if (r < 0) return BinaryLinearCode(n);  // zero code
    if (m == 0) return BinaryLinearCode::full_space(1);
    if (r >= m) return BinaryLinearCode::full_space(n);
    const BinaryLinearCode upper = reed_muller_uv(r, m - 1);
    const BinaryLinearCode lower = reed_muller_uv(r - 1, m - 1);
    std::vector<BitVector> rows;
    for (const auto& u : upper.basis()) rows.push_back(u.concat(u));
    for (const auto& v : lower.basis()) rows.push_back(BitVector(n / 2).concat(v));
    return BinaryLinearCode::from_spanning(n, rows);
}

NestedSpec rm_chain(RmChainKind kind, int param) {
    std::vector<BinaryLinearCode> layers;
    switch (kind) {
        case RmChainKind::low_order: {
            if (param < 2) throw std::invalid_argument("rm_chain: low-order chain needs m >= 2");
            for (int r = 0; r <= 2; ++r) layers.push_back(reed_muller(r, param));
            break;
        }
        case RmChainKind::even: {
            if (param < 1 || param >= 4)
                throw std::invalid_argument("rm_chain: even chain needs 1 <= l < 4");
            for (int i = 0; i < param; ++i) layers.push_back(reed_muller(2 * i, 2 * param));
            break;
        }
        case RmChainKind::odd: {
            if (param < 1 || param >= 4)
                throw std::invalid_argument("rm_chain: odd chain needs 1 <= l < 4");
            for (int i = 0; i < param; ++i) layers.push_back(reed_muller(2 * i + 1, 2 * param));
            break;
        }
    }
    return NestedSpec::create(std::move(layers));
}

}  // namespace zgray
