#pragma once

#include <random>
#include <vector>

#include "zgray/additive_code.hpp"

namespace zgray::testing {

inline AdditiveCode make_code(int level, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<RingVector> gens;
    for (auto& r : rows) gens.emplace_back(level, std::move(r));
    return AdditiveCode(level, gens[0].length(), std::move(gens));
}

inline AdditiveCode octacode() {
    return make_code(2, {{1, 0, 0, 0, 3, 1, 2, 1},
                         {0, 1, 0, 0, 1, 2, 3, 1},
                         {0, 0, 1, 0, 3, 3, 3, 2},
                         {0, 0, 0, 1, 2, 3, 1, 1}});
}

inline AdditiveCode random_code(std::mt19937_64& rng, int level, std::size_t max_n,
                                std::size_t max_k) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t k = 1 + rng() % max_k;
    std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
    for (auto& row : rows)
        for (auto& x : row) x = std::uint32_t(rng()) & ((1u << level) - 1);
    return make_code(level, std::move(rows));
}

// Reference span by iterating every coefficient combination.
inline std::vector<RingVector> brute_force_span(int level, const std::vector<RingVector>& gens) {
    const std::uint32_t q = 1u << level;
    const std::size_t n = gens[0].length();
    std::vector<RingVector> out;
    std::vector<std::uint32_t> coeff(gens.size(), 0);
    while (true) {
        RingVector acc = RingVector::zero(level, n);
        for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i] * coeff[i];
        out.push_back(acc);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
        if (i == coeff.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zgray::testing
