#include "zgray/gray.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgray {

GrayTable::GrayTable(int level, std::vector<BitVector> y_rows)
    : level_(level), y_rows_(std::move(y_rows)) {
    const std::size_t width = symbol_width();
    images_.reserve(std::size_t(1) << level_);
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << level_); ++v) {
        BitVector img(width);
        if ((v >> (level_ - 1)) & 1u) {  // all-v_L offset
            for (std::size_t j = 0; j < width; ++j) img.set(j, true);
        }
        for (int i = 0; i < level_ - 1; ++i)
            if ((v >> i) & 1u) img ^= y_rows_[std::size_t(i)];
        images_.push_back(std::move(img));
    }
}

GrayTable GrayTable::build(int level) {
    std::vector<std::uint32_t> cols(std::size_t(1) << (level - 1));
    for (std::uint32_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return build_with_column_order(level, cols);
}

GrayTable GrayTable::build_with_column_order(int level, const std::vector<std::uint32_t>& cols) {
    if (level < 2) throw std::invalid_argument("GrayTable: level must be >= 2");
    if (level > 24) throw std::invalid_argument("GrayTable: level too large");
    const std::size_t width = std::size_t(1) << (level - 1);
    if (cols.size() != width) throw std::invalid_argument("GrayTable: need 2^(L-1) columns");
    std::vector<char> seen(width, 0);
    for (auto c : cols) {
        if (c >= width || seen[c]) throw std::invalid_argument("GrayTable: columns must enumerate Z_2^(L-1)");
        seen[c] = 1;
    }
    // Row 1 of Y carries the most significant bit of the column label.
    std::vector<BitVector> rows;
    for (int i = 1; i <= level - 1; ++i) {
        BitVector row(width);
        for (std::size_t j = 0; j < width; ++j)
            if ((cols[j] >> (level - 1 - i)) & 1u) row.set(j, true);
        rows.push_back(std::move(row));
    }
    // Y rows are indexed so that rows[i] multiplies v_{i+1}; rebuild in that
    // order (v_1 pairs with row 1).
    return GrayTable(level, std::move(rows));
}

BitVector gray(const RingVector& v, const GrayTable& t) {
    if (v.level() != t.level()) throw std::invalid_argument("gray: level mismatch");
    const std::size_t width = t.symbol_width();
    BitVector out(v.length() * width);
    for (std::size_t j = 0; j < v.length(); ++j) {
        const BitVector& img = t.image(v[j]);
        for (std::size_t b = 0; b < width; ++b)
            if (img.get(b)) out.set(j * width + b, true);
    }
    return out;
}

bool GrayImage::contains(const BitVector& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

GrayImage gray_image(const AdditiveCode& code, const GrayTable& t, std::uint64_t budget) {
    GrayImage img;
    img.level = code.level();
    img.source_length = code.length();
    const auto words = code.enumerate(budget);
    img.words.reserve(words.size());
    for (const auto& c : words) img.words.push_back(gray(c, t));
    std::sort(img.words.begin(), img.words.end());
    for (std::size_t i = 1; i < img.words.size(); ++i)
        if (img.words[i] == img.words[i - 1])
            throw std::logic_error("gray_image: map is not injective on the code");
    return img;
}

std::uint64_t lee_weight(const RingVector& v) {
    const std::uint32_t q = v.modulus();
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < v.length(); ++i) w += std::min(v[i], q - v[i]);
    return w;
}

std::vector<std::size_t> delta_profile(const RingVector& v) {
    std::vector<std::size_t> delta(v.modulus(), 0);
    for (std::size_t i = 0; i < v.length(); ++i) delta[v[i]]++;
    return delta;
}

std::uint64_t lee_weight_via_deltas(const RingVector& v) {
    if (v.level() < 2) throw std::invalid_argument("lee_weight_via_deltas: level must be >= 2");
    const auto d = delta_profile(v);
    const std::uint64_t n = v.length();
    const std::uint32_t half = v.modulus() / 2;
    std::int64_t sum = 0;
    for (std::uint32_t i = 1; i < half; ++i)
        sum += std::int64_t(i - 1) * std::int64_t(d[i] + d[v.modulus() - i]);
    return std::uint64_t(std::int64_t(n) + std::int64_t(half - 1) * std::int64_t(d[half]) -
                         std::int64_t(d[0]) + sum);
}

std::uint64_t gray_hamming_weight_via_deltas(const RingVector& v) {
    if (v.level() < 2) throw std::invalid_argument("gray_hamming_weight_via_deltas: level must be >= 2");
    const auto d = delta_profile(v);
    const std::uint32_t half = v.modulus() / 2;
    const std::int64_t quarter = std::int64_t(1) << (v.level() - 2);
    return std::uint64_t(quarter *
                         (std::int64_t(v.length()) + std::int64_t(d[half]) - std::int64_t(d[0])));
}

bool distance_preserved(const RingVector& v) {
    if (v.level() < 2) throw std::invalid_argument("distance_preserved: level must be >= 2");
    const auto d = delta_profile(v);
    const std::uint32_t half = v.modulus() / 2;
    std::int64_t lhs = 0;
    for (std::uint32_t i = 1; i < half; ++i)
        lhs += std::int64_t(i - 1) * std::int64_t(d[i] + d[v.modulus() - i]);
    const std::int64_t rhs = ((std::int64_t(1) << (v.level() - 2)) - 1) *
                             (std::int64_t(v.length()) - std::int64_t(d[half]) - std::int64_t(d[0]));
    return lhs == rhs;
}

std::uint64_t min_lee_distance(const AdditiveCode& code, std::uint64_t budget) {
    const auto words = code.enumerate(budget);
    std::uint64_t best = 0;
    bool found = false;
    for (const auto& c : words) {
        if (c.is_zero()) continue;
        const std::uint64_t w = lee_weight(c);
        if (!found || w < best) {
            best = w;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("min_lee_distance: trivial code {0}");
    return best;
}

std::uint64_t min_hamming_distance(const AdditiveCode& code, const GrayTable& t,
                                   std::uint64_t budget) {
    // d_H(gray(c), gray(d)) = w_H(gray(c - d)), so the minimum over pairs is
    // the minimum Gray weight over nonzero codewords even when the image is
    // nonlinear.
    const auto words = code.enumerate(budget);
    std::uint64_t best = 0;
    bool found = false;
    for (const auto& c : words) {
        if (c.is_zero()) continue;
        const std::uint64_t w = gray(c, t).popcount();
        if (!found || w < best) {
            best = w;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("min_hamming_distance: trivial code {0}");
    return best;
}

bool quasi_cyclic_index_check(const GrayImage& image) {
    const std::size_t s = std::size_t(1) << (image.level - 1);
    for (const auto& w : image.words)
        if (!image.contains(w.rotated(s))) return false;
    return true;
}

}  // namespace zgray
