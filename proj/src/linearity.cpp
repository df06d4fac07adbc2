#include "zgray/linearity.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgray {

namespace {

// R-word of a codeword pair: (0, u_1 o v_1, ..., u_{L-1} o v_{L-1}).
BitVector r_word(const BitPlanes& u, const BitPlanes& v) {
    const std::size_t n = u.planes[0].size();
    BitVector w(n);  // leading zero block
    for (int i = 0; i + 1 < u.level; ++i) w = w.concat(u.planes[std::size_t(i)] & v.planes[std::size_t(i)]);
    return w;
}

}  // namespace

bool xor_closed(const std::vector<BitVector>& sorted_words) {
    if (sorted_words.empty()) return false;
    if (!sorted_words.front().is_zero()) return false;  // zero is lexicographically first
    for (std::size_t i = 0; i < sorted_words.size(); ++i)
        for (std::size_t j = i + 1; j < sorted_words.size(); ++j)
            if (!std::binary_search(sorted_words.begin(), sorted_words.end(),
                                    sorted_words[i] ^ sorted_words[j]))
                return false;
    return true;
}

bool brute_force_linear(const GrayImage& image) { return xor_closed(image.words); }

bool xor_closed_rank(const std::vector<BitVector>& words) {
    if (words.empty()) return false;
    const std::size_t rank = gf2_rank(words);
    return rank < 64 && (std::uint64_t(1) << rank) == words.size();
}

LinearityVerdict linear_by_decomposition(const AdditiveCode& code, std::uint64_t budget) {
    LinearityVerdict v;
    v.method = "decomposition";
    const auto words = code.enumerate(budget);
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            const RingVector prod2 = words[i].odot(words[j]) * 2;
            if (!code.contains(prod2)) {
                v.linear = false;
                v.witness = std::make_pair(words[i], words[j]);
                return v;
            }
        }
    }
    v.linear = true;
    return v;
}

LinearityVerdict linear_by_schur_sum(const AdditiveCode& code, std::uint64_t budget) {
    LinearityVerdict v;
    v.method = "schur_sum";
    const auto view = decomposition_view(code, budget);
    std::vector<BitPlanes> planes;
    planes.reserve(view.codewords.size());
    for (const auto& c : view.codewords) planes.push_back(decompose(c));
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i; j < planes.size(); ++j) {
            if (!view.contains_b(r_word(planes[i], planes[j]))) {
                v.linear = false;
                v.witness = std::make_pair(view.codewords[i], view.codewords[j]);
                return v;
            }
        }
    }
    v.linear = true;
    return v;
}

std::optional<SchurWitness> nonlinear_by_schur_witness(const AdditiveCode& code,
                                                       std::uint64_t budget) {
    const auto view = decomposition_view(code, budget);
    const auto chain = schur_closed_chain(view);
    if (chain.closed) return std::nullopt;
    SchurWitness w;
    w.level = chain.witness_level;
    w.u = chain.witness->first;
    w.v = chain.witness->second;
    w.product = w.u & w.v;
    return w;
}

bool replay_witness(const AdditiveCode& code, const RingVector& c, const RingVector& d) {
    return !code.contains(c.odot(d) * 2);
}

bool z4_column_condition(const std::vector<RingVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("z4_column_condition: empty matrix");
    for (const auto& r : rows)
        if (r.level() != 2) throw std::invalid_argument("z4_column_condition: requires L = 2");
    const std::size_t n = rows[0].length();
    for (std::size_t c = 0; c < n; ++c) {
        int odd = 0;
        for (const auto& r : rows) odd += int(r[c] & 1u);
        if (odd > 1) return false;
    }
    return true;
}

std::vector<BitVector> z4_expand_generator(const std::vector<RingVector>& rows,
                                           const GrayTable& t) {
    if (!z4_column_condition(rows))
        throw std::invalid_argument("z4_expand_generator: column condition violated");
    std::vector<BitVector> out;
    for (const auto& r : rows) {
        const bool has_odd = std::any_of(r.entries().begin(), r.entries().end(),
                                         [](std::uint32_t e) { return e & 1u; });
        out.push_back(gray(r, t));
        if (has_odd) out.push_back(gray(r * 3, t));
    }
    return out;
}

std::vector<BitVector> s_vectors(const BitPlanes& u, const BitPlanes& v) {
    const int L = u.level;
    if (L < 2 || v.level != L || u.planes[0].size() != v.planes[0].size())
        throw std::invalid_argument("s_vectors: shape mismatch");
    const auto& up = u.planes;
    const auto& vp = v.planes;
    std::vector<BitVector> s;
    s.push_back(up[0] & vp[0]);
    // r[i][j] holds r_{i+1}^{(j+1)} in the paper's indexing.
    std::vector<std::vector<BitVector>> r(std::size_t(L));
    for (int i = 2; i <= L - 1; ++i) {
        auto& ri = r[std::size_t(i)];
        ri.push_back((up[std::size_t(i - 1)] ^ vp[std::size_t(i - 1)]) &
                     (up[std::size_t(i - 2)] & vp[std::size_t(i - 2)]));
        for (int j = 2; j <= i - 1; ++j)
            ri.push_back(ri[std::size_t(j - 2)] & r[std::size_t(i - 1)][std::size_t(j - 2)]);
        BitVector si = up[std::size_t(i - 1)] & vp[std::size_t(i - 1)];
        for (const auto& rij : ri) si ^= rij;
        s.push_back(std::move(si));
    }
    return s;
}

std::pair<bool, bool> decomposition_linear_iff_gray_linear(const AdditiveCode& code,
                                                           std::uint64_t budget) {
    if (code.level() != 2 && code.level() != 3)
        throw std::invalid_argument("decomposition_linear_iff_gray_linear: L must be 2 or 3");
    const auto view = decomposition_view(code, budget);
    const auto image = gray_image(code, GrayTable::build(code.level()), budget);
    const bool gray_linear = xor_closed(image.words);
    if (view.b_linear != gray_linear)
        throw std::logic_error("decomposition_linear_iff_gray_linear: equivalence violated");
    return {view.b_linear, gray_linear};
}

std::vector<BitVector> z4_decomposition_basis(const AdditiveCode& code, std::uint64_t budget) {
    if (code.level() != 2) throw std::invalid_argument("z4_decomposition_basis: requires L = 2");
    const auto view = decomposition_view(code, budget);
    if (!view.b_linear) throw std::invalid_argument("z4_decomposition_basis: B is not linear");
    std::vector<BitVector> gamma;
    for (const auto& row : code.canonical_rows()) {
        const BitPlanes p = decompose(row);
        const BitVector zero(code.length());
        if (!p.planes[0].is_zero() || !p.planes[1].is_zero())
            gamma.push_back(p.planes[0].concat(p.planes[1]));
        if (!p.planes[0].is_zero()) gamma.push_back(zero.concat(p.planes[0]));
    }
    const std::size_t rank = gf2_rank(gamma);
    if (rank != gamma.size() || rank != view.b_span.dimension())
        throw std::logic_error("z4_decomposition_basis: basis does not span B");
    for (const auto& g : gamma)
        if (!view.contains_b(g)) throw std::logic_error("z4_decomposition_basis: vector outside B");
    return gamma;
}

std::vector<BitVector> r_set(const DecompositionView& view) {
    std::vector<BitPlanes> planes;
    planes.reserve(view.codewords.size());
    for (const auto& c : view.codewords) planes.push_back(decompose(c));
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i; j < planes.size(); ++j) out.push_back(r_word(planes[i], planes[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zgray
