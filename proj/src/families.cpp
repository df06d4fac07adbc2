#include "zgray/families.hpp"

#include <stdexcept>

#include "zgray/linearity.hpp"

namespace zgray {

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;

std::vector<RingVector> wrap(int level, const Matrix& m) {
    std::vector<RingVector> rows;
    rows.reserve(m.size());
    for (const auto& r : m) rows.emplace_back(level, r);
    return rows;
}

// One step of the Hadamard recursion for index i: a new top row running over
// the multiples of 2^(i-1), with the old matrix repeated under each value.
Matrix hadamard_step(int level, const Matrix& a, int i) {
    const std::uint32_t blocks = std::uint32_t(1) << (level - i + 1);
    const std::size_t w = a[0].size();
    Matrix out(a.size() + 1);
    out[0].reserve(w * blocks);
    for (std::uint32_t j = 0; j < blocks; ++j) {
        const std::uint32_t val = (j << (i - 1)) & ((std::uint32_t(1) << level) - 1);
        out[0].insert(out[0].end(), w, val);
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
        out[r + 1].reserve(w * blocks);
        for (std::uint32_t j = 0; j < blocks; ++j)
            out[r + 1].insert(out[r + 1].end(), a[r].begin(), a[r].end());
    }
    return out;
}

Matrix hadamard_raw(int level, const std::vector<int>& t) {
    if (int(t.size()) != level) throw std::invalid_argument("hadamard: need one t per level");
    if (t[0] < 1) throw std::invalid_argument("hadamard: t_1 must be >= 1");
    for (int ti : t)
        if (ti < 0) throw std::invalid_argument("hadamard: t_i must be >= 0");
    Matrix m{{1}};
    for (int i = 1; i <= level; ++i) {
        const int reps = t[std::size_t(i) - 1] - (i == 1 ? 1 : 0);
        for (int r = 0; r < reps; ++r) m = hadamard_step(level, m, i);
    }
    return m;
}

Matrix simplex_alpha_raw(int level, int k) {
    if (level < 2 || k < 1) throw std::invalid_argument("simplex_alpha: need L >= 2, k >= 1");
    const std::uint32_t q = std::uint32_t(1) << level;
    Matrix m(1);
    for (std::uint32_t v = 0; v < q; ++v) m[0].push_back(v);
    for (int kk = 2; kk <= k; ++kk) {
        const std::size_t w = m[0].size();
        Matrix out(m.size() + 1);
        for (std::uint32_t v = 0; v < q; ++v) out[0].insert(out[0].end(), w, v);
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::uint32_t v = 0; v < q; ++v)
                out[r + 1].insert(out[r + 1].end(), m[r].begin(), m[r].end());
        m = std::move(out);
    }
    return m;
}

Matrix simplex_beta_raw(int level, int k) {
    if (level < 2 || k < 1) throw std::invalid_argument("simplex_beta: need L >= 2, k >= 1");
    const std::uint32_t q = std::uint32_t(1) << level;
    if (k == 1) return Matrix{{1}};
    Matrix alpha = simplex_alpha_raw(level, k - 1);
    Matrix beta = simplex_beta_raw(level, k - 1);
    const std::size_t wa = alpha[0].size();
    const std::size_t wb = beta[0].size();
    Matrix out(alpha.size() + 1);
    out[0].insert(out[0].end(), wa, 1);
    for (std::uint32_t v = 0; v < q; v += 2) out[0].insert(out[0].end(), wb, v);
    for (std::size_t r = 0; r < alpha.size(); ++r) {
        out[r + 1].insert(out[r + 1].end(), alpha[r].begin(), alpha[r].end());
        for (std::uint32_t j = 0; j < (q >> 1); ++j)
            out[r + 1].insert(out[r + 1].end(), beta[r].begin(), beta[r].end());
    }
    return out;
}

std::size_t alpha_width(int level, int k) {
    std::size_t w = 1;
    for (int i = 0; i < k; ++i) w <<= level;
    return w;
}

std::size_t beta_width(int level, int k) {
    std::size_t w = 1;  // k = 1
    for (int kk = 2; kk <= k; ++kk) w = alpha_width(level, kk - 1) + (std::size_t(1) << (level - 1)) * w;
    return w;
}

Matrix delete_columns(const Matrix& m, std::size_t from, std::size_t count) {
    Matrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        out[r].reserve(m[r].size() - count);
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (c < from || c >= from + count) out[r].push_back(m[r][c]);
    }
    return out;
}

void check_macdonald_params(int level, int k, int u) {
    if (level < 2 || k < 2 || u < 1 || u > k - 1)
        throw std::invalid_argument("macdonald: need L >= 2, k >= 2, 1 <= u <= k-1");
}

}  // namespace

std::vector<RingVector> hadamard_matrix(int level, const std::vector<int>& t) {
    return wrap(level, hadamard_raw(level, t));
}

AdditiveCode hadamard_code(int level, const std::vector<int>& t) {
    auto rows = hadamard_matrix(level, t);
    return AdditiveCode(level, rows[0].length(), std::move(rows));
}

std::vector<RingVector> simplex_alpha_matrix(int level, int k) {
    return wrap(level, simplex_alpha_raw(level, k));
}

std::vector<RingVector> simplex_beta_matrix(int level, int k) {
    return wrap(level, simplex_beta_raw(level, k));
}

AdditiveCode simplex_alpha(int level, int k) {
    auto rows = simplex_alpha_matrix(level, k);
    return AdditiveCode(level, rows[0].length(), std::move(rows));
}

AdditiveCode simplex_beta(int level, int k) {
    auto rows = simplex_beta_matrix(level, k);
    return AdditiveCode(level, rows[0].length(), std::move(rows));
}

std::vector<RingVector> macdonald_alpha_matrix(int level, int k, int u) {
    check_macdonald_params(level, k, u);
    Matrix m = simplex_alpha_raw(level, k);
    const std::size_t cut = alpha_width(level, u);
    // The removed block is zero over G_u^alpha.
    const Matrix gu = simplex_alpha_raw(level, u);
    for (int r = 0; r < k - u; ++r)
        for (std::size_t c = 0; c < cut; ++c)
            if (m[std::size_t(r)][c] != 0)
                throw std::logic_error("macdonald_alpha: zero block misaligned");
    for (int r = 0; r < u; ++r)
        for (std::size_t c = 0; c < cut; ++c)
            if (m[std::size_t(k - u + r)][c] != gu[std::size_t(r)][c])
                throw std::logic_error("macdonald_alpha: deleted block is not G_u");
    return wrap(level, delete_columns(m, 0, cut));
}

std::vector<RingVector> macdonald_beta_matrix(int level, int k, int u) {
    check_macdonald_params(level, k, u);
    Matrix m = simplex_beta_raw(level, k);
    std::size_t from = 0;
    for (int kk = k; kk > u; --kk) from += alpha_width(level, kk - 1);
    const std::size_t cut = beta_width(level, u);
    const Matrix gu = simplex_beta_raw(level, u);
    for (int r = 0; r < k - u; ++r)
        for (std::size_t c = 0; c < cut; ++c)
            if (m[std::size_t(r)][from + c] != 0)
                throw std::logic_error("macdonald_beta: zero block misaligned");
    for (int r = 0; r < u; ++r)
        for (std::size_t c = 0; c < cut; ++c)
            if (m[std::size_t(k - u + r)][from + c] != gu[std::size_t(r)][c])
                throw std::logic_error("macdonald_beta: deleted block is not G_u");
    return wrap(level, delete_columns(m, from, cut));
}

AdditiveCode macdonald_alpha(int level, int k, int u) {
    auto rows = macdonald_alpha_matrix(level, k, u);
    return AdditiveCode(level, rows[0].length(), std::move(rows));
}

AdditiveCode macdonald_beta(int level, int k, int u) {
    auto rows = macdonald_beta_matrix(level, k, u);
    return AdditiveCode(level, rows[0].length(), std::move(rows));
}

std::vector<FamilyVerdictRow> verify_family_theorems(std::uint64_t budget) {
    struct Case {
        std::string family;
        int level;
        std::vector<int> params;
        bool expected_linear;
    };
    std::vector<Case> grid;
    grid.push_back({"hadamard", 2, {1, 0}, true});
    grid.push_back({"hadamard", 3, {1, 0, 0}, true});
    grid.push_back({"hadamard", 4, {1, 0, 0, 0}, true});
    grid.push_back({"hadamard", 3, {1, 0, 1}, true});
    grid.push_back({"hadamard", 3, {2, 0, 0}, false});
    grid.push_back({"hadamard", 4, {2, 0, 0, 0}, false});
    for (int k = 1; k <= 3; ++k) grid.push_back({"simplex_alpha", 2, {k}, k == 1});
    for (int L = 3; L <= 4; ++L)
        for (int k = 1; k <= 2; ++k) grid.push_back({"simplex_alpha", L, {k}, false});
    grid.push_back({"simplex_beta", 2, {2}, false});
    grid.push_back({"simplex_beta", 2, {3}, false});
    grid.push_back({"simplex_beta", 3, {2}, false});
    grid.push_back({"simplex_beta", 4, {2}, false});
    for (auto [k, u] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        grid.push_back({"macdonald_alpha", 2, {k, u}, false});
        grid.push_back({"macdonald_beta", 2, {k, u}, false});
    }
    for (int L = 3; L <= 4; ++L) {
        grid.push_back({"macdonald_alpha", L, {2, 1}, false});
        grid.push_back({"macdonald_beta", L, {2, 1}, false});
    }

    std::vector<FamilyVerdictRow> out;
    for (const auto& c : grid) {
        AdditiveCode code = [&] {
            if (c.family == "hadamard") return hadamard_code(c.level, c.params);
            if (c.family == "simplex_alpha") return simplex_alpha(c.level, c.params[0]);
            if (c.family == "simplex_beta") return simplex_beta(c.level, c.params[0]);
            if (c.family == "macdonald_alpha")
                return macdonald_alpha(c.level, c.params[0], c.params[1]);
            return macdonald_beta(c.level, c.params[0], c.params[1]);
        }();
        FamilyVerdictRow row;
        row.family = c.family;
        row.level = c.level;
        row.params = c.params;
        row.expected_linear = c.expected_linear;
        if (auto w = nonlinear_by_schur_witness(code, budget)) {
            row.computed_linear = false;
            row.method = "schur_witness";
        } else {
            row.computed_linear = linear_by_decomposition(code, budget).linear;
            row.method = "decomposition";
        }
        row.ok = row.computed_linear == row.expected_linear;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace zgray
