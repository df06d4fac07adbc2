#include "zgray/additive_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zgray {

namespace {

int valuation(std::uint32_t x) { return std::countr_zero(x); }

// Inverse of an odd element modulo 2^L (Newton iteration).
std::uint32_t odd_inverse(std::uint32_t u, std::uint32_t mask) {
    std::uint32_t t = u;  // correct mod 8
    for (int i = 0; i < 4; ++i) t = (t * (2 - u * t)) & mask;
    return t;
}

}  // namespace

AdditiveCode::AdditiveCode(int level, std::size_t length, std::vector<RingVector> generators)
    : level_(level), n_(length), gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("AdditiveCode: need at least one generator");
    for (const auto& g : gens_)
        if (g.level() != level_ || g.length() != n_)
            throw std::invalid_argument("AdditiveCode: generator shape mismatch");
    reduce_to_canonical();
}

void AdditiveCode::reduce_to_canonical() {
    const std::uint32_t mask = (std::uint32_t(1) << level_) - 1;
    std::vector<std::vector<std::uint32_t>> act;
    for (const auto& g : gens_) act.push_back(g.entries());

    std::vector<std::vector<std::uint32_t>> fin;
    std::vector<char> col_used(n_, 0);

    while (true) {
        int best_val = level_;
        std::size_t best_col = n_;
        std::size_t best_row = act.size();
        for (std::size_t c = 0; c < n_; ++c) {
            if (col_used[c]) continue;
            for (std::size_t r = 0; r < act.size(); ++r) {
                const std::uint32_t x = act[r][c];
                if (!x) continue;
                const int v = valuation(x);
                if (v < best_val || (v == best_val && (c < best_col || (c == best_col && r < best_row)))) {
                    best_val = v;
                    best_col = c;
                    best_row = r;
                }
            }
            if (best_val == 0 && best_col <= c) break;  // cannot improve on this column sweep
        }
        if (best_col == n_) break;

        std::vector<std::uint32_t> row = std::move(act[best_row]);
        act.erase(act.begin() + std::ptrdiff_t(best_row));

        const int e = best_val;
        const std::uint32_t unit = row[best_col] >> e;
        const std::uint32_t inv = odd_inverse(unit, mask);
        for (auto& x : row) x = (x * inv) & mask;

        auto eliminate = [&](std::vector<std::uint32_t>& other) {
            const std::uint32_t a = other[best_col];
            const std::uint32_t q = a >> e;
            if (!q) return;
            for (std::size_t c = 0; c < n_; ++c) other[c] = (other[c] - q * row[c]) & mask;
        };
        for (auto& r : act) eliminate(r);
        for (auto& r : fin) eliminate(r);

        fin.push_back(std::move(row));
        pivot_col_.push_back(best_col);
        pivot_exp_.push_back(e);
        col_used[best_col] = 1;

        std::erase_if(act, [](const std::vector<std::uint32_t>& r) {
            return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
        });
        if (act.empty()) break;
    }

    rows_.reserve(fin.size());
    for (auto& r : fin) rows_.emplace_back(level_, std::move(r));
    int log2 = 0;
    for (int e : pivot_exp_) log2 += level_ - e;
    card_log2_ = log2;
    card_ = log2 <= 126 ? (unsigned __int128)(1) << log2 : 0;
}

std::vector<std::size_t> AdditiveCode::column_permutation() const {
    std::vector<std::size_t> perm = pivot_col_;
    std::vector<char> used(n_, 0);
    for (auto c : pivot_col_) used[c] = 1;
    for (std::size_t c = 0; c < n_; ++c)
        if (!used[c]) perm.push_back(c);
    return perm;
}

std::vector<RingVector> AdditiveCode::standard_form_rows() const {
    const auto perm = column_permutation();
    std::vector<RingVector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        std::vector<std::uint32_t> e(n_);
        for (std::size_t j = 0; j < n_; ++j) e[j] = r[perm[j]];
        out.emplace_back(level_, std::move(e));
    }
    return out;
}

std::uint64_t AdditiveCode::cardinality_u64() const {
    if (card_log2_ > 63) throw std::overflow_error("AdditiveCode: cardinality exceeds 2^63");
    return std::uint64_t(1) << card_log2_;
}

unsigned __int128 AdditiveCode::cardinality() const {
    if (card_log2_ > 126) throw std::overflow_error("AdditiveCode: cardinality exceeds 2^126");
    return card_;
}

bool AdditiveCode::contains(const RingVector& v) const {
    if (v.level() != level_ || v.length() != n_)
        throw std::invalid_argument("AdditiveCode: vector shape mismatch");
    const std::uint32_t mask = (std::uint32_t(1) << level_) - 1;
    std::vector<std::uint32_t> w = v.entries();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t a = w[pivot_col_[i]];
        const int e = pivot_exp_[i];
        if (a & ((std::uint32_t(1) << e) - 1)) return false;
        const std::uint32_t q = a >> e;
        if (!q) continue;
        const auto& row = rows_[i].entries();
        for (std::size_t c = 0; c < n_; ++c) w[c] = (w[c] - q * row[c]) & mask;
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<RingVector> AdditiveCode::enumerate(std::uint64_t budget) const {
    if (card_log2_ > 63 || (std::uint64_t(1) << card_log2_) > budget)
        throw BudgetExceeded("AdditiveCode: enumeration budget exceeded");
    const std::uint32_t mask = (std::uint32_t(1) << level_) - 1;
    std::vector<RingVector> out;
    out.reserve(std::size_t(1) << card_log2_);
    std::vector<std::uint32_t> coeff(rows_.size(), 0);
    std::vector<std::uint32_t> cur(n_, 0);
    while (true) {
        out.emplace_back(level_, cur);
        // odometer over coefficient ranges [0, 2^(L - e_i))
        std::size_t i = 0;
        for (; i < rows_.size(); ++i) {
            const std::uint32_t span = std::uint32_t(1) << (level_ - pivot_exp_[i]);
            coeff[i]++;
            const auto& row = rows_[i].entries();
            if (coeff[i] < span) {
                for (std::size_t c = 0; c < n_; ++c) cur[c] = (cur[c] + row[c]) & mask;
                break;
            }
            coeff[i] = 0;
            // wrapping subtracts (span-1) copies, i.e. adds one more row
            for (std::size_t c = 0; c < n_; ++c) cur[c] = (cur[c] + row[c]) & mask;
        }
        if (i == rows_.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AdditiveCode::is_cyclic(std::uint64_t budget) const {
    const auto words = enumerate(budget);
    for (const auto& w : words)
        if (!std::binary_search(words.begin(), words.end(), w.rotated(1))) return false;
    return true;
}

DecompositionView decomposition_view(const AdditiveCode& code, std::uint64_t budget) {
    DecompositionView view;
    view.level = code.level();
    view.length = code.length();
    view.codewords = code.enumerate(budget);

    const int L = code.level();
    view.b_words.reserve(view.codewords.size());
    std::vector<std::vector<BitVector>> sets(std::size_t(L));
    for (const auto& c : view.codewords) {
        const BitPlanes p = decompose(c);
        BitVector b = p.planes[0];
        for (int i = 1; i < L; ++i) b = b.concat(p.planes[std::size_t(i)]);
        view.b_words.push_back(std::move(b));
        for (int i = 0; i < L; ++i) sets[std::size_t(i)].push_back(p.planes[std::size_t(i)]);
    }
    std::sort(view.b_words.begin(), view.b_words.end());
    for (std::size_t i = 1; i < view.b_words.size(); ++i)
        if (view.b_words[i] == view.b_words[i - 1])
            throw std::logic_error("decomposition_view: bit-plane map is not injective");

    view.b_span = BinaryLinearCode::from_spanning(code.length() * std::size_t(L), view.b_words);
    view.b_linear = view.b_span.dimension() < 64 &&
                    (std::uint64_t(1) << view.b_span.dimension()) == view.b_words.size();

    for (int i = 0; i < L; ++i) {
        auto& s = sets[std::size_t(i)];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        BinaryLinearCode basis = BinaryLinearCode::from_spanning(code.length(), s);
        if (basis.dimension() >= 64 || (std::uint64_t(1) << basis.dimension()) != s.size())
            throw std::logic_error("decomposition_view: associated code set is not XOR-closed");
        view.associated_sets.push_back(std::move(s));
        view.associated.push_back(std::move(basis));
    }
    return view;
}

bool DecompositionView::contains_b(const BitVector& w) const {
    return std::binary_search(b_words.begin(), b_words.end(), w);
}

SchurChainResult schur_closed_chain(const DecompositionView& view) {
    SchurChainResult res;
    const int L = view.level;
    for (int i = 0; i + 1 < L; ++i) {
        const auto& lower = view.associated[std::size_t(i)].basis();
        const auto& upper = view.associated[std::size_t(i) + 1];
        bool ok = true;
        for (std::size_t a = 0; a < lower.size() && ok; ++a) {
            for (std::size_t b = a; b < lower.size(); ++b) {
                BitVector prod = lower[a] & lower[b];
                if (!upper.contains(prod)) {
                    ok = false;
                    if (res.closed) {
                        res.closed = false;
                        res.witness_level = i + 1;
                        res.witness = std::make_pair(lower[a], lower[b]);
                    }
                    break;
                }
            }
        }
        res.level_ok.push_back(ok);
    }
    return res;
}

}  // namespace zgray
