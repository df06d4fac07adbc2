#include "zgray/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "zgray/nested.hpp"

namespace zgray {

// ---------------------------------------------------------------- Gf2Poly

void Gf2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::monomial(int degree) {
    Gf2Poly p;
    p.set_coeff(degree, true);
    return p;
}

Gf2Poly Gf2Poly::from_coeffs(const std::vector<int>& ascending) {
    Gf2Poly p;
    for (std::size_t i = 0; i < ascending.size(); ++i) {
        if (ascending[i] != 0 && ascending[i] != 1)
            throw std::invalid_argument("Gf2Poly: coefficients must be 0/1");
        if (ascending[i]) p.set_coeff(int(i), true);
    }
    return p;
}

int Gf2Poly::degree() const {
    if (w_.empty()) return -1;
    return int(w_.size()) * 64 - std::countl_zero(w_.back()) - 1;
}

bool Gf2Poly::coeff(int i) const {
    const std::size_t word = std::size_t(i) >> 6;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i & 63)) & 1u;
}

void Gf2Poly::set_coeff(int i, bool v) {
    const std::size_t word = std::size_t(i) >> 6;
    if (word >= w_.size()) {
        if (!v) return;
        w_.resize(word + 1, 0);
    }
    const std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
        w_[word] |= m;
    else
        w_[word] &= ~m;
    trim();
}

Gf2Poly Gf2Poly::operator^(const Gf2Poly& o) const {
    Gf2Poly r;
    r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= w_[i];
    for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::shifted(int k) const {
    if (is_zero() || k == 0) return k >= 0 ? *this : Gf2Poly();
    Gf2Poly r;
    const int d = degree();
    r.w_.resize(std::size_t((d + k) / 64) + 1, 0);
    for (int i = 0; i <= d; ++i)
        if (coeff(i)) r.w_[std::size_t(i + k) >> 6] ^= std::uint64_t(1) << ((i + k) & 63);
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return Gf2Poly();
    Gf2Poly r;
    r.w_.resize(w_.size() + o.w_.size(), 0);
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t word = w_[wi];
        while (word) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            const int shift = int(wi) * 64 + bit;
            const int word_shift = shift >> 6;
            const int bit_shift = shift & 63;
            for (std::size_t oj = 0; oj < o.w_.size(); ++oj) {
                const std::uint64_t v = o.w_[oj];
                r.w_[oj + std::size_t(word_shift)] ^= v << bit_shift;
                if (bit_shift)
                    r.w_[oj + std::size_t(word_shift) + 1] ^= v >> (64 - bit_shift);
            }
        }
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& m) const {
    if (m.is_zero()) throw std::invalid_argument("Gf2Poly: modulo zero");
    Gf2Poly r = *this;
    const int dm = m.degree();
    int dr = r.degree();
    while (dr >= dm) {
        r = r ^ m.shifted(dr - dm);
        dr = r.degree();
    }
    return r;
}

Gf2Poly Gf2Poly::divided_by(const Gf2Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Gf2Poly: division by zero");
    Gf2Poly r = *this, q;
    const int dd = d.degree();
    int dr = r.degree();
    while (dr >= dd) {
        q.set_coeff(dr - dd, true);
        r = r ^ d.shifted(dr - dd);
        dr = r.degree();
    }
    if (!r.is_zero()) throw std::invalid_argument("Gf2Poly: inexact division");
    return q;
}

bool Gf2Poly::divides(const Gf2Poly& target) const {
    if (is_zero()) return target.is_zero();
    return target.mod(*this).is_zero();
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Gf2Poly::coeff_string() const {
    const int d = degree();
    if (d < 0) return "0";
    std::string s;
    for (int i = 0; i <= d; ++i) s.push_back(coeff(i) ? '1' : '0');
    return s;
}

std::string Gf2Poly::pretty() const {
    const int d = degree();
    if (d < 0) return "0";
    std::string s;
    for (int i = d; i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

// -------------------------------------------------------------- Gf2mField

bool Gf2mField::is_irreducible(const Gf2Poly& f) {
    const int m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by x
    const Gf2Poly x = Gf2Poly::monomial(1);
    // x^(2^m) = x mod f, and gcd(x^(2^(m/q)) - x, f) = 1 for prime q | m.
    auto frobenius = [&](int times) {
        Gf2Poly t = x;
        for (int i = 0; i < times; ++i) t = (t * t).mod(f);
        return t;
    };
    if (frobenius(m) != x) return false;
    int rem = m;
    for (int q = 2; q <= rem; ++q) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        if (Gf2Poly::gcd(frobenius(m / q) ^ x, f).degree() != 0) return false;
    }
    return true;
}

Gf2mField::Gf2mField(int m) : m_(m) {
    if (m < 1 || m > 126) throw std::invalid_argument("Gf2mField: m must be in [1,126]");
    // Ascending scan over monic degree-m polynomials by coefficient mask.
    for (std::uint64_t low = m == 1 ? 0 : 1;; low += 1) {
        if (m > 63 ? false : low >= (std::uint64_t(1) << m))
            throw std::logic_error("Gf2mField: no irreducible polynomial found");
        Gf2Poly f;
        for (int i = 0; i < std::min(m, 63); ++i)
            if ((low >> i) & 1u) f.set_coeff(i, true);
        f.set_coeff(m, true);
        if (is_irreducible(f)) {
            modulus_ = f;
            break;
        }
    }
}

Gf2Poly Gf2mField::pow(Gf2Poly base, unsigned __int128 e) const {
    Gf2Poly r = Gf2Poly::one();
    base = base.mod(modulus_);
    while (e) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

unsigned __int128 Gf2mField::group_order() const {
    return ((unsigned __int128)(1) << m_) - 1;
}

// ---------------------------------------------------------- root building

namespace {

int multiplicative_order_of_2(int n) {
    if (n == 1) return 1;
    int ord = 1;
    std::int64_t t = 2 % n;
    while (t != 1) {
        t = (t * 2) % n;
        if (++ord > n) throw std::logic_error("order of 2: n must be odd");
    }
    return ord;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int q = 2; std::int64_t(q) * q <= n; ++q) {
        if (n % q) continue;
        ps.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

NthRootField build_field_for(int n, bool allow_large) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("build_field_for: n must be odd");
    const int m = multiplicative_order_of_2(n);
    if (m > 126) throw std::invalid_argument("build_field_for: field degree exceeds 126");
    if (m > 24 && !allow_large)
        throw std::invalid_argument(
            "build_field_for: field degree " + std::to_string(m) +
            " needs the large-field profile (allow_large)");

    NthRootField out{n, m, Gf2mField(m), Gf2Poly::one(), {}};
    if (n > 1) {
        const unsigned __int128 exp = out.field.group_order() / (unsigned __int128)(n);
        const auto primes = prime_factors(n);
        bool found = false;
        // Candidates in ascending order of their coefficient mask.
        for (std::uint64_t mask = 2; !found; ++mask) {
            if (m < 63 && mask >= (std::uint64_t(1) << m))
                throw std::logic_error("build_field_for: no primitive n-th root found");
            Gf2Poly a;
            for (int i = 0; i < 63; ++i)
                if ((mask >> i) & 1u) a.set_coeff(i, true);
            Gf2Poly beta = out.field.pow(a, exp);
            if (beta == Gf2Poly::one()) continue;
            bool exact = true;
            for (int p : primes)
                if (out.field.pow(beta, (unsigned __int128)(n / p)) == Gf2Poly::one()) {
                    exact = false;
                    break;
                }
            if (!exact) continue;
            if (out.field.pow(beta, (unsigned __int128)(n)) != Gf2Poly::one())
                throw std::logic_error("build_field_for: root order check failed");
            out.beta = std::move(beta);
            found = true;
        }
    }
    out.beta_powers.reserve(std::size_t(n));
    Gf2Poly acc = Gf2Poly::one();
    for (int i = 0; i < n; ++i) {
        out.beta_powers.push_back(acc);
        acc = out.field.mul(acc, out.beta);
    }
    return out;
}

// ------------------------------------------------------------------ cosets

CosetStructure cyclotomic_cosets(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("cyclotomic_cosets: n must be odd");
    CosetStructure cs;
    cs.n = n;
    std::vector<char> seen(std::size_t(n), 0);
    for (int a = 0; a < n; ++a) {
        if (seen[std::size_t(a)]) continue;
        std::vector<int> coset;
        int x = a;
        do {
            coset.push_back(x);
            seen[std::size_t(x)] = 1;
            x = int((std::int64_t(x) * 2) % n);
        } while (x != a);
        std::sort(coset.begin(), coset.end());
        cs.cosets.push_back(std::move(coset));
    }
    return cs;
}

const std::vector<int>& CosetStructure::coset_of(int a) const {
    for (const auto& c : cosets)
        if (std::binary_search(c.begin(), c.end(), a)) return c;
    throw std::invalid_argument("CosetStructure: element out of range");
}

std::vector<int> CosetStructure::representatives() const {
    std::vector<int> reps;
    reps.reserve(cosets.size());
    for (const auto& c : cosets) reps.push_back(c.front());
    return reps;
}

bool CosetStructure::is_coset_union(const std::vector<int>& set) const {
    std::vector<char> in(std::size_t(n), 0);
    for (int x : set) {
        if (x < 0 || x >= n) return false;
        in[std::size_t(x)] = 1;
    }
    for (const auto& c : cosets) {
        const bool first = in[std::size_t(c.front())];
        for (int x : c)
            if (in[std::size_t(x)] != first) return false;
    }
    return true;
}

// ------------------------------------------------------------ polynomials

Gf2Poly minimal_polynomial(int a, const CosetStructure& cosets, const NthRootField& f) {
    if (cosets.n != f.n) throw std::invalid_argument("minimal_polynomial: structure/field mismatch");
    const auto& coset = cosets.coset_of(((a % cosets.n) + cosets.n) % cosets.n);
    // Expand prod (x - beta^i) with coefficients in GF(2^m).
    std::vector<Gf2Poly> coeffs{Gf2Poly::one()};
    for (int i : coset) {
        const Gf2Poly& root = f.beta_powers[std::size_t(i)];
        std::vector<Gf2Poly> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = next[k + 1] ^ coeffs[k];           // x * coeff
            next[k] = next[k] ^ f.field.mul(root, coeffs[k]);  // beta^i * coeff
        }
        coeffs = std::move(next);
    }
    Gf2Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (coeffs[k] != Gf2Poly::one())
            throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
        out.set_coeff(int(k), true);
    }
    return out;
}

CyclicCodeSpec code_from_I(const std::vector<int>& I, const CosetStructure& cosets,
                           const NthRootField& f) {
    if (!cosets.is_coset_union(I))
        throw std::invalid_argument("code_from_I: I is not a union of cyclotomic cosets");
    std::vector<int> sorted_I = I;
    std::sort(sorted_I.begin(), sorted_I.end());
    sorted_I.erase(std::unique(sorted_I.begin(), sorted_I.end()), sorted_I.end());

    Gf2Poly g = Gf2Poly::one();
    for (const auto& coset : cosets.cosets) {
        if (std::binary_search(sorted_I.begin(), sorted_I.end(), coset.front())) continue;
        g = g * minimal_polynomial(coset.front(), cosets, f);
    }
    if (g.degree() != cosets.n - int(sorted_I.size()))
        throw std::logic_error("code_from_I: generator degree mismatch");
    return CyclicCodeSpec{cosets.n, std::move(sorted_I), std::move(g)};
}

std::vector<int> sumset(const std::vector<int>& I, int n) {
    std::vector<char> hit(std::size_t(n), 0);
    for (int a : I)
        for (int b : I) hit[std::size_t((a + b) % n)] = 1;
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (hit[std::size_t(x)]) out.push_back(x);
    return out;
}

CyclicCodeSpec square_cyclic(const CyclicCodeSpec& spec, const CosetStructure& cosets,
                             const NthRootField& f) {
    return code_from_I(sumset(spec.I, spec.n), cosets, f);
}

BinaryLinearCode to_binary_code(const CyclicCodeSpec& spec) {
    const int k = spec.n - spec.g.degree();
    std::vector<BitVector> rows;
    for (int s = 0; s < k; ++s) {
        BitVector row(std::size_t(spec.n));
        for (int i = 0; i <= spec.g.degree(); ++i)
            if (spec.g.coeff(i)) row.set(std::size_t(i + s), true);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return BinaryLinearCode(std::size_t(spec.n));
    auto code = BinaryLinearCode::from_spanning(std::size_t(spec.n), rows);
    if (int(code.dimension()) != k) throw std::logic_error("to_binary_code: dimension mismatch");
    return code;
}

int stabilization_level(const std::vector<int>& I1, int n, int max_levels) {
    std::vector<int> cur = I1;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    if (cur.empty()) throw std::invalid_argument("stabilization_level: empty I");
    for (int t = 1; t <= max_levels; ++t) {
        std::vector<int> next = sumset(cur, n);
        if (next == cur) return t;
        cur = std::move(next);
    }
    throw std::logic_error("stabilization_level: did not stabilize");
}

CosetSumLaws coset_sum_laws(const CosetStructure& cosets) {
    const int n = cosets.n;
    const auto ps = prime_factors(n);
    if (ps.size() != 1)
        throw std::invalid_argument("coset_sum_laws: n must be a prime power");
    const int p = ps.front();
    int m = 0;
    for (int t = n; t > 1; t /= p) ++m;
    // Representatives must be exactly 0, 1, p, ..., p^(m-1).
    std::vector<int> expected{0};
    for (int i = 0, q = 1; i < m; ++i, q *= p) expected.push_back(q);
    std::sort(expected.begin(), expected.end());
    auto reps = cosets.representatives();
    std::sort(reps.begin(), reps.end());
    if (reps != expected)
        throw std::invalid_argument("coset_sum_laws: 2 is not a primitive root modulo p^m");

    auto coset_at = [&](int power_index) -> const std::vector<int>& {
        int q = 1;
        for (int i = 0; i < power_index; ++i) q *= p;
        return cosets.coset_of(q);
    };
    auto tail_from = [&](int i) {
        std::vector<int> u{0};
        for (int j = i; j < m; ++j) {
            const auto& c = coset_at(j);
            u.insert(u.end(), c.begin(), c.end());
        }
        std::sort(u.begin(), u.end());
        return u;
    };
    auto unite = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> u(a);
        u.insert(u.end(), b.begin(), b.end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return u;
    };

    CosetSumLaws laws;
    laws.doubling_fills_tail = true;
    laws.absorbs_higher = true;
    laws.union_doubling = true;
    for (int i = 0; i < m; ++i)
        if (sumset(coset_at(i), n) != tail_from(i)) laws.doubling_fills_tail = false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<char> hit(std::size_t(n), 0);
            for (int a : coset_at(i))
                for (int b : coset_at(j)) hit[std::size_t((a + b) % n)] = 1;
            std::vector<int> s;
            for (int x = 0; x < n; ++x)
                if (hit[std::size_t(x)]) s.push_back(x);
            if (s != coset_at(i)) laws.absorbs_higher = false;
        }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            if (sumset(unite(coset_at(i), coset_at(j)), n) != sumset(coset_at(i), n))
                laws.union_doubling = false;
        if (sumset(unite(cosets.coset_of(0), coset_at(i)), n) != sumset(coset_at(i), n))
            laws.union_doubling = false;
    }
    return laws;
}

bool primitive_root_2_check(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("primitive_root_2_check: p must be an odd prime");
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw std::invalid_argument("primitive_root_2_check: p must be an odd prime");

    auto powmod = [](std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
        unsigned __int128 r = 1, base = b % mod;
        while (e) {
            if (e & 1u) r = r * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return std::uint64_t(r);
    };
    auto is_primitive = [&](std::uint64_t mod, std::uint64_t phi) {
        std::uint64_t rest = phi;
        for (std::uint64_t q = 2; q * q <= rest; ++q) {
            if (rest % q) continue;
            if (powmod(2, phi / q, mod) == 1) return false;
            while (rest % q == 0) rest /= q;
        }
        if (rest > 1 && powmod(2, phi / rest, mod) == 1) return false;
        return powmod(2, phi, mod) == 1;
    };
    return is_primitive(p, p - 1) && is_primitive(p * p, p * (p - 1));
}

AdditiveCode cyclic_nested(const std::vector<int>& I1, int level, const CosetStructure& cosets,
                           const NthRootField& f) {
    std::vector<BinaryLinearCode> layers;
    CyclicCodeSpec spec = code_from_I(I1, cosets, f);
    layers.push_back(to_binary_code(spec));
    for (int k = 1; k < level; ++k) {
        spec = square_cyclic(spec, cosets, f);
        layers.push_back(to_binary_code(spec));
    }
    return nested_code(NestedSpec::create(std::move(layers)));
}

bool associated_codes_cyclic_check(const AdditiveCode& code, std::uint64_t budget) {
    const auto view = decomposition_view(code, budget);
    for (const auto& set : view.associated_sets)
        for (const auto& w : set)
            if (!std::binary_search(set.begin(), set.end(), w.rotated(1))) return false;
    return true;
}

}  // namespace zgray
