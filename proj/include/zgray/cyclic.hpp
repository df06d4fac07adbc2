#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zgray/additive_code.hpp"
#include "zgray/binary_code.hpp"

namespace zgray {

// Binary polynomial, coefficient of x^i stored at bit i (ascending degree).
class Gf2Poly {
public:
    Gf2Poly() = default;
    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(int degree);
    static Gf2Poly from_coeffs(const std::vector<int>& ascending);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return w_.empty(); }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);

    Gf2Poly operator^(const Gf2Poly& o) const;  // addition over GF(2)
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly shifted(int k) const;               // times x^k
    Gf2Poly mod(const Gf2Poly& m) const;
    Gf2Poly divided_by(const Gf2Poly& d) const;
    bool divides(const Gf2Poly& target) const;
    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    bool operator==(const Gf2Poly& o) const { return w_ == o.w_; }
    bool operator!=(const Gf2Poly& o) const { return !(*this == o); }

    std::string coeff_string() const;  // ascending, e.g. "1110 1" without space
    std::string pretty() const;        // e.g. "x^4+x^2+x+1"

private:
    std::vector<std::uint64_t> w_;
    void trim();
};

// GF(2^m) with the lexicographically smallest irreducible modulus of degree
// m; elements are binary polynomials of degree < m. Supports m <= 126 so
// exponents fit in 128 bits.
class Gf2mField {
public:
    explicit Gf2mField(int m);

    int m() const { return m_; }
    const Gf2Poly& modulus() const { return modulus_; }

    Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) const { return a ^ b; }
    Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) const { return (a * b).mod(modulus_); }
    Gf2Poly pow(Gf2Poly base, unsigned __int128 e) const;
    unsigned __int128 group_order() const;  // 2^m - 1

    static bool is_irreducible(const Gf2Poly& f);

private:
    int m_;
    Gf2Poly modulus_;
};

// A field together with a verified primitive n-th root of unity.
struct NthRootField {
    int n = 1;
    int m = 1;  // multiplicative order of 2 modulo n
    Gf2mField field;
    Gf2Poly beta;
    std::vector<Gf2Poly> beta_powers;  // beta^0 ... beta^(n-1)
};

// m grows quickly with n (n = 125 needs GF(2^100)); fields beyond m = 24 are
// refused unless allow_large is set.
NthRootField build_field_for(int n, bool allow_large = false);

// Partition of Z_n into 2-cyclotomic cosets, each sorted, listed by minimal
// representative.
struct CosetStructure {
    int n = 1;
    std::vector<std::vector<int>> cosets;

    const std::vector<int>& coset_of(int a) const;
    std::vector<int> representatives() const;
    bool is_coset_union(const std::vector<int>& set) const;
};

CosetStructure cyclotomic_cosets(int n);  // n odd

// Product of (x - beta^i) over the coset of a; lands in GF(2)[x].
Gf2Poly minimal_polynomial(int a, const CosetStructure& cosets, const NthRootField& f);

// Cyclic code of length n described by I (the complement of the defining
// set) and the generator polynomial it induces.
struct CyclicCodeSpec {
    int n = 1;
    std::vector<int> I;  // sorted union of cosets
    Gf2Poly g;           // degree n - |I|
};

CyclicCodeSpec code_from_I(const std::vector<int>& I, const CosetStructure& cosets,
                           const NthRootField& f);

std::vector<int> sumset(const std::vector<int>& I, int n);  // I + I

// Square of a cyclic code by doubling its I set.
CyclicCodeSpec square_cyclic(const CyclicCodeSpec& spec, const CosetStructure& cosets,
                             const NthRootField& f);

// Code spanned by the cyclic shifts of g.
BinaryLinearCode to_binary_code(const CyclicCodeSpec& spec);

// Smallest t with I_t + I_t = I_t under repeated doubling from I_1, i.e. the
// first level whose code equals its own square.
int stabilization_level(const std::vector<int>& I1, int n, int max_levels = 64);

struct CosetSumLaws {
    bool doubling_fills_tail = false;  // C_{p^i} + C_{p^i} = {0} u C_{p^i} u ... u C_{p^(m-1)}
    bool absorbs_higher = false;       // C_{p^i} + C_{p^j} = C_{p^i} for i < j
    bool union_doubling = false;       // unions behave like the smaller coset
};

// Verifies the three sum laws by explicit set arithmetic; requires n = p^m
// with 2 a primitive root modulo p^m.
CosetSumLaws coset_sum_laws(const CosetStructure& cosets);

// True iff 2 is a primitive root modulo p and modulo p^2 (which certifies
// every power p^alpha).
bool primitive_root_2_check(std::uint64_t p);

// Nested additive code with layers C_k = C_{k-1}^2 starting from I_1.
AdditiveCode cyclic_nested(const std::vector<int>& I1, int level, const CosetStructure& cosets,
                           const NthRootField& f);

// True iff every associated code of the (cyclic) input is shift-closed.
bool associated_codes_cyclic_check(const AdditiveCode& code,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace zgray
