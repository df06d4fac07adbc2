#include "doctest.h"

#include <random>

#include "zgray/ring.hpp"

using namespace zgray;

namespace {

RingVector rv(int level, std::vector<std::uint32_t> e) { return RingVector(level, std::move(e)); }

}  // namespace

TEST_CASE("binary decomposition of worked vectors") {
    const auto p = decompose(rv(3, {0, 2, 4, 6, 0, 2, 4, 6}));
    CHECK(p.plane(1) == BitVector::from_bits({0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(p.plane(2) == BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(p.plane(3) == BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1}));

    const auto z = decompose(rv(2, {0, 0}));
    CHECK(z.plane(1).is_zero());
    CHECK(z.plane(2).is_zero());

    const auto q = decompose(rv(2, {1, 3}));
    CHECK(q.plane(1) == BitVector::from_bits({1, 1}));
    CHECK(q.plane(2) == BitVector::from_bits({0, 1}));
}

TEST_CASE("composition of planes") {
    BitPlanes p;
    p.level = 2;
    p.planes = {BitVector::from_bits({1, 1}), BitVector::from_bits({0, 1})};
    CHECK(compose(p) == rv(2, {1, 3}));

    BitPlanes zero;
    zero.level = 3;
    zero.planes = {BitVector(4), BitVector(4), BitVector(4)};
    CHECK(compose(zero).is_zero());

    BitPlanes ramp;
    ramp.level = 3;
    ramp.planes = {BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1}),
                   BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1}),
                   BitVector::from_bits({0, 0, 0, 0, 1, 1, 1, 1})};
    CHECK(compose(ramp) == rv(3, {0, 1, 2, 3, 4, 5, 6, 7}));

    BitPlanes bad;
    bad.level = 2;
    bad.planes = {BitVector(3), BitVector(4)};
    CHECK_THROWS_AS(compose(bad), std::invalid_argument);
}

TEST_CASE("decompose/compose are inverse") {
    std::mt19937_64 rng(0);
    for (int round = 0; round < 200; ++round) {
        const int level = 1 + int(rng() % 5);
        const std::size_t n = 1 + rng() % 9;
        std::vector<std::uint32_t> e(n);
        for (auto& x : e) x = std::uint32_t(rng()) & ((1u << level) - 1);
        const RingVector v(level, e);
        CHECK(compose(decompose(v)) == v);
    }
}

TEST_CASE("oplus and odot act plane-wise") {
    CHECK(rv(2, {1}).oplus(rv(2, {3})) == rv(2, {2}));
    std::mt19937_64 rng(1);
    for (int round = 0; round < 100; ++round) {
        const int level = 2 + int(rng() % 3);
        std::vector<std::uint32_t> a(3), b(3);
        for (auto& x : a) x = std::uint32_t(rng()) & ((1u << level) - 1);
        for (auto& x : b) x = std::uint32_t(rng()) & ((1u << level) - 1);
        const RingVector v(level, a), w(level, b);
        CHECK(v.odot(v) == v);
        CHECK(v.oplus(v).is_zero());
        CHECK(v.oplus(w) == w.oplus(v));
        CHECK(v.odot(w) == w.odot(v));
        // plane-wise meaning
        const auto pv = decompose(v), pw = decompose(w), px = decompose(v.oplus(w));
        for (int i = 1; i <= level; ++i) CHECK(px.plane(i) == (pv.plane(i) ^ pw.plane(i)));
    }
}

TEST_CASE("carry identity") {
    CHECK(carry_identity_holds(rv(2, {3}), rv(2, {3})));
    CHECK(carry_identity_holds(rv(2, {0, 0}), rv(2, {1, 2})));
    // exhaustive over scalars for L = 2, 3, 4
    for (int level = 2; level <= 4; ++level) {
        const std::uint32_t q = 1u << level;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(carry_identity_holds(rv(level, {a}), rv(level, {b})));
    }
    // exhaustive pairs of length-2 vectors over Z_8
    for (std::uint32_t a = 0; a < 64; ++a)
        for (std::uint32_t b = 0; b < 64; ++b)
            CHECK(carry_identity_holds(rv(3, {a >> 3, a & 7}), rv(3, {b >> 3, b & 7})));
}

TEST_CASE("schur product") {
    const auto x = BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1});
    const auto y = BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1});
    CHECK(schur(x, y) == BitVector::from_bits({0, 0, 0, 1, 0, 0, 0, 1}));

    BitVector ones(8);
    for (std::size_t i = 0; i < 8; ++i) ones.set(i, true);
    CHECK(schur(x, ones) == x);
    CHECK(schur(x, x) == x);
    CHECK_THROWS_AS(schur(x, BitVector(4)), std::invalid_argument);

    // bilinearity: (a ^ b) o c = (a o c) ^ (b o c)
    std::mt19937_64 rng(2);
    for (int round = 0; round < 50; ++round) {
        BitVector a(16), b(16), c(16);
        for (std::size_t i = 0; i < 16; ++i) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
            c.set(i, rng() & 1);
        }
        CHECK(schur(a ^ b, c) == (schur(a, c) ^ schur(b, c)));
        CHECK(schur(schur(a, b), c) == schur(a, schur(b, c)));
    }
}

TEST_CASE("ring vector validation") {
    CHECK_THROWS_AS(rv(2, {4}), std::invalid_argument);
    CHECK_THROWS_AS(rv(0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(RingVector(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(rv(2, {1, 2}).oplus(rv(2, {1})), std::invalid_argument);
    CHECK_THROWS_AS(rv(2, {1}).oplus(rv(3, {1})), std::invalid_argument);
}
