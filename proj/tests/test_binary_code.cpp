#include "doctest.h"

#include <random>

#include "zgray/binary_code.hpp"
#include "zgray/ring.hpp"

using namespace zgray;

namespace {

BitVector random_vec(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

BinaryLinearCode cyclic_span(std::size_t n, std::initializer_list<int> g) {
    std::vector<BitVector> rows;
    const std::vector<int> coeffs(g);
    for (std::size_t s = 0; s + coeffs.size() <= n + 1; ++s) {
        BitVector row(n);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i]) row.set(s + i, true);
        rows.push_back(row);
    }
    return BinaryLinearCode::from_spanning(n, rows);
}

}  // namespace

TEST_CASE("membership and reduction") {
    const auto c = BinaryLinearCode::from_spanning(
        4, std::vector<BitVector>{BitVector::from_bits({1, 1, 0, 0}),
                                  BitVector::from_bits({0, 0, 1, 1}),
                                  BitVector::from_bits({1, 1, 1, 1})});
    CHECK(c.dimension() == 2);
    CHECK(c.contains(BitVector::from_bits({1, 1, 1, 1})));
    CHECK(c.contains(BitVector(4)));
    CHECK(!c.contains(BitVector::from_bits({1, 0, 0, 0})));
}

TEST_CASE("square of the repetition code is itself") {
    const auto rep = BinaryLinearCode::from_spanning(
        2, std::vector<BitVector>{BitVector::from_bits({1, 1})});
    CHECK(rep.square() == rep);
}

TEST_CASE("squaring the [7,3] cyclic code") {
    // <x^4 + x^2 + x + 1> has dimension 3; its square is the [7,6] code
    // <x + 1>, whose square is the full space.
    const auto c1 = cyclic_span(7, {1, 1, 1, 0, 1});
    CHECK(c1.dimension() == 3);
    const auto c2 = c1.square();
    CHECK(c2.dimension() == 6);
    CHECK(c2 == cyclic_span(7, {1, 1}));
    CHECK(c2.square() == BinaryLinearCode::full_space(7));
}

TEST_CASE("square grows monotonically") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 4 + rng() % 8;
        std::vector<BitVector> rows;
        for (int i = 0; i < 3; ++i) rows.push_back(random_vec(rng, n));
        const auto c = BinaryLinearCode::from_spanning(n, rows);
        const auto sq = c.square();
        CHECK(c.subset_of(sq));
        CHECK(sq.subset_of(sq.square()));
    }
}

TEST_CASE("basis-pair subset check agrees with all codeword pairs") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 6 + rng() % 5;
        std::vector<BitVector> rows, other;
        for (int i = 0; i < 4; ++i) rows.push_back(random_vec(rng, n));
        for (int i = 0; i < 3; ++i) other.push_back(random_vec(rng, n));
        const auto c = BinaryLinearCode::from_spanning(n, rows);
        const auto d = BinaryLinearCode::from_spanning(n, other);

        bool by_basis = true;
        for (const auto& a : c.basis())
            for (const auto& b : c.basis())
                if (!d.contains(a & b)) by_basis = false;

        bool by_words = true;
        for (const auto& a : c.codewords())
            for (const auto& b : c.codewords())
                if (!d.contains(a & b)) by_words = false;

        CHECK(by_basis == by_words);
    }
}

TEST_CASE("codeword enumeration") {
    const auto c = BinaryLinearCode::from_spanning(
        5, std::vector<BitVector>{BitVector::from_bits({1, 0, 1, 0, 1}),
                                  BitVector::from_bits({0, 1, 1, 0, 0}),
                                  BitVector::from_bits({0, 0, 0, 1, 1})});
    auto words = c.codewords();
    CHECK(words.size() == 8);
    std::sort(words.begin(), words.end());
    CHECK(std::unique(words.begin(), words.end()) == words.end());
    for (const auto& w : words) CHECK(c.contains(w));
    CHECK_THROWS_AS(BinaryLinearCode::full_space(40).codewords(1 << 10), std::runtime_error);
}

TEST_CASE("rank helper") {
    std::vector<BitVector> vs{BitVector::from_bits({1, 1, 0}), BitVector::from_bits({0, 1, 1}),
                              BitVector::from_bits({1, 0, 1})};
    CHECK(gf2_rank(vs) == 2);
    CHECK(gf2_rank(std::vector<BitVector>{}) == 0);
}
