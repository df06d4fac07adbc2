#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "zgray/additive_code.hpp"

using namespace zgray;
using zgray::testing::brute_force_span;
using zgray::testing::make_code;
using zgray::testing::octacode;
using zgray::testing::random_code;

TEST_CASE("enumeration of a one-generator quaternary code") {
    const auto c = make_code(2, {{1, 3}});
    const auto words = c.enumerate();
    REQUIRE(words.size() == 4);
    CHECK(words[0] == RingVector(2, {0, 0}));
    CHECK(words[1] == RingVector(2, {1, 3}));
    CHECK(words[2] == RingVector(2, {2, 2}));
    CHECK(words[3] == RingVector(2, {3, 1}));
}

TEST_CASE("zero code enumerates to the origin") {
    const auto z = AdditiveCode::zero(3, 4);
    CHECK(z.enumerate().size() == 1);
    CHECK(z.cardinality_log2() == 0);
}

TEST_CASE("octacode has 256 codewords") {
    const auto o = octacode();
    CHECK(o.cardinality_log2() == 8);
    CHECK(o.pivot_exponents() == std::vector<int>{0, 0, 0, 0});
    CHECK(o.enumerate().size() == 256);
}

TEST_CASE("membership") {
    const auto c = make_code(2, {{1, 3}});
    CHECK(c.contains(RingVector(2, {2, 2})));
    CHECK(c.contains(RingVector(2, {0, 0})));
    CHECK(!c.contains(RingVector(2, {1, 0})));
    CHECK(!octacode().contains(RingVector(2, {0, 0, 0, 0, 0, 0, 2, 2})));
    CHECK_THROWS_AS(c.contains(RingVector(3, {1, 3})), std::invalid_argument);
}

TEST_CASE("standard form shapes") {
    const auto a = make_code(2, {{1, 2}, {0, 2}});
    CHECK(a.pivot_exponents() == std::vector<int>{0, 1});
    CHECK(a.cardinality_log2() == 3);  // 4^1 2^1

    const auto b = make_code(2, {{2, 2}, {1, 3}});
    REQUIRE(b.canonical_rows().size() == 1);
    CHECK(b.canonical_rows()[0] == RingVector(2, {1, 3}));
    CHECK(b.pivot_exponents() == std::vector<int>{0});
    CHECK(b.enumerate() == make_code(2, {{1, 3}}).enumerate());
}

TEST_CASE("canonical span equals the generator span") {
    std::mt19937_64 rng(10);
    for (int round = 0; round < 120; ++round) {
        const int level = 2 + int(rng() % 2);
        const auto code = random_code(rng, level, 6, 3);
        const auto enumerated = code.enumerate();
        const auto reference = brute_force_span(level, code.generators());
        CHECK(enumerated == reference);
        CHECK(enumerated.size() == (std::size_t(1) << code.cardinality_log2()));
    }
}

TEST_CASE("standard form at L=2 has the block shape") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 60; ++round) {
        const auto code = random_code(rng, 2, 5, 3);
        const auto rows = code.standard_form_rows();
        const auto& exps = code.pivot_exponents();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            // pivot block: 1 or 2 on the diagonal, zeros elsewhere in the column
            CHECK(rows[i][i] == (exps[i] == 0 ? 1u : 2u));
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (i == j) continue;
                if (exps[j] == 0) CHECK(rows[i][j] == 0);           // identity column
                else CHECK(rows[i][j] < 2);                          // reduced above 2-pivot
            }
            if (exps[i] == 1)
                for (std::size_t c = 0; c < code.length(); ++c) CHECK(rows[i][c] % 2 == 0);
        }
    }
}

TEST_CASE("membership agrees with enumeration exhaustively") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 25; ++round) {
        const auto code = random_code(rng, 2, 4, 2);
        const auto words = code.enumerate();
        const std::size_t n = code.length();
        std::vector<std::uint32_t> v(n, 0);
        while (true) {
            const RingVector x(2, v);
            const bool member = std::binary_search(words.begin(), words.end(), x);
            CHECK(code.contains(x) == member);
            std::size_t i = 0;
            while (i < n && ++v[i] == 4) v[i++] = 0;
            if (i == n) break;
        }
    }
}

TEST_CASE("enumeration budget") {
    const auto big = make_code(2, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
    CHECK(big.cardinality_log2() == 12);
    CHECK_THROWS_AS(big.enumerate(1 << 10), BudgetExceeded);
}

TEST_CASE("decomposition code of the worked quaternary example") {
    const auto view = decomposition_view(make_code(2, {{1, 3}}));
    REQUIRE(view.b_words.size() == 4);
    std::vector<BitVector> expected{
        BitVector::from_bits({0, 0, 0, 0}), BitVector::from_bits({1, 1, 0, 1}),
        BitVector::from_bits({0, 0, 1, 1}), BitVector::from_bits({1, 1, 1, 0})};
    std::sort(expected.begin(), expected.end());
    CHECK(view.b_words == expected);
    CHECK(view.b_linear);
}

TEST_CASE("associated codes of the full single-row octal code") {
    const auto view = decomposition_view(make_code(3, {{0, 1, 2, 3, 4, 5, 6, 7}}));
    CHECK(view.associated_sets[0].size() == 2);
    CHECK(view.associated_sets[1].size() == 4);
    CHECK(view.associated_sets[2].size() == 8);
    CHECK(view.associated_sets[1] ==
          std::vector<BitVector>{
              BitVector::from_bits({0, 0, 0, 0, 0, 0, 0, 0}),
              BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1}),
              BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1}),
              BitVector::from_bits({0, 1, 1, 0, 0, 1, 1, 0})});
    // nesting holds in this example (a property, not an invariant)
    CHECK(view.associated[0].subset_of(view.associated[1]));
    CHECK(view.associated[1].subset_of(view.associated[2]));
}

TEST_CASE("zero code decomposition") {
    const auto view = decomposition_view(AdditiveCode::zero(2, 3));
    CHECK(view.b_words.size() == 1);
    for (const auto& s : view.associated_sets) CHECK(s.size() == 1);
}

TEST_CASE("associated sets are always XOR-closed") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 80; ++round) {
        const int level = 2 + int(rng() % 3);
        const auto code = random_code(rng, level, 5, 2);
        CHECK_NOTHROW(decomposition_view(code));
    }
}

TEST_CASE("schur chain of the full single-row octal code fails at level 2") {
    const auto view = decomposition_view(make_code(3, {{0, 1, 2, 3, 4, 5, 6, 7}}));
    const auto res = schur_closed_chain(view);
    REQUIRE(!res.closed);
    CHECK(res.witness_level == 2);
    CHECK(res.witness->first == BitVector::from_bits({0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(res.witness->second == BitVector::from_bits({0, 0, 1, 1, 0, 0, 1, 1}));
    CHECK((res.witness->first & res.witness->second) ==
          BitVector::from_bits({0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(!view.associated[2].contains(res.witness->first & res.witness->second));
}

TEST_CASE("schur chain of the octacode is closed") {
    const auto res = schur_closed_chain(decomposition_view(octacode()));
    CHECK(res.closed);
    CHECK(res.level_ok == std::vector<bool>{true});
}

TEST_CASE("chain with trivial first level is closed") {
    const auto view = decomposition_view(make_code(2, {{2, 2, 0}}));
    CHECK(view.associated_sets[0].size() == 1);  // C_1 = {0}
    CHECK(schur_closed_chain(view).closed);
}

TEST_CASE("basis-pair chain check equals the brute-force pair check") {
    std::mt19937_64 rng(14);
    for (int round = 0; round < 60; ++round) {
        const int level = 2 + int(rng() % 2);
        const auto code = random_code(rng, level, 5, 2);
        const auto view = decomposition_view(code);
        const auto res = schur_closed_chain(view);
        for (int i = 0; i + 1 < level; ++i) {
            bool brute = true;
            for (const auto& a : view.associated_sets[std::size_t(i)])
                for (const auto& b : view.associated_sets[std::size_t(i)])
                    if (!view.associated[std::size_t(i) + 1].contains(a & b)) brute = false;
            CHECK(res.level_ok[std::size_t(i)] == brute);
        }
    }
}

TEST_CASE("cyclic detection") {
    CHECK(make_code(2, {{1, 1, 1}}).is_cyclic());
    CHECK(make_code(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).is_cyclic());
    // the shift of (0,1,...,7) starts with 7, no multiple of the row does
    CHECK(!make_code(3, {{0, 1, 2, 3, 4, 5, 6, 7}}).is_cyclic());
    CHECK(!octacode().is_cyclic());
}
