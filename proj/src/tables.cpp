#include "zgray/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "zgray/cyclic.hpp"

namespace zgray {

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {"L2-n6-a", 2,
         {{1, 0, 0, 0, 1, 2}, {0, 1, 0, 1, 0, 2}, {0, 0, 1, 2, 2, 1}},
         4, true, true, true, 4},
        {"L2-n6-b", 2,
         {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 3, 2}},
         4, false, false, false, 4},
        {"octacode", 2,
         {{1, 0, 0, 0, 3, 1, 2, 1},
          {0, 1, 0, 0, 1, 2, 3, 1},
          {0, 0, 1, 0, 3, 3, 3, 2},
          {0, 0, 0, 1, 2, 3, 1, 1}},
         6, true, false, false, 6},
        {"L2-n8", 2,
         {{1, 0, 0, 0, 0, 1, 2, 2},
          {0, 1, 0, 0, 1, 2, 0, 2},
          {0, 0, 1, 0, 2, 0, 1, 2},
          {0, 0, 0, 1, 2, 2, 2, 1}},
         4, true, true, true, 4},
        {"L2-n10-a", 2,
         {{1, 0, 0, 0, 0, 1, 1, 3, 3, 3},
          {0, 1, 0, 0, 0, 1, 2, 0, 1, 1},
          {0, 0, 1, 0, 1, 0, 1, 1, 1, 1},
          {0, 0, 0, 1, 1, 0, 1, 2, 0, 3},
          {0, 0, 0, 0, 2, 0, 0, 0, 2, 2},
          {0, 0, 0, 0, 0, 2, 0, 2, 2, 0}},
         6, false, false, false, 6},
        {"L2-n10-b", 2,
         {{1, 0, 0, 0, 0, 0, 0, 1, 2, 2},
          {0, 1, 0, 0, 0, 0, 1, 0, 1, 2},
          {0, 0, 1, 0, 0, 0, 2, 2, 0, 1},
          {0, 0, 0, 1, 1, 1, 0, 0, 0, 2},
          {0, 0, 0, 0, 2, 0, 0, 2, 0, 2},
          {0, 0, 0, 0, 0, 2, 2, 0, 2, 2}},
         4, true, true, true, 4},
        {"L3-n3-357", 3, {{3, 5, 7}}, 5, true, false, false, 6},
        {"L3-n3-upper", 3, {{2, 1, 5}, {0, 3, 6}, {0, 0, 7}}, 1, true, true, true, 2},
        {"L3-n3-even", 3, {{0, 2, 4}, {2, 4, 6}}, 4, true, true, true, 4},
        {"L3-n4", 3, {{2, 0, 1, 4}, {0, 2, 3, 6}, {1, 0, 2, 4}}, 2, true, true, true, 2},
        {"L3-n8-row", 3, {{0, 1, 2, 3, 4, 5, 6, 7}}, 16, false, false, false, 16},
        {"L3-n8-mixed", 3, {{4, 0, 2, 3, 0, 4, 6, 2}}, 4, true, true, true, 4},
        {"L3-n8-row-ones", 3,
         {{0, 1, 2, 3, 4, 5, 6, 7}, {1, 1, 1, 1, 1, 1, 1, 1}},
         8, true, true, true, 16},
        {"L4-n5-a", 4, {{8, 2, 0, 10, 8}, {0, 6, 8, 14, 15}}, 2, true, true, true, 4},
        {"L4-n5-b", 4, {{4, 5, 8, 9, 12}, {0, 6, 8, 14, 15}}, 2, true, false, false, 4},
        {"L4-n5-c", 4, {{0, 6, 8, 14, 15}}, 8, true, true, true, 8},
    };
    return rows;
}

std::vector<Table1Outcome> run_table1(std::uint64_t budget) {
    std::vector<Table1Outcome> out;
    const auto& rows = table1_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        std::vector<RingVector> gens;
        for (const auto& g : row.generators) gens.emplace_back(row.level, g);
        const AdditiveCode code(row.level, gens[0].length(), std::move(gens));

        Table1Outcome o;
        o.row = i;
        o.record = analyze(code, row.label, budget);
        auto expect = [&](bool cond, const std::string& what) {
            if (!cond) o.mismatches.push_back(what);
        };
        expect(o.record.d_lee == row.d_lee,
               "d_lee: got " + std::to_string(o.record.d_lee) + ", expected " +
                   std::to_string(row.d_lee));
        expect(o.record.d_hamming_gray == row.d_hamming,
               "d_hamming: got " + std::to_string(o.record.d_hamming_gray) + ", expected " +
                   std::to_string(row.d_hamming));
        expect(o.record.schur_chain_closed == row.chain_closed, "schur chain flag");
        expect(o.record.r_subset_b == row.r_subset_b, "R subset B flag");
        expect(o.record.linear == row.linear, "linearity verdict");
        if (o.record.witness)
            expect(replay_witness(code, o.record.witness->first, o.record.witness->second),
                   "witness replay");
        // Second route must agree.
        expect(linear_by_schur_sum(code, budget).linear == o.record.linear,
               "schur-sum route disagrees");
        out.push_back(std::move(o));
    }
    return out;
}

const std::vector<Table2Row>& table2_rows() {
    // Coset representatives modulo 125 are 0, 1, 5, 25.
    static const std::vector<Table2Row> rows = {
        {{0}, {1, 5, 25}, {0}, {1, 5, 25}, {0}, {1, 5, 25}},
        {{0, 1}, {5, 25}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{0, 1, 5}, {25}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{0, 5}, {1, 25}, {0, 5, 25}, {1}, {0, 5, 25}, {1}},
        {{0, 25}, {1, 5}, {0, 25}, {1, 5}, {0, 25}, {1, 5}},
        {{0, 5, 25}, {1}, {0, 5, 25}, {1}, {0, 5, 25}, {1}},
        {{1}, {0, 5, 25}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{1, 5}, {0, 25}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{1, 25}, {0, 5}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{1, 5, 25}, {0}, {0, 1, 5, 25}, {}, {0, 1, 5, 25}, {}},
        {{5}, {0, 1, 25}, {0, 5, 25}, {1}, {0, 5, 25}, {1}},
        {{5, 25}, {0, 1}, {0, 5, 25}, {1}, {0, 5, 25}, {1}},
        {{25}, {0, 1, 5}, {0, 25}, {1, 5}, {0, 25}, {1, 5}},
    };
    return rows;
}

std::vector<Table2Outcome> run_table2() {
    const int n = 125;
    const auto cosets = cyclotomic_cosets(n);
    const auto field = build_field_for(n, /*allow_large=*/true);

    std::map<int, Gf2Poly> minpoly;
    for (int rep : cosets.representatives()) minpoly[rep] = minimal_polynomial(rep, cosets, field);

    auto expand = [&](const std::vector<int>& reps) {
        std::vector<int> set;
        for (int r : reps) {
            const auto& c = cosets.coset_of(r);
            set.insert(set.end(), c.begin(), c.end());
        }
        std::sort(set.begin(), set.end());
        return set;
    };
    auto product = [&](const std::vector<int>& factors) {
        Gf2Poly g = Gf2Poly::one();
        for (int f : factors) g = g * minpoly.at(f);
        return g;
    };

    std::vector<Table2Outcome> out;
    const auto& rows = table2_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        Table2Outcome o;
        o.row = i;
        auto expect = [&](bool cond, const std::string& what) {
            if (!cond) o.mismatches.push_back(what);
        };

        const CyclicCodeSpec c1 = code_from_I(expand(row.i1), cosets, field);
        o.g1 = c1.g.pretty();
        expect(c1.g == product(row.g1), "g1 mismatch");

        const CyclicCodeSpec c2 = square_cyclic(c1, cosets, field);
        o.g2 = c2.g.pretty();
        expect(c2.I == expand(row.i2), "I2 mismatch");
        expect(c2.g == product(row.g2), "g2 mismatch");

        const CyclicCodeSpec c3 = square_cyclic(c2, cosets, field);
        o.g3 = c3.g.pretty();
        expect(c3.I == expand(row.i3), "I3 mismatch");
        expect(c3.g == product(row.g3), "g3 mismatch");

        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace zgray
