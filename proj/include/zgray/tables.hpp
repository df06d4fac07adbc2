#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zgray/report.hpp"

namespace zgray {

// Embedded expected values for the two classification tables; the runners
// recompute every cell and report per-row mismatches.

struct Table1Row {
    const char* label;
    int level;
    std::vector<std::vector<std::uint32_t>> generators;
    std::uint64_t d_lee;
    bool chain_closed;
    bool r_subset_b;
    bool linear;
    std::uint64_t d_hamming;
};

const std::vector<Table1Row>& table1_rows();

struct Table1Outcome {
    std::size_t row = 0;
    ReportRecord record;
    std::vector<std::string> mismatches;  // empty when the row matches
};

std::vector<Table1Outcome> run_table1(std::uint64_t budget = kDefaultBudget);

// Length-125 squaring chains. I sets are named by the coset representatives
// they contain; generator polynomials by the representatives whose minimal
// polynomials multiply together (empty product = 1).
struct Table2Row {
    std::vector<int> i1, g1, i2, g2, i3, g3;
};

const std::vector<Table2Row>& table2_rows();

struct Table2Outcome {
    std::size_t row = 0;
    std::string g1, g2, g3;               // computed, pretty-printed
    std::vector<std::string> mismatches;
};

std::vector<Table2Outcome> run_table2();

}  // namespace zgray
