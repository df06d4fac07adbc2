#pragma once

#include <string>
#include <vector>

#include "zgray/additive_code.hpp"

namespace zgray {

// Generator matrices of the recursive code families over Z_{2^L}. The
// recursions fix the column order, which the matrix accessors reproduce
// verbatim.

// Hadamard code H^{t_1,...,t_L}; needs t.size() == L and t_1 >= 1.
std::vector<RingVector> hadamard_matrix(int level, const std::vector<int>& t);
AdditiveCode hadamard_code(int level, const std::vector<int>& t);

// Simplex codes of type alpha (length (2^L)^k) and beta.
std::vector<RingVector> simplex_alpha_matrix(int level, int k);
std::vector<RingVector> simplex_beta_matrix(int level, int k);
AdditiveCode simplex_alpha(int level, int k);
AdditiveCode simplex_beta(int level, int k);

// MacDonald codes: the alpha matrix is the simplex alpha matrix with its
// first 2^(Lu) columns removed (the block whose upper k-u rows are zero);
// the beta deletion removes the nested zero-over-beta block. 1 <= u <= k-1.
std::vector<RingVector> macdonald_alpha_matrix(int level, int k, int u);
std::vector<RingVector> macdonald_beta_matrix(int level, int k, int u);
AdditiveCode macdonald_alpha(int level, int k, int u);
AdditiveCode macdonald_beta(int level, int k, int u);

struct FamilyVerdictRow {
    std::string family;
    int level = 0;
    std::vector<int> params;   // t-vector, {k} or {k, u}
    bool expected_linear = false;
    bool computed_linear = false;
    std::string method;        // "schur_witness" or "decomposition"
    bool ok = false;
};

// Runs the grid of family instances whose (non)linearity is pinned down:
// Hadamard one-generator codes and H^{1,0,1} are linear, H^{k,0,...,0} with
// k >= 2, L >= 3 nonlinear, simplex alpha nonlinear except L = 2, k = 1,
// simplex beta nonlinear for k >= 2, MacDonald alpha/beta nonlinear. Each
// instance is decided by the Schur-chain witness first, falling back to the
// full decomposition test.
std::vector<FamilyVerdictRow> verify_family_theorems(std::uint64_t budget = kDefaultBudget);

}  // namespace zgray
