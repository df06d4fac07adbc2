#pragma once

#include <vector>

#include "zgray/additive_code.hpp"
#include "zgray/binary_code.hpp"

namespace zgray {

// A chain of L equal-length binary codes whose Schur-closure C_i o C_i in
// C_{i+1} has been verified at construction; consequently the chain is
// nested.
struct NestedSpec {
    int level = 0;
    std::vector<BinaryLinearCode> layers;

    // Throws when the layer shapes disagree or the chain is not closed under
    // the Schur product (checked over basis pairs).
    static NestedSpec create(std::vector<BinaryLinearCode> layer_codes);
};

// The additive code C_1 + 2 C_2 + ... + 2^(L-1) C_L, generated by the layer
// bases scaled by 2^(i-1). For a closed chain the span equals the sum set.
AdditiveCode nested_code(const NestedSpec& spec);

// r-th order Reed-Muller code of length 2^m, spanned by the evaluations of
// all degree <= r monomials; points are enumerated in counting order.
BinaryLinearCode reed_muller(int r, int m);

// Same code via the (u, u+v) recursion; kept as an independent construction.
BinaryLinearCode reed_muller_uv(int r, int m);

enum class RmChainKind { low_order, even, odd };

// low_order: R(0,m), R(1,m), R(2,m) for any m >= 2 (param is m).
// even:      R(0,2l), R(2,2l), ..., R(2l-2,2l) for l < 4 (param is l).
// odd:       R(1,2l), R(3,2l), ..., R(2l-1,2l) for l < 4 (param is l).
// The chain closure check runs at construction and can still refuse a
// parameter the bound admits (the odd chain at l = 3 contains
// R(3,6) o R(3,6) = R(6,6), which is not inside R(5,6)).
NestedSpec rm_chain(RmChainKind kind, int param);

}  // namespace zgray
