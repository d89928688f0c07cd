#pragma once

// Cyclic decomposition of the additive group of a finite module:
// basis g_1..g_k with orders a_1 >= a_2 >= ... (each dividing the previous),
// such that every element is a unique combination sum c_i * g_i.

#include <vector>

#include "torsionkit/module.hpp"

namespace torsionkit {

struct CyclicDecomposition {
    std::vector<int> basis;                 // element index of each g_i
    std::vector<int> orders;                // a_i, nonincreasing divisibility chain
    std::vector<std::vector<int>> coords;   // element -> (c_1..c_k), 0 <= c_i < a_i
};

/// Decomposes (M, +). Deterministic: each recursive step picks the smallest
/// element of maximal order and indexes quotient classes by smallest member.
CyclicDecomposition decompose_abelian(const FiniteModule& module);

}  // namespace torsionkit
