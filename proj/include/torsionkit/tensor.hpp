#pragma once

// M ⊗_R N for a finite right module M and finite bimodule N, computed as a
// quotient of the finite abelian group M ⊗_Z N, plus the induced derivation
// d_M ⊗ 1 + 1 ⊗ d_N.

#include <vector>

#include "torsionkit/derivation.hpp"
#include "torsionkit/module.hpp"

namespace torsionkit {

struct TensorProduct {
    ModulePtr module;   // M ⊗_R N as a right module
    ModulePtr left;     // M
    BimodulePtr right;  // N

    /// beta[x][y] = image of (x, y) under the balanced map M x N -> M ⊗_R N.
    std::vector<std::vector<int>> beta;

    // Transport data: cyclic bases of M and N, with the order of each simple
    // tensor u_i ⊗ v_j in the integral tensor and, for every element of the
    // result, the coordinate matrix of its canonical integral representative.
    std::vector<int> basis_left;
    std::vector<int> basis_right;
    std::vector<std::vector<int>> pair_order;               // d_ij = gcd(a_i, b_j)
    std::vector<std::vector<std::vector<int>>> rep_coords;  // element -> c[i][j]

    // Coordinates of the generators of the balancing subgroup; any additive
    // map transported from the integral tensor must kill these.
    std::vector<std::vector<std::vector<int>>> defect_coords;
};

/// Builds M ⊗_R N. The integral tensor is the direct sum of Z/gcd(a_i, b_j)
/// over the cyclic bases; the result divides out the subgroup generated by
/// (x r) ⊗ y - x ⊗ (r y); the right action comes from N. Tensor classes are
/// indexed by smallest integral representative.
TensorProduct tensor_over_ring(const ModulePtr& left, const BimodulePtr& right,
                               const Caps& caps = {});

/// The derivation x ⊗ y -> d_M(x) ⊗ y + x ⊗ d_N(y) on the tensor module.
/// Requires d_M, d_N to share one δ and d_N to satisfy the left-sided law
/// d_N(r y) = δ(r) y + r d_N(y), without which the map does not descend to
/// M ⊗_R N; violations raise IllFormed.
ModuleDerivation tensor_derivation(const TensorProduct& tensor, const ModuleDerivation& d_left,
                                   const ModuleDerivation& d_right);

}  // namespace torsionkit
