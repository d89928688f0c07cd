#pragma once

// Ring derivations and module δ-derivations over finite rings, with complete
// enumeration by backtracking search plus constraint propagation.

#include <vector>

#include "torsionkit/module.hpp"
#include "torsionkit/ring.hpp"

namespace torsionkit {

/// An additive map δ: R -> R with δ(rs) = δ(r)s + rδ(s).
struct RingDerivation {
    RingPtr ring;
    std::vector<int> table;

    int operator()(int r) const { return table[r]; }
    bool operator==(const RingDerivation& other) const { return table == other.table; }
};

/// An additive map d: M -> M with d(xr) = d(x)r + xδ(r).
struct ModuleDerivation {
    ModulePtr module;
    RingDerivation delta;
    std::vector<int> table;

    int operator()(int x) const { return table[x]; }
    bool operator==(const ModuleDerivation& other) const { return table == other.table; }
};

/// Exhaustive check of additivity and the Leibniz law.
bool is_ring_derivation(const FiniteRing& ring, const std::vector<int>& table);

/// Exhaustive check of additivity and d(xr) = d(x)r + xδ(r).
bool is_module_derivation(const FiniteModule& module, const RingDerivation& delta,
                          const std::vector<int>& table);

/// The left-sided law d(r y) = δ(r) y + r d(y) on a bimodule. The tensor
/// construction needs this of its right factor.
bool satisfies_left_derivation_law(const FiniteBimodule& bimodule, const RingDerivation& delta,
                                   const std::vector<int>& table);

/// δ_a(b) = ab - ba.
RingDerivation inner_derivation(const RingPtr& ring, int a);

/// d_a(x) = a x - x a on a bimodule; a δ_a-derivation.
ModuleDerivation inner_bimodule_derivation(const BimodulePtr& bimodule, int a);

/// The zero map as a derivation.
RingDerivation zero_derivation(const RingPtr& ring);
ModuleDerivation zero_module_derivation(const ModulePtr& module, const RingDerivation& delta);

/// All ring derivations, sorted lexicographically by value table. Search
/// branches on the smallest element whose value is not yet forced; assigning
/// an element propagates additivity over all determined pairs and the Leibniz
/// law over all determined products. Throws SearchBudgetExceeded when more
/// than caps.search_budget assignments are attempted.
std::vector<RingDerivation> enumerate_ring_derivations(const RingPtr& ring,
                                                       const Caps& caps = {});

/// All δ-derivations of the module, same strategy; the action law is
/// propagated eagerly, so cyclic modules are solved with almost no branching.
std::vector<ModuleDerivation> enumerate_module_derivations(const ModulePtr& module,
                                                           const RingDerivation& delta,
                                                           const Caps& caps = {});

}  // namespace torsionkit
