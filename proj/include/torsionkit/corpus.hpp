#pragma once

// The builtin ring corpus and the default module corpus that the sweep
// commands iterate over.

#include <string>
#include <vector>

#include "torsionkit/derivation.hpp"
#include "torsionkit/module.hpp"
#include "torsionkit/ring.hpp"

namespace torsionkit {

/// Names accepted by builtin_ring, in canonical order.
const std::vector<std::string>& builtin_ring_names();

/// Constructs one of the builtin table rings: zmod2, zmod3, zmod4, zmod6,
/// zmod8, f2xf2 (Z/2 x Z/2), t2f2 (upper triangular 2x2 over Z/2), m2f2
/// (full 2x2 matrices over Z/2). Unknown names raise UsageError.
RingPtr builtin_ring(const std::string& name, const Caps& caps = {});

/// The default module corpus over a ring: the regular module, one cyclic
/// quotient R/I per right ideal I, one direct sum (regular plus the quotient
/// by the second-smallest ideal), and the regular bimodule.
std::vector<ModulePtr> default_module_corpus(const RingPtr& ring, const Caps& caps = {});

/// Every module derivation of `module`, over every ring derivation of its
/// ring, concatenated in canonical enumeration order.
std::vector<ModuleDerivation> corpus_derivations(const ModulePtr& module, const Caps& caps = {});

}  // namespace torsionkit
