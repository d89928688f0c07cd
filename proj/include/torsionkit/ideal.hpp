#pragma once

// Right ideals of a finite ring, represented as 64-bit element sets.
//
// Bit i of a mask means "element i is in the set". The ring order cap of 64
// makes every right ideal fit in one word, so lattice operations are bitwise.

#include <cstdint>
#include <string>
#include <vector>

#include "torsionkit/ring.hpp"

namespace torsionkit {

using RightIdeal = std::uint64_t;

inline bool ideal_contains(RightIdeal ideal, int element) {
    return (ideal >> element & 1) != 0;
}

/// Elements of the set in ascending order.
std::vector<int> ideal_elements(RightIdeal ideal);

/// Hexadecimal rendering, e.g. "0x5", used in reports and spec files.
std::string ideal_to_hex(RightIdeal ideal);
RightIdeal ideal_from_hex(const std::string& text);

/// The cyclic right ideal aR.
RightIdeal cyclic_ideal(const FiniteRing& ring, int a);

/// Closure of the given elements under addition and right multiplication;
/// always contains 0.
RightIdeal generated_right_ideal(const FiniteRing& ring, const std::vector<int>& generators);

/// Ideal sum I + J = { x + y : x in I, y in J }. Both inputs must be right
/// ideals.
RightIdeal ideal_sum(const FiniteRing& ring, RightIdeal a, RightIdeal b);

/// Checks closure of `set` under addition, negation and right multiplication,
/// plus membership of 0.
bool is_right_ideal(const FiniteRing& ring, RightIdeal set);

/// All right ideals, sorted by (size, mask). Computed as the closure of the
/// cyclic ideals under pairwise ideal sum.
std::vector<RightIdeal> enumerate_right_ideals(const FiniteRing& ring);

/// The right ideal (I : r) = { s in R : r s in I }.
RightIdeal quotient_ideal(const FiniteRing& ring, RightIdeal ideal, int r);

/// Essential: I meets every nonzero right ideal. Equivalently (and this is
/// what is checked) I meets every nonzero cyclic right ideal aR.
bool is_essential(const FiniteRing& ring, RightIdeal ideal);

/// Dense: for all r and all s != 0 there is t with s t != 0 and r t in I.
bool is_dense(const FiniteRing& ring, RightIdeal ideal);

}  // namespace torsionkit
