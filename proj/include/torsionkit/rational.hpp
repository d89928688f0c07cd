#pragma once

// Exact scalar field: arbitrary-precision rationals, canonical
// (gcd(|num|, den) = 1, den >= 1) by gmp's invariants.

#include <gmpxx.h>

#include <string>

namespace torsionkit {

using Rational = mpq_class;

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace torsionkit
