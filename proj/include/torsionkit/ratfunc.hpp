#pragma once

// Rational functions num/den over the rationals, kept in the canonical
// reduced form: gcd(num, den) = 1 and den monic. Equality is structural.

#include <string>

#include "torsionkit/errors.hpp"
#include "torsionkit/poly.hpp"

namespace torsionkit {

class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);      // canonicalizes; zero den -> UsageError
    static RatFunc from_poly(Poly p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RatFunc&) const = default;
    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& other) const;
    RatFunc operator-(const RatFunc& other) const;
    RatFunc operator*(const RatFunc& other) const;
    RatFunc operator/(const RatFunc& other) const;  // UsageError on zero
    RatFunc reciprocal() const;                     // UsageError on zero

private:
    Poly num_;
    Poly den_;
};

std::string ratfunc_to_string(const RatFunc& q);

/// Parses "(x^2+1)/(x-2)" style input: integer coefficients, ^ powers with
/// exponent at most 64, juxtaposition or * for products, and at most one /
/// at the top level. Throws UsageError on malformed input.
RatFunc parse_ratfunc(const std::string& text);

/// Same grammar without the top-level division.
Poly parse_poly(const std::string& text);

}  // namespace torsionkit
