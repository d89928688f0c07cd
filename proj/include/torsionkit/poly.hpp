#pragma once

// Dense univariate polynomials over the rationals. Coefficients are stored
// constant term first and normalized so the last stored coefficient is
// nonzero; the zero polynomial stores nothing and has degree -1.

#include <string>
#include <vector>

#include "torsionkit/rational.hpp"

namespace torsionkit {

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly one();
    static Poly variable();
    static Poly monomial(const Rational& coeff, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const Rational& leading() const;          // requires a nonzero polynomial
    Rational coeff(int k) const;              // zero beyond the degree
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const Poly&) const = default;
    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& scalar) const;

private:
    std::vector<Rational> c_;
    void normalize();
};

/// Formal derivative (the derivation d/dx on the polynomial ring).
Poly poly_derive(const Poly& p);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over the rational field; the divisor must be nonzero.
PolyDivision poly_divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; zero only when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_make_monic(const Poly& p);

/// Deterministic printer, highest power first, e.g. "2x^3-x+1/2".
std::string poly_to_string(const Poly& p);

}  // namespace torsionkit
