#include "torsionkit/poly.hpp"

#include "torsionkit/errors.hpp"

namespace torsionkit {

Poly::Poly(const Rational& constant) : c_{constant} { normalize(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::one() { return Poly(Rational(1)); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coeff, int degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coeff;
    return Poly(std::move(c));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error("internal: leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (Rational& c : out.c_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Rational> c(std::max(c_.size(), other.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) c[i] += other.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    if (c_.empty() || other.c_.empty()) return {};
    std::vector<Rational> c(c_.size() + other.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& scalar) const {
    Poly out = *this;
    for (Rational& c : out.c_) c *= scalar;
    out.normalize();
    return out;
}

Poly poly_derive(const Poly& p) {
    std::vector<Rational> c;
    for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k) * Rational(k));
    return Poly(std::move(c));
}

PolyDivision poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    PolyDivision out;
    out.remainder = a;
    while (!out.remainder.is_zero() && out.remainder.degree() >= b.degree()) {
        Poly t = Poly::monomial(out.remainder.leading() / b.leading(),
                                out.remainder.degree() - b.degree());
        out.quotient = out.quotient + t;
        out.remainder = out.remainder - t * b;
    }
    return out;
}

namespace {

/// The primitive integer polynomial proportional to p, constant-first;
/// empty for zero. Scaling by a positive rational keeps gcds unchanged.
std::vector<mpz_class> primitive_integer_form(const Poly& p) {
    std::vector<mpz_class> out;
    if (p.is_zero()) return out;
    mpz_class denominators = 1;
    for (int k = 0; k <= p.degree(); ++k)
        mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
                p.coeff(k).get_den().get_mpz_t());
    out.resize(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        Rational scaled = p.coeff(k) * Rational(denominators);
        out[k] = scaled.get_num();
    }
    mpz_class content = 0;
    for (const mpz_class& c : out)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (mpz_class& c : out) c /= content;
    return out;
}

void strip_leading_zeros(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Divides out the integer content in place.
void make_primitive(std::vector<mpz_class>& p) {
    if (p.empty()) return;
    mpz_class content = 0;
    for (const mpz_class& c : p)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (mpz_class& c : p) c /= content;
}

/// The pseudo-remainder of a by b in Z[x]: a is rescaled by powers of b's
/// leading coefficient so every elimination step stays integral.
std::vector<mpz_class> pseudo_remainder(std::vector<mpz_class> a,
                                        const std::vector<mpz_class>& b) {
    const mpz_class& lead = b.back();
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const mpz_class coef = a.back();
        for (mpz_class& c : a) c *= lead;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        strip_leading_zeros(a);
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    // Primitive-PRS Euclid over Z: contents are divided out after every
    // pseudo-remainder, which keeps coefficient growth polynomial where the
    // rational Euclid would blow up.
    std::vector<mpz_class> x = primitive_integer_form(a);
    std::vector<mpz_class> y = primitive_integer_form(b);
    while (!y.empty()) {
        std::vector<mpz_class> r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return Poly();
    std::vector<Rational> coeffs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        coeffs[i] = Rational(x[i]) / Rational(x.back());
    return Poly(std::move(coeffs));
}

Poly poly_make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) out += rational_to_string(a);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace torsionkit
