#include "torsionkit/ratfunc.hpp"

#include <cctype>

namespace torsionkit {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    num_ = poly_divmod(num_, g).quotient;
    den_ = poly_divmod(den_, g).quotient;
    Rational lead = den_.leading();
    num_ = num_ * (Rational(1) / lead);
    den_ = den_ * (Rational(1) / lead);
}

RatFunc RatFunc::from_poly(Poly p) { return RatFunc(std::move(p), Poly::one()); }

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& other) const {
    return RatFunc(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator-(const RatFunc& other) const { return *this + (-other); }

RatFunc RatFunc::operator*(const RatFunc& other) const {
    return RatFunc(num_ * other.num_, den_ * other.den_);
}

RatFunc RatFunc::operator/(const RatFunc& other) const {
    return *this * other.reciprocal();
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw UsageError("division by the zero rational function");
    return RatFunc(den_, num_);
}

std::string ratfunc_to_string(const RatFunc& q) {
    if (q.is_polynomial()) return poly_to_string(q.num());
    return "(" + poly_to_string(q.num()) + ")/(" + poly_to_string(q.den()) + ")";
}

namespace {

constexpr int kMaxDegree = 64;

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*      (juxtaposition multiplies)
//   factor := primary ['^' integer]
//   primary := integer | 'x' | '(' expr ')'
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Poly parse_expression() {
        Poly out = parse_signed_term();
        while (true) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                out = out + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                out = out - parse_term();
            } else {
                return out;
            }
        }
    }

    void expect_end() {
        skip_space();
        if (pos_ != text_.size())
            throw UsageError("unexpected '" + std::string(1, text_[pos_]) +
                             "' at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    Poly parse_signed_term() {
        skip_space();
        if (peek() == '+') {
            ++pos_;
            return parse_term();
        }
        if (peek() == '-') {
            ++pos_;
            return -parse_term();
        }
        return parse_term();
    }

    Poly parse_term() {
        Poly out = parse_factor();
        while (true) {
            skip_space();
            char c = peek();
            if (c == '*') {
                ++pos_;
                out = out * parse_factor();
            } else if (c == 'x' || c == '(') {
                out = out * parse_factor();
            } else {
                return out;
            }
        }
    }

    Poly parse_factor() {
        Poly base = parse_primary();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        long exponent = parse_integer("exponent");
        if (exponent < 0 || exponent > kMaxDegree)
            throw UsageError("exponent " + std::to_string(exponent) +
                             " outside [0, " + std::to_string(kMaxDegree) + "]");
        Poly out = Poly::one();
        for (long i = 0; i < exponent; ++i) out = out * base;
        return out;
    }

    Poly parse_primary() {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expression();
            skip_space();
            if (peek() != ')') throw UsageError("missing ')' in '" + text_ + "'");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return Poly(Rational(mpz_class(text_.substr(start, pos_ - start))));
        }
        throw UsageError("expected a coefficient, 'x', or '(' at position " +
                         std::to_string(pos_) + " in '" + text_ + "'");
    }

    long parse_integer(const std::string& what) {
        skip_space();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw UsageError("missing " + what + " in '" + text_ + "'");
        return std::stol(text_.substr(start, pos_ - start));
    }
};

Poly parse_whole(const std::string& text) {
    Parser parser(text);
    Poly out = parser.parse_expression();
    parser.expect_end();
    if (out.degree() > kMaxDegree)
        throw UsageError("polynomial degree " + std::to_string(out.degree()) +
                         " exceeds the budget of " + std::to_string(kMaxDegree));
    return out;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw UsageError("more than one top-level '/' in '" + text + "'");
            slash = i;
        }
    }
    if (slash == std::string::npos) return RatFunc::from_poly(parse_whole(text));
    return RatFunc(parse_whole(text.substr(0, slash)), parse_whole(text.substr(slash + 1)));
}

Poly parse_poly(const std::string& text) { return parse_whole(text); }

}  // namespace torsionkit
