#include <utility>
#include <vector>

#include "doctest.h"
#include "torsionkit/symbolic.hpp"

using namespace torsionkit;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }
RatFunc Q(const std::string& s) { return parse_ratfunc(s); }

// Independent reference: the schoolbook quotient rule (a'b - ab')/b^2.
RatFunc quotient_rule(const RatFunc& q) {
    return RatFunc(poly_derive(q.num()) * q.den() - q.num() * poly_derive(q.den()),
                   q.den() * q.den());
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    CHECK(P("x^2+1") + P("x-1") == P("x^2+x"));
    CHECK(P("x-1") * P("x+1") == P("x^2-1"));
    CHECK(-P("2x") == P("0-2x"));
    CHECK(P("0").is_zero());
    CHECK(P("x^2+1").degree() == 2);
    CHECK(P("7").degree() == 0);
    CHECK(Poly().degree() == -1);
    CHECK(P("2(x+1)") == P("2x+2"));
    CHECK(P("(x+1)(x-1)") == P("x^2-1"));
    CHECK(P("3*x^2") == P("3x^2"));
    CHECK(poly_to_string(P("2x^3-x+1")) == "2x^3-x+1");
    CHECK(poly_to_string(P("0-x^2")) == "-x^2");
    CHECK(poly_to_string(Poly()) == "0");
    CHECK(poly_to_string(Poly(Rational(1, 2))) == "1/2");
}

TEST_CASE("polynomial parse errors") {
    CHECK_THROWS_AS(parse_poly("x +"), UsageError);
    CHECK_THROWS_AS(parse_poly("(x"), UsageError);
    CHECK_THROWS_AS(parse_poly("x^"), UsageError);
    CHECK_THROWS_AS(parse_poly("y"), UsageError);
    CHECK_THROWS_AS(parse_poly("x^99"), UsageError);
    CHECK_THROWS_AS(parse_poly("1/x"), UsageError);
    CHECK_THROWS_AS(parse_ratfunc("1/x/x"), UsageError);
    CHECK_THROWS_AS(parse_ratfunc("x/0"), UsageError);
}

TEST_CASE("division and gcd") {
    auto [q, r] = poly_divmod(P("x^3-1"), P("x-1"));
    CHECK(q == P("x^2+x+1"));
    CHECK(r.is_zero());
    auto [q2, r2] = poly_divmod(P("x^2+1"), P("x"));
    CHECK(q2 == P("x"));
    CHECK(r2 == P("1"));
    CHECK_THROWS_AS(poly_divmod(P("x"), Poly()), UsageError);

    CHECK(poly_gcd(P("x^2-1"), P("x^2-2x+1")) == P("x-1"));
    CHECK(poly_gcd(P("2x+2"), P("4x+4")) == P("x+1"));  // monic output
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(P("3x"), Poly()) == P("x"));
}

TEST_CASE("formal derivative") {
    CHECK(poly_derive(P("x^2+1")) == P("2x"));
    CHECK(poly_derive(P("5")).is_zero());
    CHECK(poly_derive(Poly()).is_zero());
    CHECK(poly_derive(P("x^8")) == P("8x^7"));

    SampleSource rng(11);
    for (int i = 0; i < 300; ++i) {
        Poly p = rng.poly(8, 100), q = rng.poly(8, 100);
        CHECK(poly_derive(p * q) == poly_derive(p) * q + p * poly_derive(q));
        CHECK(poly_derive(p + q) == poly_derive(p) + poly_derive(q));
    }
}

TEST_CASE("rational function canonical form") {
    CHECK(Q("(x^2-1)/(x-1)") == RatFunc::from_poly(P("x+1")));
    CHECK(Q("(x^2-1)/(x-1)").is_polynomial());
    // Monic denominator: numerator absorbs the leading coefficient.
    RatFunc h = Q("1/(2x-2)");
    CHECK(h.den() == P("x-1"));
    CHECK(h.num() == Poly(Rational(1, 2)));
    CHECK(Q("0/x").is_zero());
    CHECK(Q("0/x").den().is_one());
    CHECK(Q("(2x)/(4x^2)") == Q("1/(2x)"));

    CHECK(Q("1/x") + Q("1/x") == Q("2/x"));
    CHECK(Q("1/x") * Q("x/(x+1)") == Q("1/(x+1)"));
    CHECK(Q("1/x") * Q("1/(x+1)") == Q("1/(x(x+1))"));
    CHECK(Q("1/x") - Q("1/x") == RatFunc());
    CHECK(Q("x/(x+1)") / Q("x") == Q("1/(x+1)"));
    CHECK_THROWS_AS(Q("1/x") / RatFunc(), UsageError);
    CHECK_THROWS_AS(RatFunc().reciprocal(), UsageError);

    CHECK(ratfunc_to_string(Q("1/x")) == "(1)/(x)");
    CHECK(ratfunc_to_string(Q("x+1")) == "x+1");
}

TEST_CASE("derivation extension on known values") {
    CHECK(extend_derivation(Q("1/x")) == -Q("1/x^2"));
    CHECK(extend_derivation(Q("1/x")) == Q("0-1/x^2"));
    // Restriction to polynomials is the formal derivative.
    CHECK(extend_derivation(Q("x^3+2x")) == RatFunc::from_poly(P("3x^2+2")));
    CHECK(extend_derivation(Q("x/(x+1)")) == Q("1/((x+1)^2)"));
    CHECK(extend_derivation(RatFunc()).is_zero());
}

TEST_CASE("extension agrees with the quotient rule on seeded samples") {
    SampleSource rng(2026);
    for (int i = 0; i < 1000; ++i) {
        RatFunc q = rng.ratfunc(8, 100);
        CHECK(extend_derivation(q) == quotient_rule(q));
    }
}

TEST_CASE("extension is additive, Leibniz, and representation independent") {
    // Leibniz on the pinned pair (1/x, x): delta(1) = 0.
    RatFunc lhs = extend_derivation(Q("1/x") * Q("x"));
    CHECK(lhs.is_zero());
    CHECK(extend_derivation(Q("1/x")) * Q("x") + Q("1/x") * extend_derivation(Q("x")) ==
          lhs);
    // Unreduced representation gives the same value.
    CHECK(extension_formula(P("2x"), P("2x^2")) == extend_derivation(Q("1/x")));

    SampleSource rng(7);
    std::vector<std::pair<RatFunc, RatFunc>> pairs;
    for (int i = 0; i < 1000; ++i) pairs.emplace_back(rng.ratfunc(6, 50), rng.ratfunc(6, 50));
    DerivationSample sample = check_extension_is_derivation(pairs);
    CHECK(sample.cases == 1000);
    CHECK(sample.ok());
    CHECK(sample.additivity_failures == 0);
    CHECK(sample.leibniz_failures == 0);
    CHECK(sample.representation_failures == 0);
    CHECK(sample.first_failure.empty());
}

TEST_CASE("uniqueness probe matches the extension") {
    CHECK(uniqueness_probe(Q("1/x")) == -Q("1/x^2"));
    CHECK(uniqueness_probe(Q("x/(x+1)")) == Q("1/((x+1)^2)"));
    SampleSource rng(13);
    for (int i = 0; i < 1000; ++i) {
        RatFunc q = rng.ratfunc(6, 50);
        CHECK(uniqueness_probe(q) == extend_derivation(q));
    }
}

TEST_CASE("free module derivations and their extensions") {
    PolyMatrix zero;
    RatVector v1 = {Q("1/x")};
    CHECK(extend_module_derivation(v1, zero) == RatVector{-Q("1/x^2")});

    RatVector v2 = {Q("1/x"), Q("x")};
    CHECK(extend_module_derivation(v2, zero) ==
          RatVector{-Q("1/x^2"), RatFunc::from_poly(P("1"))});

    PolyMatrix a = {{Poly(), Poly::one()}, {Poly(), Poly()}};
    CHECK(extend_module_derivation(v2, a) ==
          RatVector{Q("(x^3-1)/(x^2)"), RatFunc::from_poly(P("1"))});
    CHECK(free_module_derive({P("x^2"), P("1")}, a) == PolyVector{P("2x+1"), Poly()});

    CHECK_THROWS_AS(extend_module_derivation(v2, PolyMatrix{{Poly::one()}}), RankMismatch);
    CHECK_THROWS_AS(free_module_derive({P("x")}, PolyMatrix{{Poly(), Poly()}}),
                    RankMismatch);
}

TEST_CASE("module extension commutes with localization") {
    SampleSource rng(99);
    for (int i = 0; i < 200; ++i) {
        int k = static_cast<int>(rng.next(1, 3));
        PolyVector v;
        for (int j = 0; j < k; ++j) v.push_back(rng.poly(5, 30));
        PolyMatrix a(k, std::vector<Poly>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) a[r][c] = rng.poly(2, 5);
        CHECK(extend_module_derivation(localize_vector(v), a) ==
              localize_vector(free_module_derive(v, a)));
    }
}

TEST_CASE("integer-to-rational localization demo") {
    ZqReport za = zq_demo({1, {4}, {}}, 42, 50);
    CHECK(za.group == "Z + Z/4");
    CHECK(za.torsion_order == "4");
    CHECK(za.localized_dimension == 1);
    CHECK(za.ok());

    ZqReport zb = zq_demo({0, {6}, {}}, 42, 50);
    CHECK(zb.group == "Z/6");
    CHECK(zb.torsion_order == "6");
    CHECK(zb.localized_dimension == 0);
    CHECK(zb.ok());

    ZqReport zc = zq_demo({2, {}, {{0, 1}, {0, 0}}}, 7, 100);
    CHECK(zc.group == "Z^2");
    CHECK(zc.torsion_order == "1");
    CHECK(zc.extension_commutes);
    CHECK(zc.ok());
    CHECK(zc.cases == 100);

    CHECK_THROWS_AS(zq_demo({-1, {}, {}}, 0, 1), MalformedGroup);
    CHECK_THROWS_AS(zq_demo({0, {1}, {}}, 0, 1), MalformedGroup);
    CHECK_THROWS_AS(zq_demo({0, {4, 2}, {}}, 0, 1), MalformedGroup);
    CHECK_THROWS_AS(zq_demo({2, {}, {{1}}}, 0, 1), MalformedGroup);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    SampleSource a(1234), b(1234);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.next(-100, 100) == b.next(-100, 100));
        CHECK(a.ratfunc(6, 50) == b.ratfunc(6, 50));
    }
}
