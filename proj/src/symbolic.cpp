#include "torsionkit/symbolic.hpp"

namespace torsionkit {

RatFunc extension_formula(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw UsageError("extension formula: zero denominator");
    // n = 1, r1 = b, q1 = 1/b: q r1 = a lies in the base ring and r1 q1 = 1.
    RatFunc q(a, b);
    RatFunc inv_b(Poly::one(), b);
    RatFunc da = RatFunc::from_poly(poly_derive(a));
    RatFunc db = RatFunc::from_poly(poly_derive(b));
    return da * inv_b - q * db * inv_b;
}

RatFunc extend_derivation(const RatFunc& q) { return extension_formula(q.num(), q.den()); }

RatFunc uniqueness_probe(const RatFunc& q) {
    RatFunc inv_b(Poly::one(), q.den());
    RatFunc db = RatFunc::from_poly(poly_derive(q.den()));
    // 0 = delta(b (1/b)) = delta(b)(1/b) + b delta(1/b) forces delta(1/b).
    RatFunc d_inv_b = -(inv_b * db * inv_b);
    RatFunc probe = RatFunc::from_poly(poly_derive(q.num())) * inv_b +
                    RatFunc::from_poly(q.num()) * d_inv_b;
    if (!(probe == extend_derivation(q)))
        throw Error("internal: uniqueness probe disagrees with the extension at " +
                    ratfunc_to_string(q));
    return probe;
}

DerivationSample check_extension_is_derivation(
    const std::vector<std::pair<RatFunc, RatFunc>>& pairs) {
    DerivationSample sample;
    auto note = [&](long long& counter, const RatFunc& p, const RatFunc& q) {
        if (counter++ == 0 && sample.first_failure.empty())
            sample.first_failure =
                "(" + ratfunc_to_string(p) + ", " + ratfunc_to_string(q) + ")";
    };
    const Poly cx = Poly::variable();
    const Poly cx1 = Poly::variable() + Poly::one();
    for (const auto& [p, q] : pairs) {
        ++sample.cases;
        if (!(extend_derivation(p + q) == extend_derivation(p) + extend_derivation(q)))
            note(sample.additivity_failures, p, q);
        if (!(extend_derivation(p * q) ==
              extend_derivation(p) * q + p * extend_derivation(q)))
            note(sample.leibniz_failures, p, q);
        if (!(extension_formula(p.num() * cx1, p.den() * cx1) == extend_derivation(p)) ||
            !(extension_formula(q.num() * cx, q.den() * cx) == extend_derivation(q)))
            note(sample.representation_failures, p, q);
    }
    return sample;
}

namespace {

void check_matrix_shape(std::size_t rank, const PolyMatrix& a) {
    if (a.empty()) return;
    if (a.size() != rank)
        throw RankMismatch("matrix has " + std::to_string(a.size()) + " rows for rank " +
                           std::to_string(rank));
    for (const auto& row : a)
        if (row.size() != rank)
            throw RankMismatch("matrix row has " + std::to_string(row.size()) +
                               " entries for rank " + std::to_string(rank));
}

}  // namespace

PolyVector free_module_derive(const PolyVector& v, const PolyMatrix& a) {
    check_matrix_shape(v.size(), a);
    PolyVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = poly_derive(v[i]);
        if (!a.empty())
            for (std::size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
    }
    return out;
}

RatVector extend_module_derivation(const RatVector& v, const PolyMatrix& a) {
    check_matrix_shape(v.size(), a);
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = extend_derivation(v[i]);
        if (!a.empty())
            for (std::size_t j = 0; j < v.size(); ++j)
                out[i] = out[i] + RatFunc::from_poly(a[i][j]) * v[j];
    }
    return out;
}

RatVector localize_vector(const PolyVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const Poly& p : v) out.push_back(RatFunc::from_poly(p));
    return out;
}

long long SampleSource::next(long long lo, long long hi) {
    if (lo > hi) throw Error("internal: empty sampling range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(gen_() % span);
}

Rational SampleSource::rational(long long num_bound, long long den_bound) {
    Rational q(static_cast<long>(next(-num_bound, num_bound)),
               static_cast<long>(next(1, den_bound)));
    q.canonicalize();
    return q;
}

Poly SampleSource::poly(int max_degree, long long coeff_bound) {
    int degree = static_cast<int>(next(0, max_degree));
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k)
        c.emplace_back(static_cast<long>(next(-coeff_bound, coeff_bound)));
    return Poly(std::move(c));
}

Poly SampleSource::nonzero_poly(int max_degree, long long coeff_bound) {
    while (true) {
        Poly p = poly(max_degree, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

RatFunc SampleSource::ratfunc(int max_degree, long long coeff_bound) {
    return RatFunc(poly(max_degree, coeff_bound), nonzero_poly(max_degree, coeff_bound));
}

namespace {

std::string group_label(const ZqSpec& spec) {
    std::string out;
    if (spec.rank == 1) out = "Z";
    if (spec.rank > 1) out = "Z^" + std::to_string(spec.rank);
    for (long long d : spec.invariant_factors) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ZqReport zq_demo(const ZqSpec& spec, std::uint64_t seed, long long cases) {
    if (spec.rank < 0) throw MalformedGroup("negative rank");
    for (std::size_t i = 0; i < spec.invariant_factors.size(); ++i) {
        long long d = spec.invariant_factors[i];
        if (d < 2)
            throw MalformedGroup("invariant factor " + std::to_string(d) +
                                 " is less than 2");
        if (i > 0 && spec.invariant_factors[i] % spec.invariant_factors[i - 1] != 0)
            throw MalformedGroup("invariant factor " + std::to_string(d) +
                                 " is not a multiple of " +
                                 std::to_string(spec.invariant_factors[i - 1]));
    }
    if (!spec.matrix.empty()) {
        if (spec.matrix.size() != static_cast<std::size_t>(spec.rank))
            throw MalformedGroup("matrix has " + std::to_string(spec.matrix.size()) +
                                 " rows for rank " + std::to_string(spec.rank));
        for (const auto& row : spec.matrix)
            if (row.size() != static_cast<std::size_t>(spec.rank))
                throw MalformedGroup("matrix row has " + std::to_string(row.size()) +
                                     " entries for rank " + std::to_string(spec.rank));
    }

    ZqReport report;
    report.group = group_label(spec);
    mpz_class torsion_order = 1;
    for (long long d : spec.invariant_factors) torsion_order *= mpz_class(std::to_string(d));
    report.torsion_order = torsion_order.get_str();
    report.localized_dimension = spec.rank;

    const int r = spec.rank;
    const auto& facts = spec.invariant_factors;
    // The exponent of the torsion part: the last invariant factor kills all
    // of them, and it is a regular (nonzero) integer.
    const long long exponent = facts.empty() ? 1 : facts.back();

    SampleSource rng(seed);
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.first_failure.empty()) report.first_failure = what;
    };

    for (long long c = 0; c < cases; ++c) {
        ++report.cases;

        // Kernel: a pure torsion element is killed by the regular integer
        // `exponent`, and an element localizes to zero exactly when its free
        // part vanishes.
        std::vector<long long> torsion_coords;
        for (long long d : facts) torsion_coords.push_back(rng.next(0, d - 1));
        bool killed = true;
        for (std::size_t i = 0; i < facts.size(); ++i)
            killed = killed && (exponent * torsion_coords[i]) % facts[i] == 0;
        if (!killed) fail(report.kernel_torsion, "torsion element not killed by the exponent");
        if (r > 0) {
            std::vector<long long> free_coords(r);
            for (int i = 0; i < r; ++i) free_coords[i] = rng.next(-20, 20);
            bool free_zero = true, image_zero = true;
            for (int i = 0; i < r; ++i) {
                free_zero = free_zero && free_coords[i] == 0;
                image_zero = image_zero && Rational(static_cast<long>(free_coords[i])) == 0;
            }
            if (image_zero != free_zero)
                fail(report.kernel_torsion, "free part did not survive localization");
        }

        // Cokernel: a random rational vector times the lcm of denominators
        // lands in the image of the integers.
        if (r > 0) {
            std::vector<Rational> q(r);
            for (int i = 0; i < r; ++i) q[i] = rng.rational(50, 20);
            mpz_class n = 1;
            for (int i = 0; i < r; ++i) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(),
                                                q[i].get_den().get_mpz_t());
            if (n == 0) fail(report.cokernel_torsion, "vanishing common denominator");
            for (int i = 0; i < r; ++i) {
                Rational scaled = Rational(n) * q[i];
                scaled.canonicalize();
                if (scaled.get_den() != 1)
                    fail(report.cokernel_torsion,
                         "integer multiple still fractional at entry " + std::to_string(i));
            }
        }

        // Extension: the integer matrix applied before or after localization
        // gives the same rational vector.
        if (r > 0) {
            std::vector<long long> v(r);
            for (int i = 0; i < r; ++i) v[i] = rng.next(-50, 50);
            for (int i = 0; i < r; ++i) {
                long long over_z = 0;
                Rational over_q(0);
                for (int j = 0; j < r; ++j) {
                    long long entry = spec.matrix.empty() ? 0 : spec.matrix[i][j];
                    over_z += entry * v[j];
                    over_q += Rational(static_cast<long>(entry)) *
                              Rational(static_cast<long>(v[j]));
                }
                if (Rational(static_cast<long>(over_z)) != over_q)
                    fail(report.extension_commutes,
                         "matrix action does not commute with localization at row " +
                             std::to_string(i));
            }
        }
    }
    return report;
}

}  // namespace torsionkit
