#pragma once

// The derivation d/dx on Q[x] extended to the fraction field Q(x) by the
// localization formula, delta-derivations on free modules and their
// extensions, and the integers-to-rationals localization demo.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "torsionkit/ratfunc.hpp"

namespace torsionkit {

/// The extension formula evaluated on an explicit (possibly unreduced)
/// representation a/b with the single-term data r1 = b, q1 = 1/b:
/// delta(a)(1/b) - (a/b) delta(b)(1/b). Zero b -> UsageError.
RatFunc extension_formula(const Poly& a, const Poly& b);

/// The derivation on Q(x) extending d/dx, via the canonical representation.
RatFunc extend_derivation(const RatFunc& q);

/// Re-derives delta(1/b) from the forced identity
/// 0 = delta(b)(1/b) + b delta(1/b), assembles delta(a/b) from it, and
/// cross-checks extend_derivation; disagreement raises an internal Error.
RatFunc uniqueness_probe(const RatFunc& q);

/// Sampled verification that the extension is an additive Leibniz map and
/// does not depend on the chosen representation of its argument.
struct DerivationSample {
    long long cases = 0;
    long long additivity_failures = 0;
    long long leibniz_failures = 0;
    long long representation_failures = 0;
    std::string first_failure;

    bool ok() const {
        return additivity_failures == 0 && leibniz_failures == 0 &&
               representation_failures == 0;
    }
};

DerivationSample check_extension_is_derivation(
    const std::vector<std::pair<RatFunc, RatFunc>>& pairs);

using PolyVector = std::vector<Poly>;
using RatVector = std::vector<RatFunc>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// d_M(v) = v' + A v on the free module Q[x]^k. An empty matrix means the
/// zero matrix; otherwise A must be square of the vector's rank
/// (RankMismatch).
PolyVector free_module_derive(const PolyVector& v, const PolyMatrix& a);

/// The extension d(v) = v' + A v on Q(x)^k, entrywise via the localization
/// formula with the standard basis as the tensor data.
RatVector extend_module_derivation(const RatVector& v, const PolyMatrix& a);

/// The canonical map Q[x]^k -> Q(x)^k.
RatVector localize_vector(const PolyVector& v);

/// Deterministic seeded sampling for the property suites.
class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : gen_(seed) {}

    long long next(long long lo, long long hi);  // inclusive, lo <= hi
    Rational rational(long long num_bound, long long den_bound);
    Poly poly(int max_degree, long long coeff_bound);
    Poly nonzero_poly(int max_degree, long long coeff_bound);
    RatFunc ratfunc(int max_degree, long long coeff_bound);

private:
    std::mt19937_64 gen_;
};

/// A finitely generated abelian group in invariant-factor form
/// Z^rank (+) Z/d_1 (+) ... (+) Z/d_k with 2 <= d_1 | d_2 | ... | d_k,
/// with an optional integer matrix giving an additive endomorphism of the
/// free part.
struct ZqSpec {
    int rank = 0;
    std::vector<long long> invariant_factors;
    std::vector<std::vector<long long>> matrix;  // rank x rank; empty = zero
};

struct ZqReport {
    std::string group;            // e.g. "Z + Z/4"
    std::string torsion_order;    // product of the invariant factors
    int localized_dimension = 0;  // rank of Q^r
    long long cases = 0;
    bool kernel_torsion = true;      // torsion dies, free part survives
    bool cokernel_torsion = true;    // every rational vector has an integer multiple in the image
    bool extension_commutes = true;  // matrix extension commutes with localization
    std::string first_failure;

    bool ok() const { return kernel_torsion && cokernel_torsion && extension_commutes; }
};

/// Classical localization Z -> Q applied to the group: the torsion part is
/// the kernel of the localization map, Q^rank is the module of quotients,
/// and the matrix extends to the unique Q-linear map. Sampled exact checks.
/// Invalid invariant factors or matrix shape -> MalformedGroup.
ZqReport zq_demo(const ZqSpec& spec, std::uint64_t seed, long long cases);

}  // namespace torsionkit
