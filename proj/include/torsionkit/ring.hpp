#pragma once

// Finite unital rings given by explicit addition/multiplication tables.
//
// Elements are indices 0..order-1. All rings are validated on construction:
// the addition table must describe an abelian group, multiplication must be
// associative with a two-sided unit, and both distributive laws must hold.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torsionkit/caps.hpp"
#include "torsionkit/errors.hpp"

namespace torsionkit {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Raw tables handed to the validator. Both tables are row-major order*order.
struct RingTables {
    std::string name;
    int order = 0;
    std::vector<int> add;
    std::vector<int> mul;
};

class FiniteRing {
public:
    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int zero() const { return zero_; }
    int one() const { return one_; }

    bool is_commutative() const { return commutative_; }

    /// Bitmask of the cyclic right ideal aR.
    std::uint64_t cyclic_mask(int a) const { return cyclic_[a]; }

    /// Bitmask of all elements (the improper right ideal R).
    std::uint64_t full_mask() const {
        return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    }

    friend RingPtr validate_ring(const RingTables& tables, const Caps& caps);

private:
    FiniteRing() = default;

    int order_ = 0;
    int zero_ = -1;
    int one_ = -1;
    bool commutative_ = false;
    std::string name_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint64_t> cyclic_;
};

/// Checks every ring axiom over the given tables. Returns the validated ring;
/// throws RingValidationError carrying the first violation found (fixed scan
/// order, so the reported witness is deterministic).
RingPtr validate_ring(const RingTables& tables, const Caps& caps = {});

// Constructors for the test corpus. Element indexing is canonical:
//   zmod:       element k is the residue k
//   product:    (a, b) -> a*|S| + b
//   matrix:     row-major entry tuple read as base-|R| digits, first entry
//               most significant
//   triangular: same digit scheme over the upper-triangle entries
RingPtr make_zmod(int n, const Caps& caps = {});
RingPtr make_product(const RingPtr& left, const RingPtr& right, const Caps& caps = {});
RingPtr make_matrix_ring(const RingPtr& base, int k, const Caps& caps = {});
RingPtr make_triangular_ring(const RingPtr& base, int k, const Caps& caps = {});

/// Elements t with rt = 0 => r = 0 and tr = 0 => r = 0, as a bitmask.
std::uint64_t regular_elements(const FiniteRing& ring);

/// Two-sided invertible elements, as a bitmask.
std::uint64_t units(const FiniteRing& ring);

struct OreCheck {
    bool ok = true;
    int r = -1;  // offending pair when !ok
    int t = -1;
};

/// Right Ore condition over the regular elements T: for every r in R, t in T
/// there exist t' in T, r' in R with r t' = t r'.
OreCheck is_right_ore(const FiniteRing& ring);

}  // namespace torsionkit
