#pragma once

// Gabriel filters over finite rings: axiom checking, the Lambek (dense),
// Goldie, and extension-induced filters, and exhaustive filter enumeration.

#include <string>
#include <vector>

#include "torsionkit/ideal.hpp"
#include "torsionkit/ring.hpp"

namespace torsionkit {

enum class Provenance { lambek, goldie, extension, custom };
const char* provenance_name(Provenance p);

/// The full right-ideal lattice of a ring with its density/essentiality
/// classification, in canonical (popcount, mask) order.
struct IdealLattice {
    RingPtr ring;
    std::vector<RightIdeal> ideals;
    std::vector<char> dense;
    std::vector<char> essential;

    int index_of(RightIdeal ideal) const;  // -1 when absent
};

IdealLattice build_lattice(const RingPtr& ring);

/// A family of right ideals intended to satisfy the Gabriel-filter axioms.
/// Members are stored completely, sorted by (popcount, mask), and upward
/// closure over the ideal lattice is applied on construction.
struct GabrielFilter {
    RingPtr ring;
    Provenance provenance = Provenance::custom;
    std::vector<RightIdeal> members;

    bool contains(RightIdeal ideal) const;
};

GabrielFilter make_filter(const RingPtr& ring, std::vector<RightIdeal> members,
                          Provenance provenance = Provenance::custom);

/// Outcome of the axiom check; `ok` plus the first violation in the fixed
/// scan order (contains-R, upward closure, axiom 1, axiom 2).
struct FilterViolation {
    bool ok = true;
    std::string axiom;     // containsR | upwardClosed | axiom1 | axiom2
    RightIdeal ideal = 0;  // the member I involved
    int r = -1;            // element witness for axiom 1
    RightIdeal other = 0;  // J for upwardClosed / axiom2
};

/// Verifies: R in F; I in F and I subset J imply J in F; I in F implies
/// (I : r) in F for all r; and (axiom 2) if (J : r) in F for every r in some
/// member I, then J in F.
FilterViolation check_gabriel_axioms(const GabrielFilter& filter);

/// All dense right ideals (the Lambek filter).
GabrielFilter lambek_filter(const RingPtr& ring);

/// F_G = { I : { r : (I : r) essential } essential } (the Goldie filter).
GabrielFilter goldie_filter(const RingPtr& ring);

/// { I : I S = S } for the idempotent localization S = eR; e must be a
/// central idempotent.
GabrielFilter extension_filter(const RingPtr& ring, int e);

/// All upward-closed families of right ideals that pass the axioms, in
/// canonical order (member count, then member sequence). Requires the
/// lattice to have at most caps.lattice_size ideals.
std::vector<GabrielFilter> enumerate_gabriel_filters(const RingPtr& ring, const Caps& caps = {});

/// Members with no proper subset in the filter.
std::vector<RightIdeal> minimal_members(const GabrielFilter& filter);

}  // namespace torsionkit
