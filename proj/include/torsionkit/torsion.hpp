#pragma once

// Torsion submodules for a Gabriel filter, differential-filter checks, the
// essentiality star operators, the Goldie lemma verification suite, and the
// constructive witness behind the Lambek differentiability proof.

#include <string>
#include <vector>

#include "torsionkit/derivation.hpp"
#include "torsionkit/filter.hpp"
#include "torsionkit/module.hpp"

namespace torsionkit {

struct TorsionReport {
    ModulePtr module;
    ElementSet torsion;         // { x : ann(x) in F }
    bool torsion_submodule_valid = false;  // the set passed the submodule check
};

/// Computes { x : ann(x) in F } and verifies it is a submodule.
TorsionReport torsion_submodule(const ModulePtr& module, const GabrielFilter& filter);

/// M / TM. Asserts that the quotient's own torsion submodule is zero.
QuotientModule torsion_free_quotient(const ModulePtr& module, const GabrielFilter& filter,
                                     const Caps& caps = {});

/// Result of the differential-filter test: for every member I, the first
/// member J with delta(J) contained in I for every enumerated derivation.
struct DifferentialCheck {
    bool ok = true;
    RightIdeal failing = 0;  // member without a witness, when !ok
    struct Pair {
        RightIdeal ideal;
        RightIdeal witness;
    };
    std::vector<Pair> witnesses;
};

DifferentialCheck is_differential_filter(const GabrielFilter& filter,
                                         const std::vector<RingDerivation>& derivations);

/// d(TM) subset of TM for each supplied module derivation; first failure wins.
struct BlandCheck {
    bool ok = true;
    std::string module_name;
    int derivation_index = -1;
    int element = -1;  // x in TM with d(x) outside TM
    int image = -1;
};

BlandCheck check_bland_criterion(const GabrielFilter& filter,
                                 const std::vector<ModuleDerivation>& derivations);

/// ann(x), ann(x)* = { r : ann(xr) essential } and
/// ann(x)** = { r : { s : ann(xrs) essential } essential }.
struct StarData {
    int element = -1;
    RightIdeal ann = 0;
    RightIdeal ann_star = 0;
    RightIdeal ann_double_star = 0;
};

StarData star_data(const FiniteModule& module, int x);

/// Exhaustive verification of the four Goldie lemmas over a module, the
/// ring's derivations, and a list of module derivations:
///   chain:       ann(x) subset ann(x)* subset ann(x)**
///   equivalence: ann(x) in F_G <=> ann(x)* essential <=> ann(x)** essential
///   closure:     essentiality of ann/ann* passes to xr; ann* to x+y
///   transfer:    ann(x) essential => ann(d(x))* essential
///   transfer2:   ann(x)* essential => ann(d(x))** essential
struct GoldieLemmaReport {
    struct Item {
        std::string name;
        long long checked = 0;
        long long violations = 0;
        std::string witness;  // first counterexample, empty when clean
    };
    std::vector<Item> items;

    bool ok() const {
        for (const auto& item : items)
            if (item.violations != 0) return false;
        return true;
    }
};

GoldieLemmaReport verify_goldie_lemmas(const ModulePtr& module,
                                       const std::vector<ModuleDerivation>& derivations);

/// The two-step witness from the Lambek differentiability proof: t1 with
/// s t1 != 0 and x r t1 = 0, then t2 with s t1 t2 != 0 and
/// x delta(r t1) t2 = 0; t = t1 t2 then satisfies s t != 0 and d(x) r t = 0.
/// Throws NoWitness when the search fails (impossible when ann(x) is dense
/// and s != 0).
struct LambekWitness {
    int t1 = -1;
    int t2 = -1;
    int t = -1;
};

LambekWitness lambek_witness(const ModuleDerivation& d, int x, int r, int s);

}  // namespace torsionkit
