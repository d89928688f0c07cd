#include "torsionkit/torsion.hpp"

namespace torsionkit {

TorsionReport torsion_submodule(const ModulePtr& module, const GabrielFilter& filter) {
    if (module->ring() != filter.ring)
        throw IllFormed("torsion submodule: module and filter disagree on the ring");
    TorsionReport report;
    report.module = module;
    report.torsion.assign(module->order(), 0);
    for (int x = 0; x < module->order(); ++x)
        if (filter.contains(annihilator(*module, x))) report.torsion[x] = 1;
    report.torsion_submodule_valid = is_submodule(*module, report.torsion);
    return report;
}

QuotientModule torsion_free_quotient(const ModulePtr& module, const GabrielFilter& filter,
                                     const Caps& caps) {
    TorsionReport report = torsion_submodule(module, filter);
    if (!report.torsion_submodule_valid)
        throw Error("torsion-free quotient: torsion set of '" + module->name() +
                    "' is not a submodule (filter is not a Gabriel filter?)");
    QuotientModule quotient = quotient_by_submodule(module, report.torsion, caps);
    TorsionReport residual = torsion_submodule(quotient.module, filter);
    if (set_size(residual.torsion) != 1)
        throw Error("torsion-free quotient: quotient of '" + module->name() +
                    "' still has torsion (filter is not a Gabriel filter?)");
    return quotient;
}

DifferentialCheck is_differential_filter(const GabrielFilter& filter,
                                         const std::vector<RingDerivation>& derivations) {
    DifferentialCheck check;
    for (RightIdeal ideal : filter.members) {
        RightIdeal found = 0;
        bool have = false;
        for (RightIdeal j : filter.members) {
            bool maps_in = true;
            for (const RingDerivation& delta : derivations) {
                for (int a : ideal_elements(j))
                    maps_in = maps_in && ideal_contains(ideal, delta(a));
                if (!maps_in) break;
            }
            if (maps_in) {
                found = j;
                have = true;
                break;
            }
        }
        if (!have) {
            check.ok = false;
            check.failing = ideal;
            return check;
        }
        check.witnesses.push_back({ideal, found});
    }
    return check;
}

BlandCheck check_bland_criterion(const GabrielFilter& filter,
                                 const std::vector<ModuleDerivation>& derivations) {
    BlandCheck check;
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        const ModuleDerivation& d = derivations[i];
        TorsionReport report = torsion_submodule(d.module, filter);
        for (int x = 0; x < d.module->order(); ++x) {
            if (!report.torsion[x]) continue;
            if (!report.torsion[d(x)]) {
                check.ok = false;
                check.module_name = d.module->name();
                check.derivation_index = static_cast<int>(i);
                check.element = x;
                check.image = d(x);
                return check;
            }
        }
    }
    return check;
}

StarData star_data(const FiniteModule& module, int x) {
    const FiniteRing& ring = *module.ring();
    const int n = ring.order();
    StarData data;
    data.element = x;
    data.ann = annihilator(module, x);
    for (int r = 0; r < n; ++r) {
        if (is_essential(ring, annihilator(module, module.act(x, r))))
            data.ann_star |= std::uint64_t{1} << r;
        std::uint64_t inner = 0;
        for (int s = 0; s < n; ++s) {
            int xrs = module.act(module.act(x, r), s);
            if (is_essential(ring, annihilator(module, xrs))) inner |= std::uint64_t{1} << s;
        }
        if (is_essential(ring, inner)) data.ann_double_star |= std::uint64_t{1} << r;
    }
    return data;
}

GoldieLemmaReport verify_goldie_lemmas(const ModulePtr& module,
                                       const std::vector<ModuleDerivation>& derivations) {
    const FiniteRing& ring = *module->ring();
    const int m = module->order();
    GabrielFilter goldie = goldie_filter(module->ring());

    // Per-element data, computed once.
    std::vector<StarData> stars(m);
    std::vector<char> ann_ess(m), star_ess(m), dstar_ess(m), in_goldie(m);
    for (int x = 0; x < m; ++x) {
        stars[x] = star_data(*module, x);
        ann_ess[x] = is_essential(ring, stars[x].ann) ? 1 : 0;
        star_ess[x] = is_essential(ring, stars[x].ann_star) ? 1 : 0;
        dstar_ess[x] = is_essential(ring, stars[x].ann_double_star) ? 1 : 0;
        in_goldie[x] = goldie.contains(stars[x].ann) ? 1 : 0;
    }

    GoldieLemmaReport report;
    report.items = {{"starChain", 0, 0, ""},
                    {"goldieEquivalence", 0, 0, ""},
                    {"essClosure", 0, 0, ""},
                    {"essTransfer", 0, 0, ""},
                    {"starTransfer", 0, 0, ""}};
    auto& chain = report.items[0];
    for (int x = 0; x < m; ++x) {
        ++chain.checked;
        bool ok = (stars[x].ann & stars[x].ann_star) == stars[x].ann &&
                  (stars[x].ann_star & stars[x].ann_double_star) == stars[x].ann_star;
        if (!ok && chain.violations++ == 0) chain.witness = "x=" + std::to_string(x);
    }

    auto& equiv = report.items[1];
    for (int x = 0; x < m; ++x) {
        ++equiv.checked;
        bool ok = in_goldie[x] == star_ess[x] && star_ess[x] == dstar_ess[x];
        if (!ok && equiv.violations++ == 0) equiv.witness = "x=" + std::to_string(x);
    }

    auto& closure = report.items[2];
    for (int x = 0; x < m; ++x)
        for (int r = 0; r < ring.order(); ++r) {
            ++closure.checked;
            int xr = module->act(x, r);
            bool ok = (!ann_ess[x] || ann_ess[xr]) && (!star_ess[x] || star_ess[xr]);
            if (!ok && closure.violations++ == 0)
                closure.witness = "x=" + std::to_string(x) + ",r=" + std::to_string(r);
        }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            ++closure.checked;
            bool ok = !(star_ess[x] && star_ess[y]) || star_ess[module->add(x, y)];
            if (!ok && closure.violations++ == 0)
                closure.witness = "x=" + std::to_string(x) + ",y=" + std::to_string(y);
        }

    auto& transfer = report.items[3];
    auto& transfer2 = report.items[4];
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        const ModuleDerivation& d = derivations[i];
        if (d.module != module)
            throw IllFormed("goldie lemmas: derivation " + std::to_string(i) +
                            " lives on a different module");
        for (int x = 0; x < m; ++x) {
            ++transfer.checked;
            if (ann_ess[x] && !star_ess[d(x)] && transfer.violations++ == 0)
                transfer.witness = "d#" + std::to_string(i) + ",x=" + std::to_string(x);
            ++transfer2.checked;
            if (star_ess[x] && !dstar_ess[d(x)] && transfer2.violations++ == 0)
                transfer2.witness = "d#" + std::to_string(i) + ",x=" + std::to_string(x);
        }
    }
    return report;
}

LambekWitness lambek_witness(const ModuleDerivation& d, int x, int r, int s) {
    const FiniteModule& module = *d.module;
    const FiniteRing& ring = *module.ring();
    const int n = ring.order();

    LambekWitness w;
    for (int t1 = 0; t1 < n && w.t1 < 0; ++t1)
        if (ring.mul(s, t1) != ring.zero() &&
            module.act(x, ring.mul(r, t1)) == module.zero())
            w.t1 = t1;
    if (w.t1 < 0)
        throw NoWitness("lambek witness: no t1 with s t1 != 0 and x r t1 = 0 (is ann(x) dense?)");

    int st1 = ring.mul(s, w.t1);
    int drt1 = d.delta(ring.mul(r, w.t1));
    for (int t2 = 0; t2 < n && w.t2 < 0; ++t2)
        if (ring.mul(st1, t2) != ring.zero() &&
            module.act(x, ring.mul(drt1, t2)) == module.zero())
            w.t2 = t2;
    if (w.t2 < 0)
        throw NoWitness("lambek witness: no t2 with s t1 t2 != 0 and x delta(r t1) t2 = 0");

    w.t = ring.mul(w.t1, w.t2);
    if (ring.mul(s, w.t) == ring.zero() ||
        module.act(d(x), ring.mul(r, w.t)) != module.zero())
        throw Error("internal: lambek witness failed its defining identities");
    return w;
}

}  // namespace torsionkit
