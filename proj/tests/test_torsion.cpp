#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionkit/torsion.hpp"

using namespace torsionkit;

namespace {

// All module derivations of `module`, over every ring derivation as delta.
std::vector<ModuleDerivation> all_derivations(const ModulePtr& module) {
    std::vector<ModuleDerivation> out;
    for (const RingDerivation& delta : enumerate_ring_derivations(module->ring()))
        for (const ModuleDerivation& d : enumerate_module_derivations(module, delta))
            out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("torsion submodule for the idempotent-extension filter on zmod6") {
    auto z6 = make_zmod(6);
    auto reg = make_regular_module(z6);
    GabrielFilter f = extension_filter(z6, 4);

    TorsionReport report = torsion_submodule(reg, f);
    CHECK(report.torsion == ElementSet{1, 0, 0, 1, 0, 0});
    CHECK(report.torsion_submodule_valid);

    QuotientModule q = torsion_free_quotient(reg, f);
    CHECK(q.module->order() == 3);
    CHECK(set_size(torsion_submodule(q.module, f).torsion) == 1);
}

TEST_CASE("torsion submodule under the dense and goldie filters on zmod4") {
    auto z4 = make_zmod(4);
    auto reg = make_regular_module(z4);

    TorsionReport dense = torsion_submodule(reg, lambek_filter(z4));
    CHECK(dense.torsion == ElementSet{1, 0, 0, 0});
    CHECK(dense.torsion_submodule_valid);
    CHECK(torsion_free_quotient(reg, lambek_filter(z4)).module->order() == 4);

    TorsionReport goldie = torsion_submodule(reg, goldie_filter(z4));
    CHECK(goldie.torsion == ElementSet{1, 1, 1, 1});
    CHECK(torsion_free_quotient(reg, goldie_filter(z4)).module->order() == 1);
}

TEST_CASE("torsion set of a non-gabriel family need not be a submodule") {
    auto f2f2 = make_product(make_zmod(2), make_zmod(2));
    auto reg = make_regular_module(f2f2);
    // {0 x F2, F2 x 0, R}: upward closed but fails axiom 2.
    GabrielFilter bad{f2f2, Provenance::custom, {0x3, 0x5, 0xf}};
    REQUIRE(!check_gabriel_axioms(bad).ok);

    TorsionReport report = torsion_submodule(reg, bad);
    CHECK(report.torsion == ElementSet{1, 1, 1, 0});
    CHECK(!report.torsion_submodule_valid);
    CHECK_THROWS_AS(torsion_free_quotient(reg, bad), Error);
}

TEST_CASE("torsion submodule rejects mismatched rings") {
    auto reg = make_regular_module(make_zmod(4));
    CHECK_THROWS_AS(torsion_submodule(reg, goldie_filter(make_zmod(6))), IllFormed);
}

TEST_CASE("torsion set agrees with the subset oracle") {
    std::vector<RingPtr> rings = {make_zmod(4), make_zmod(6), make_zmod(8),
                                  make_product(make_zmod(2), make_zmod(3)),
                                  make_triangular_ring(make_zmod(2), 2)};
    for (auto& ring : rings) {
        auto reg = make_regular_module(ring);
        for (const GabrielFilter& f : enumerate_gabriel_filters(ring)) {
            TorsionReport report = torsion_submodule(reg, f);
            for (int x = 0; x < reg->order(); ++x) {
                oracle::Subset ann;
                for (int r = 0; r < ring->order(); ++r)
                    if (reg->act(x, r) == reg->zero()) ann.insert(r);
                bool member = false;
                for (RightIdeal m : f.members)
                    member = member || oracle::mask_to_subset(m) == ann;
                CHECK(report.torsion[x] == (member ? 1 : 0));
            }
            CHECK(report.torsion_submodule_valid);
        }
    }
}

TEST_CASE("differential-filter check") {
    auto z4 = make_zmod(4);
    auto z4_derivs = enumerate_ring_derivations(z4);
    REQUIRE(z4_derivs.size() == 1);  // only the zero map on zmod n
    DifferentialCheck check = is_differential_filter(goldie_filter(z4), z4_derivs);
    CHECK(check.ok);
    REQUIRE(check.witnesses.size() == 3);
    for (const auto& w : check.witnesses) CHECK(w.witness == 0x1);

    auto t2 = make_triangular_ring(make_zmod(2), 2);
    auto t2_derivs = enumerate_ring_derivations(t2);
    REQUIRE(t2_derivs.size() == 4);

    DifferentialCheck dense = is_differential_filter(lambek_filter(t2), t2_derivs);
    CHECK(dense.ok);
    REQUIRE(dense.witnesses.size() == 2);
    CHECK(dense.witnesses[0].ideal == 0xf);
    CHECK(dense.witnesses[0].witness == 0xf);
    CHECK(dense.witnesses[1].ideal == 0xff);
    CHECK(dense.witnesses[1].witness == 0xf);

    // {0,e22} admits no member J with d(J) inside it: every nonzero
    // derivation of the triangular ring lands in the strictly-upper part.
    DifferentialCheck bad = is_differential_filter(make_filter(t2, {0x3}), t2_derivs);
    CHECK(!bad.ok);
    CHECK(bad.failing == 0x3);

    // With no derivations at all, the first member witnesses vacuously.
    DifferentialCheck vac = is_differential_filter(lambek_filter(z4), {});
    CHECK(vac.ok);
    REQUIRE(vac.witnesses.size() == 1);
    CHECK(vac.witnesses[0].witness == 0xf);
}

TEST_CASE("torsion stability of module derivations") {
    auto t2 = make_triangular_ring(make_zmod(2), 2);

    // A filter that is not differential, with a derivation moving a torsion
    // element out of the torsion submodule.
    auto bireg = make_regular_bimodule(t2);
    ModuleDerivation inner = inner_bimodule_derivation(bireg, 2);
    BlandCheck bad = check_bland_criterion(make_filter(t2, {0x3}), {inner});
    CHECK(!bad.ok);
    CHECK(bad.module_name == "bireg(triangular(zmod2,2))");
    CHECK(bad.derivation_index == 0);
    CHECK(bad.element == 4);
    CHECK(bad.image == 2);

    // The dense filter is differential, so every derivation of every module
    // preserves the torsion submodule.
    auto cyc = make_cyclic_module(t2, 0xf).module;
    auto derivs = all_derivations(cyc);
    CHECK(derivs.size() == 8);
    BlandCheck good = check_bland_criterion(lambek_filter(t2), derivs);
    CHECK(good.ok);
    BlandCheck regular = check_bland_criterion(
        lambek_filter(t2), {inner, zero_module_derivation(bireg, zero_derivation(t2))});
    CHECK(regular.ok);
}

TEST_CASE("star operators on the regular zmod4 and zmod6 modules") {
    auto z4reg = make_regular_module(make_zmod(4));
    StarData s1 = star_data(*z4reg, 1);
    CHECK(s1.ann == 0x1);
    CHECK(s1.ann_star == 0x5);
    CHECK(s1.ann_double_star == 0xf);
    StarData s2 = star_data(*z4reg, 2);
    CHECK(s2.ann == 0x5);
    CHECK(s2.ann_star == 0xf);
    CHECK(s2.ann_double_star == 0xf);
    StarData s0 = star_data(*z4reg, 0);
    CHECK(s0.ann == 0xf);
    CHECK(s0.ann_star == 0xf);

    auto z6reg = make_regular_module(make_zmod(6));
    StarData t1 = star_data(*z6reg, 1);
    CHECK(t1.ann == 0x1);
    CHECK(t1.ann_star == 0x1);
    CHECK(t1.ann_double_star == 0x1);
}

TEST_CASE("star operators agree with the subset oracle") {
    std::vector<ModulePtr> modules = {make_regular_module(make_zmod(4)),
                                      make_regular_module(make_zmod(6)),
                                      make_cyclic_module(make_triangular_ring(make_zmod(2), 2), 0xf).module};
    for (auto& mod : modules) {
        const FiniteRing& ring = *mod->ring();
        auto all = oracle::all_right_ideals(ring);
        auto ess = [&](const oracle::Subset& s) {
            return oracle::subset_is_essential(ring, s, all);
        };
        auto ann_of = [&](int x) {
            oracle::Subset ann;
            for (int r = 0; r < ring.order(); ++r)
                if (mod->act(x, r) == mod->zero()) ann.insert(r);
            return ann;
        };
        for (int x = 0; x < mod->order(); ++x) {
            StarData data = star_data(*mod, x);
            CHECK(oracle::mask_to_subset(data.ann) == ann_of(x));
            oracle::Subset star, dstar;
            for (int r = 0; r < ring.order(); ++r) {
                if (ess(ann_of(mod->act(x, r)))) star.insert(r);
                oracle::Subset inner;
                for (int s = 0; s < ring.order(); ++s)
                    if (ess(ann_of(mod->act(mod->act(x, r), s)))) inner.insert(s);
                if (ess(inner)) dstar.insert(r);
            }
            CHECK(oracle::mask_to_subset(data.ann_star) == star);
            CHECK(oracle::mask_to_subset(data.ann_double_star) == dstar);
        }
    }
}

TEST_CASE("goldie lemma sweep is clean across the corpus") {
    std::vector<ModulePtr> modules = {
        make_regular_module(make_zmod(4)),
        make_regular_module(make_zmod(6)),
        make_regular_module(make_zmod(8)),
        make_regular_module(make_triangular_ring(make_zmod(2), 2)),
        make_cyclic_module(make_triangular_ring(make_zmod(2), 2), 0xf).module,
        make_regular_module(make_product(make_zmod(2), make_zmod(2))),
    };
    for (auto& mod : modules) {
        auto derivs = all_derivations(mod);
        GoldieLemmaReport report = verify_goldie_lemmas(mod, derivs);
        CHECK(report.ok());
        REQUIRE(report.items.size() == 5);
        CHECK(report.items[0].name == "starChain");
        CHECK(report.items[1].name == "goldieEquivalence");
        CHECK(report.items[2].name == "essClosure");
        CHECK(report.items[3].name == "essTransfer");
        CHECK(report.items[4].name == "starTransfer");
        const int m = mod->order();
        CHECK(report.items[0].checked == m);
        CHECK(report.items[1].checked == m);
        CHECK(report.items[2].checked == m * mod->ring()->order() + m * m);
        CHECK(report.items[3].checked == static_cast<long long>(derivs.size()) * m);
        for (const auto& item : report.items) {
            CHECK(item.violations == 0);
            CHECK(item.witness.empty());
        }
    }
}

TEST_CASE("goldie lemma sweep flags a fake derivation") {
    auto z6reg = make_regular_module(make_zmod(6));
    ModuleDerivation fake{z6reg, zero_derivation(make_zmod(6)),
                          std::vector<int>(6, 1)};
    GoldieLemmaReport report = verify_goldie_lemmas(z6reg, {fake});
    CHECK(!report.ok());
    CHECK(report.items[3].name == "essTransfer");
    CHECK(report.items[3].violations > 0);
    CHECK(report.items[3].witness == "d#0,x=0");
    CHECK(report.items[4].violations > 0);
    CHECK(report.items[4].witness == "d#0,x=0");

    auto z4reg = make_regular_module(make_zmod(4));
    ModuleDerivation alien{z4reg, zero_derivation(make_zmod(4)),
                           std::vector<int>(4, 0)};
    CHECK_THROWS_AS(verify_goldie_lemmas(z6reg, {alien}), IllFormed);
}

TEST_CASE("witness construction for derivations of dense-torsion elements") {
    auto t2 = make_triangular_ring(make_zmod(2), 2);
    auto mod = make_cyclic_module(t2, 0xf).module;
    const FiniteRing& ring = *mod->ring();

    // Element 1 is the class of e11; its annihilator is the dense ideal.
    REQUIRE(annihilator(*mod, 1) == 0xf);
    REQUIRE(lambek_filter(t2).contains(0xf));

    for (const ModuleDerivation& d : all_derivations(mod))
        for (int x = 0; x < mod->order(); ++x) {
            if (!lambek_filter(t2).contains(annihilator(*mod, x))) continue;
            for (int r = 0; r < ring.order(); ++r)
                for (int s = 0; s < ring.order(); ++s) {
                    if (s == ring.zero()) continue;
                    LambekWitness w = lambek_witness(d, x, r, s);
                    CHECK(w.t == ring.mul(w.t1, w.t2));
                    CHECK(ring.mul(s, w.t) != ring.zero());
                    CHECK(mod->act(d(x), ring.mul(r, w.t)) == mod->zero());
                }
        }
}

TEST_CASE("witness search: base cases and failures") {
    auto z4 = make_zmod(4);
    auto reg = make_regular_module(z4);
    ModuleDerivation d = zero_module_derivation(reg, zero_derivation(z4));

    LambekWitness w = lambek_witness(d, 0, 3, 2);
    CHECK(w.t1 == 1);
    CHECK(w.t2 == 1);
    CHECK(w.t == 1);

    // ann(1) = 0 is not dense: no witness for r = 1, s = 2.
    CHECK_THROWS_AS(lambek_witness(d, 1, 1, 2), NoWitness);
    // s = 0 never admits t with s t != 0.
    CHECK_THROWS_AS(lambek_witness(d, 0, 1, 0), NoWitness);
}
