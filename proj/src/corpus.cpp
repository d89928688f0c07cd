#include "torsionkit/corpus.hpp"

#include "torsionkit/errors.hpp"
#include "torsionkit/ideal.hpp"

namespace torsionkit {

const std::vector<std::string>& builtin_ring_names() {
    static const std::vector<std::string> names = {"zmod2", "zmod3", "zmod4", "zmod6",
                                                   "zmod8", "f2xf2", "t2f2",  "m2f2"};
    return names;
}

RingPtr builtin_ring(const std::string& name, const Caps& caps) {
    if (name == "zmod2") return make_zmod(2, caps);
    if (name == "zmod3") return make_zmod(3, caps);
    if (name == "zmod4") return make_zmod(4, caps);
    if (name == "zmod6") return make_zmod(6, caps);
    if (name == "zmod8") return make_zmod(8, caps);
    if (name == "f2xf2") return make_product(make_zmod(2, caps), make_zmod(2, caps), caps);
    if (name == "t2f2") return make_triangular_ring(make_zmod(2, caps), 2, caps);
    if (name == "m2f2") return make_matrix_ring(make_zmod(2, caps), 2, caps);
    throw UsageError("unknown builtin ring '" + name + "'");
}

std::vector<ModulePtr> default_module_corpus(const RingPtr& ring, const Caps& caps) {
    std::vector<ModulePtr> corpus;
    ModulePtr reg = make_regular_module(ring, caps);
    corpus.push_back(reg);
    const std::vector<RightIdeal> ideals = enumerate_right_ideals(*ring);
    for (RightIdeal ideal : ideals) corpus.push_back(make_cyclic_module(ring, ideal, caps).module);
    // One representative direct sum; ideals[1] exists for every ring of
    // order at least two ({0} and R are always distinct).
    if (ideals.size() >= 2) {
        ModulePtr summand = make_cyclic_module(ring, ideals[1], caps).module;
        corpus.push_back(make_direct_sum(reg, summand, caps));
    }
    corpus.push_back(make_regular_bimodule(ring, caps));
    return corpus;
}

std::vector<ModuleDerivation> corpus_derivations(const ModulePtr& module, const Caps& caps) {
    std::vector<ModuleDerivation> out;
    for (const RingDerivation& delta : enumerate_ring_derivations(module->ring(), caps)) {
        std::vector<ModuleDerivation> derivs = enumerate_module_derivations(module, delta, caps);
        out.insert(out.end(), derivs.begin(), derivs.end());
    }
    return out;
}

}  // namespace torsionkit
