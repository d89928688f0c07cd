#include "torsionkit/derivation.hpp"

#include <algorithm>
#include <functional>

namespace torsionkit {

namespace {

// Enumerates all additive maps from a finite abelian domain into a finite
// abelian codomain subject to extra forcing rules.
//
// The search assigns a value to the smallest unassigned element, then
// propagates consequences to a fixpoint: additivity forces the value of y+z
// for every assigned pair (y, z), and the problem-specific rules force more
// (Leibniz products, module actions). A conflict prunes the branch. Because
// every constraint instance is forced exactly when its inputs become
// assigned, a fully assigned leaf satisfies every constraint.
template <class AddDom, class AddCod, class PairRule, class UnaryRule>
std::vector<std::vector<int>> enumerate_additive_maps(int domain_size, int domain_zero,
                                                      int codomain_size, int codomain_zero,
                                                      AddDom add_dom, AddCod add_cod,
                                                      PairRule pair_rule, UnaryRule unary_rule,
                                                      long long budget) {
    std::vector<int> values(domain_size, -1);
    std::vector<int> trail;
    std::vector<std::pair<int, int>> queue;  // pending (element, forced value)
    std::vector<std::vector<int>> solutions;
    long long nodes = 0;

    auto propagate = [&](int x, int v) -> bool {
        queue.clear();
        queue.emplace_back(x, v);
        while (!queue.empty()) {
            auto [y, w] = queue.back();
            queue.pop_back();
            if (values[y] != -1) {
                if (values[y] != w) return false;
                continue;
            }
            if (++nodes > budget)
                throw SearchBudgetExceeded(
                    "derivation search exceeded the node budget of " + std::to_string(budget));
            values[y] = w;
            trail.push_back(y);
            auto emit = [&](int elem, int val) { queue.emplace_back(elem, val); };
            // Pair every previously assigned element (and y itself) with y.
            for (std::size_t i = 0; i < trail.size(); ++i) {
                int z = trail[i];
                emit(add_dom(y, z), add_cod(w, values[z]));
                pair_rule(y, z, values, emit);
                if (z != y) pair_rule(z, y, values, emit);
            }
            unary_rule(y, values, emit);
        }
        return true;
    };

    std::function<void()> dfs = [&]() {
        int x = -1;
        for (int i = 0; i < domain_size && x < 0; ++i)
            if (values[i] == -1) x = i;
        if (x < 0) {
            solutions.push_back(values);
            return;
        }
        for (int v = 0; v < codomain_size; ++v) {
            std::size_t mark = trail.size();
            if (propagate(x, v)) dfs();
            while (trail.size() > mark) {
                values[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };

    if (propagate(domain_zero, codomain_zero)) dfs();
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

}  // namespace

bool is_ring_derivation(const FiniteRing& ring, const std::vector<int>& table) {
    const int n = ring.order();
    if (static_cast<int>(table.size()) != n) return false;
    for (int v : table)
        if (v < 0 || v >= n) return false;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (table[ring.add(r, s)] != ring.add(table[r], table[s])) return false;
            if (table[ring.mul(r, s)] !=
                ring.add(ring.mul(table[r], s), ring.mul(r, table[s])))
                return false;
        }
    return true;
}

bool is_module_derivation(const FiniteModule& module, const RingDerivation& delta,
                          const std::vector<int>& table) {
    const int m = module.order();
    const int n = module.ring()->order();
    if (static_cast<int>(table.size()) != m) return false;
    for (int v : table)
        if (v < 0 || v >= m) return false;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y)
            if (table[module.add(x, y)] != module.add(table[x], table[y])) return false;
        for (int r = 0; r < n; ++r)
            if (table[module.act(x, r)] !=
                module.add(module.act(table[x], r), module.act(x, delta(r))))
                return false;
    }
    return true;
}

bool satisfies_left_derivation_law(const FiniteBimodule& bimodule, const RingDerivation& delta,
                                   const std::vector<int>& table) {
    const int m = bimodule.order();
    const int n = bimodule.ring()->order();
    for (int r = 0; r < n; ++r)
        for (int y = 0; y < m; ++y)
            if (table[bimodule.lact(r, y)] !=
                bimodule.add(bimodule.lact(delta(r), y), bimodule.lact(r, table[y])))
                return false;
    return true;
}

RingDerivation inner_derivation(const RingPtr& ring, int a) {
    std::vector<int> table(ring->order());
    for (int b = 0; b < ring->order(); ++b)
        table[b] = ring->sub(ring->mul(a, b), ring->mul(b, a));
    return {ring, std::move(table)};
}

ModuleDerivation inner_bimodule_derivation(const BimodulePtr& bimodule, int a) {
    std::vector<int> table(bimodule->order());
    for (int x = 0; x < bimodule->order(); ++x)
        table[x] = bimodule->sub(bimodule->lact(a, x), bimodule->act(x, a));
    return {bimodule, inner_derivation(bimodule->ring(), a), std::move(table)};
}

RingDerivation zero_derivation(const RingPtr& ring) {
    return {ring, std::vector<int>(ring->order(), ring->zero())};
}

ModuleDerivation zero_module_derivation(const ModulePtr& module, const RingDerivation& delta) {
    return {module, delta, std::vector<int>(module->order(), module->zero())};
}

std::vector<RingDerivation> enumerate_ring_derivations(const RingPtr& ring, const Caps& caps) {
    const FiniteRing& R = *ring;
    auto tables = enumerate_additive_maps(
        R.order(), R.zero(), R.order(), R.zero(),
        [&](int a, int b) { return R.add(a, b); }, [&](int a, int b) { return R.add(a, b); },
        // Leibniz: once δ(a) and δ(b) are known, δ(ab) is forced.
        [&](int a, int b, const std::vector<int>& values, auto&& emit) {
            emit(R.mul(a, b), R.add(R.mul(values[a], b), R.mul(a, values[b])));
        },
        [](int, const std::vector<int>&, auto&&) {}, caps.search_budget);

    std::vector<RingDerivation> out;
    out.reserve(tables.size());
    for (auto& t : tables) {
        if (!is_ring_derivation(R, t))
            throw Error("internal: derivation search produced a non-derivation");
        out.push_back({ring, std::move(t)});
    }
    return out;
}

std::vector<ModuleDerivation> enumerate_module_derivations(const ModulePtr& module,
                                                           const RingDerivation& delta,
                                                           const Caps& caps) {
    if (delta.ring != module->ring())
        throw IllFormed("module derivation search: delta lives over a different ring");
    const FiniteModule& M = *module;
    const int n = M.ring()->order();
    auto tables = enumerate_additive_maps(
        M.order(), M.zero(), M.order(), M.zero(),
        [&](int x, int y) { return M.add(x, y); }, [&](int x, int y) { return M.add(x, y); },
        [](int, int, const std::vector<int>&, auto&&) {},
        // Action law: once d(x) is known, d(xr) is forced for every r.
        [&](int x, const std::vector<int>& values, auto&& emit) {
            for (int r = 0; r < n; ++r)
                emit(M.act(x, r), M.add(M.act(values[x], r), M.act(x, delta(r))));
        },
        caps.search_budget);

    std::vector<ModuleDerivation> out;
    out.reserve(tables.size());
    for (auto& t : tables) {
        if (!is_module_derivation(M, delta, t))
            throw Error("internal: derivation search produced a non-derivation");
        out.push_back({module, delta, std::move(t)});
    }
    return out;
}

}  // namespace torsionkit
