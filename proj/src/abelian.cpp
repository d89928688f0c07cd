#include "torsionkit/abelian.hpp"

#include <utility>

namespace torsionkit {

namespace {

// A bare finite abelian group: row-major addition table.
struct PlainGroup {
    int order = 0;
    int zero = 0;
    std::vector<int> add;

    int sum(int a, int b) const { return add[a * order + b]; }
    int neg(int a) const {
        for (int b = 0; b < order; ++b)
            if (sum(a, b) == zero) return b;
        throw Error("internal: abelian decomposition saw a non-group");
    }
    int element_order(int a) const {
        int acc = a, k = 1;
        while (acc != zero) {
            acc = sum(acc, a);
            ++k;
        }
        return k;
    }
    // k * a
    int multiple(int a, int k) const {
        int acc = zero;
        for (int i = 0; i < k; ++i) acc = sum(acc, a);
        return acc;
    }
};

// Returns (basis, orders) with nonincreasing orders.
std::pair<std::vector<int>, std::vector<int>> decompose(const PlainGroup& g) {
    if (g.order == 1) return {{}, {}};

    // g1: smallest element of maximal order a1 (a1 is the group exponent).
    int g1 = -1, a1 = 0;
    for (int x = 0; x < g.order; ++x) {
        int o = g.element_order(x);
        if (o > a1) a1 = o, g1 = x;
    }

    // The cyclic subgroup <g1> and the quotient with smallest-member reps.
    std::vector<int> multiples(a1);
    for (int k = 0; k < a1; ++k) multiples[k] = g.multiple(g1, k);
    std::vector<int> class_of(g.order, -1);
    std::vector<int> rep;
    for (int x = 0; x < g.order; ++x) {
        if (class_of[x] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int m : multiples) class_of[g.sum(x, m)] = id;
    }
    PlainGroup q;
    q.order = static_cast<int>(rep.size());
    q.zero = class_of[g.zero];
    q.add.resize(q.order * q.order);
    for (int i = 0; i < q.order; ++i)
        for (int j = 0; j < q.order; ++j) q.add[i * q.order + j] = class_of[g.sum(rep[i], rep[j])];

    auto [qbasis, qorders] = decompose(q);

    std::vector<int> basis{g1};
    std::vector<int> orders{a1};
    for (std::size_t i = 0; i < qbasis.size(); ++i) {
        // Lift the quotient generator and correct it to have the exact order:
        // a_i * h lands in <g1>, say = k * g1 with a_i | k (since a1 * h = 0);
        // then h - (k / a_i) * g1 has order a_i and the same image in q.
        int h = rep[qbasis[i]];
        int ai = qorders[i];
        int target = g.multiple(h, ai);
        int k = -1;
        for (int c = 0; c < a1 && k < 0; ++c)
            if (multiples[c] == target) k = c;
        if (k < 0 || k % ai != 0)
            throw Error("internal: abelian decomposition lift failed");
        basis.push_back(g.sum(h, g.neg(g.multiple(g1, k / ai))));
        orders.push_back(ai);
    }
    return {std::move(basis), std::move(orders)};
}

}  // namespace

CyclicDecomposition decompose_abelian(const FiniteModule& module) {
    PlainGroup g;
    g.order = module.order();
    g.zero = module.zero();
    g.add.resize(g.order * g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) g.add[x * g.order + y] = module.add(x, y);

    auto [basis, orders] = decompose(g);

    CyclicDecomposition out;
    out.basis = basis;
    out.orders = orders;
    out.coords.assign(g.order, {});

    // Walk all coordinate tuples and record each element's coordinates; the
    // basis property makes this a bijection, which we verify.
    const int k = static_cast<int>(basis.size());
    std::vector<int> tuple(k, 0);
    long long combos = 1;
    for (int o : orders) combos *= o;
    if (combos != g.order) throw Error("internal: abelian decomposition order mismatch");
    for (long long step = 0; step < combos; ++step) {
        int elem = g.zero;
        for (int i = 0; i < k; ++i) elem = g.sum(elem, g.multiple(basis[i], tuple[i]));
        if (!out.coords[elem].empty() || (elem == g.zero && step > 0))
            throw Error("internal: abelian decomposition is not a bijection");
        out.coords[elem] = tuple;
        for (int i = k - 1; i >= 0; --i) {
            if (++tuple[i] < orders[i]) break;
            tuple[i] = 0;
        }
    }
    if (k == 0) out.coords[g.zero] = {};
    return out;
}

}  // namespace torsionkit
