#include "torsionkit/module.hpp"

#include <algorithm>
#include <numeric>

namespace torsionkit {

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& law) {
    throw IllFormed("module '" + name + "': " + law);
}

std::string at(int a, int b) {
    return " at (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string at(int a, int b, int c) {
    return " at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

struct Validated {
    int zero;
    std::vector<std::uint8_t> neg;
};

// Checks the abelian-group and right-action axioms shared by modules and
// bimodules; returns the discovered zero and negation table.
Validated check_right_module(const ModuleTables& t, const FiniteRing& ring, const Caps& caps) {
    const int m = t.order;
    const int n = ring.order();
    if (m <= 0) fail(t.name, "order must be positive");
    if (m > caps.module_order)
        throw OrderCapExceeded("module '" + t.name + "': order " + std::to_string(m) +
                               " exceeds cap " + std::to_string(caps.module_order));
    if (static_cast<int>(t.add.size()) != m * m) fail(t.name, "add table must have order^2 entries");
    if (static_cast<int>(t.act.size()) != m * n)
        fail(t.name, "act table must have order x ringOrder entries");
    for (int v : t.add)
        if (v < 0 || v >= m) fail(t.name, "add table entry out of range");
    for (int v : t.act)
        if (v < 0 || v >= m) fail(t.name, "act table entry out of range");

    auto add = [&](int x, int y) { return t.add[x * m + y]; };
    auto act = [&](int x, int r) { return t.act[x * n + r]; };

    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if (add(add(x, y), z) != add(x, add(y, z)))
                    fail(t.name, "addition not associative" + at(x, y, z));
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (add(x, y) != add(y, x)) fail(t.name, "addition not commutative" + at(x, y));
    int zero = -1;
    for (int z = 0; z < m && zero < 0; ++z) {
        bool identity = true;
        for (int x = 0; x < m && identity; ++x) identity = add(z, x) == x;
        if (identity) zero = z;
    }
    if (zero < 0) fail(t.name, "no additive identity");
    std::vector<std::uint8_t> neg(m);
    for (int x = 0; x < m; ++x) {
        int inv = -1;
        for (int y = 0; y < m && inv < 0; ++y)
            if (add(x, y) == zero) inv = y;
        if (inv < 0) fail(t.name, "element " + std::to_string(x) + " has no additive inverse");
        neg[x] = static_cast<std::uint8_t>(inv);
    }

    for (int x = 0; x < m; ++x)
        if (act(x, ring.one()) != x) fail(t.name, "x*1 != x at x=" + std::to_string(x));
    for (int x = 0; x < m; ++x)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (act(act(x, r), s) != act(x, ring.mul(r, s)))
                    fail(t.name, "(x r) s != x (r s)" + at(x, r, s));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int r = 0; r < n; ++r)
                if (act(add(x, y), r) != add(act(x, r), act(y, r)))
                    fail(t.name, "(x+y) r != x r + y r" + at(x, y, r));
    for (int x = 0; x < m; ++x)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (act(x, ring.add(r, s)) != add(act(x, r), act(x, s)))
                    fail(t.name, "x (r+s) != x r + x s" + at(x, r, s));
    return {zero, std::move(neg)};
}

void check_left_action(const ModuleTables& t, const FiniteRing& ring) {
    const int m = t.order;
    const int n = ring.order();
    if (static_cast<int>(t.lact.size()) != n * m)
        fail(t.name, "lact table must have ringOrder x order entries");
    for (int v : t.lact)
        if (v < 0 || v >= m) fail(t.name, "lact table entry out of range");

    auto add = [&](int x, int y) { return t.add[x * m + y]; };
    auto act = [&](int x, int r) { return t.act[x * n + r]; };
    auto lact = [&](int r, int x) { return t.lact[r * m + x]; };

    for (int x = 0; x < m; ++x)
        if (lact(ring.one(), x) != x) fail(t.name, "1*x != x at x=" + std::to_string(x));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int x = 0; x < m; ++x)
                if (lact(ring.mul(r, s), x) != lact(r, lact(s, x)))
                    fail(t.name, "(r s) x != r (s x)" + at(r, s, x));
    for (int r = 0; r < n; ++r)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (lact(r, add(x, y)) != add(lact(r, x), lact(r, y)))
                    fail(t.name, "r (x+y) != r x + r y" + at(r, x, y));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int x = 0; x < m; ++x)
                if (lact(ring.add(r, s), x) != add(lact(r, x), lact(s, x)))
                    fail(t.name, "(r+s) x != r x + s x" + at(r, s, x));
    for (int r = 0; r < n; ++r)
        for (int x = 0; x < m; ++x)
            for (int s = 0; s < n; ++s)
                if (act(lact(r, x), s) != lact(r, act(x, s)))
                    fail(t.name, "(r x) s != r (x s)" + at(r, x, s));
}

}  // namespace

struct ModuleBuilder {
    static void fill(FiniteModule& m, const ModuleTables& t, const RingPtr& ring,
                     const Validated& v) {
        m.ring_ = ring;
        m.order_ = t.order;
        m.zero_ = v.zero;
        m.name_ = t.name;
        m.add_.assign(t.add.begin(), t.add.end());
        m.act_.assign(t.act.begin(), t.act.end());
        m.neg_ = v.neg;
    }
    static ModulePtr module(const ModuleTables& t, const RingPtr& ring, const Validated& v) {
        auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
        fill(*m, t, ring, v);
        return m;
    }
    static BimodulePtr bimodule(const ModuleTables& t, const RingPtr& ring, const Validated& v) {
        auto m = std::shared_ptr<FiniteBimodule>(new FiniteBimodule());
        fill(*m, t, ring, v);
        m->lact_.assign(t.lact.begin(), t.lact.end());
        return m;
    }
};

ModulePtr validate_module(const ModuleTables& tables, const RingPtr& ring, const Caps& caps) {
    Validated v = check_right_module(tables, *ring, caps);
    return ModuleBuilder::module(tables, ring, v);
}

BimodulePtr validate_bimodule(const ModuleTables& tables, const RingPtr& ring, const Caps& caps) {
    Validated v = check_right_module(tables, *ring, caps);
    check_left_action(tables, *ring);
    return ModuleBuilder::bimodule(tables, ring, v);
}

namespace {

ModuleTables regular_tables(const RingPtr& ring) {
    const int n = ring->order();
    ModuleTables t;
    t.name = "reg(" + ring->name() + ")";
    t.order = n;
    t.add.resize(n * n);
    t.act.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            t.add[a * n + b] = ring->add(a, b);
            t.act[a * n + b] = ring->mul(a, b);
        }
    return t;
}

}  // namespace

ModulePtr make_regular_module(const RingPtr& ring, const Caps& caps) {
    return validate_module(regular_tables(ring), ring, caps);
}

BimodulePtr make_regular_bimodule(const RingPtr& ring, const Caps& caps) {
    ModuleTables t = regular_tables(ring);
    t.name = "bireg(" + ring->name() + ")";
    t.lact = t.act;  // left action is ring multiplication as well
    return validate_bimodule(t, ring, caps);
}

ModulePtr make_zero_module(const RingPtr& ring, const Caps& caps) {
    ModuleTables t;
    t.name = "zero(" + ring->name() + ")";
    t.order = 1;
    t.add.assign(1, 0);
    t.act.assign(ring->order(), 0);
    return validate_module(t, ring, caps);
}

ModulePtr make_direct_sum(const ModulePtr& left, const ModulePtr& right, const Caps& caps) {
    if (left->ring() != right->ring())
        throw IllFormed("direct sum: summands must share a ring");
    const int ml = left->order();
    const int mr = right->order();
    if (ml > caps.module_order / mr)
        throw OrderCapExceeded("direct sum of '" + left->name() + "' and '" + right->name() +
                               "' exceeds the module order cap");
    const int m = ml * mr;
    const int n = left->ring()->order();
    ModuleTables t;
    t.name = "sum(" + left->name() + "," + right->name() + ")";
    t.order = m;
    t.add.resize(m * m);
    t.act.resize(m * n);
    for (int x = 0; x < m; ++x) {
        int xl = x / mr, xr = x % mr;
        for (int y = 0; y < m; ++y) {
            int yl = y / mr, yr = y % mr;
            t.add[x * m + y] = left->add(xl, yl) * mr + right->add(xr, yr);
        }
        for (int r = 0; r < n; ++r)
            t.act[x * n + r] = left->act(xl, r) * mr + right->act(xr, r);
    }
    return validate_module(t, left->ring(), caps);
}

namespace {

ModuleTables ideal_tables(const RingPtr& ring, RightIdeal ideal, const std::string& name) {
    if (!is_right_ideal(*ring, ideal))
        throw IllFormed(name + ": mask " + ideal_to_hex(ideal) + " is not a right ideal of " +
                        ring->name());
    std::vector<int> members = ideal_elements(ideal);
    const int m = static_cast<int>(members.size());
    const int n = ring->order();
    std::vector<int> index_of(n, -1);
    for (int i = 0; i < m; ++i) index_of[members[i]] = i;

    ModuleTables t;
    t.name = name;
    t.order = m;
    t.add.resize(m * m);
    t.act.resize(m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) t.add[i * m + j] = index_of[ring->add(members[i], members[j])];
        for (int r = 0; r < n; ++r) t.act[i * n + r] = index_of[ring->mul(members[i], r)];
    }
    return t;
}

}  // namespace

ModulePtr make_ideal_module(const RingPtr& ring, RightIdeal ideal, const Caps& caps) {
    std::string name = "sub(" + ring->name() + "," + ideal_to_hex(ideal) + ")";
    return validate_module(ideal_tables(ring, ideal, name), ring, caps);
}

BimodulePtr make_ideal_bimodule(const RingPtr& ring, RightIdeal ideal, const Caps& caps) {
    std::string name = "bisub(" + ring->name() + "," + ideal_to_hex(ideal) + ")";
    for (int r = 0; r < ring->order(); ++r)
        for (int a : ideal_elements(ideal))
            if (!ideal_contains(ideal, ring->mul(r, a)))
                throw IllFormed(name + ": ideal is not two-sided (" + std::to_string(r) + "*" +
                                std::to_string(a) + " escapes)");
    ModuleTables t = ideal_tables(ring, ideal, name);
    std::vector<int> members = ideal_elements(ideal);
    const int m = static_cast<int>(members.size());
    const int n = ring->order();
    std::vector<int> index_of(n, -1);
    for (int i = 0; i < m; ++i) index_of[members[i]] = i;
    t.lact.resize(n * m);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < m; ++i) t.lact[r * m + i] = index_of[ring->mul(r, members[i])];
    return validate_bimodule(t, ring, caps);
}

QuotientModule make_cyclic_module(const RingPtr& ring, RightIdeal ideal, const Caps& caps) {
    if (!is_right_ideal(*ring, ideal))
        throw IllFormed("cyclic module: mask " + ideal_to_hex(ideal) +
                        " is not a right ideal of " + ring->name());
    const int n = ring->order();
    // Cosets x + I, discovered in ascending order of their smallest member.
    std::vector<int> class_of(n, -1);
    std::vector<int> rep;
    for (int x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int a : ideal_elements(ideal)) class_of[ring->add(x, a)] = id;
    }
    const int m = static_cast<int>(rep.size());
    ModuleTables t;
    t.name = "quo(" + ring->name() + "," + ideal_to_hex(ideal) + ")";
    t.order = m;
    t.add.resize(m * m);
    t.act.resize(m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) t.add[i * m + j] = class_of[ring->add(rep[i], rep[j])];
        for (int r = 0; r < n; ++r) t.act[i * n + r] = class_of[ring->mul(rep[i], r)];
    }
    return {validate_module(t, ring, caps), std::move(class_of)};
}

QuotientModule quotient_by_submodule(const ModulePtr& module, const ElementSet& submodule,
                                     const Caps& caps) {
    if (!is_submodule(*module, submodule))
        throw IllFormed("quotient of '" + module->name() + "': mask is not a submodule");
    const int m = module->order();
    const int n = module->ring()->order();
    std::vector<int> members;
    for (int x = 0; x < m; ++x)
        if (submodule[x]) members.push_back(x);
    std::vector<int> class_of(m, -1);
    std::vector<int> rep;
    for (int x = 0; x < m; ++x) {
        if (class_of[x] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int a : members) class_of[module->add(x, a)] = id;
    }
    const int q = static_cast<int>(rep.size());
    ModuleTables t;
    t.name = "quo(" + module->name() + ")";
    t.order = q;
    t.add.resize(q * q);
    t.act.resize(q * n);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) t.add[i * q + j] = class_of[module->add(rep[i], rep[j])];
        for (int r = 0; r < n; ++r) t.act[i * n + r] = class_of[module->act(rep[i], r)];
    }
    return {validate_module(t, module->ring(), caps), std::move(class_of)};
}

RightIdeal annihilator(const FiniteModule& module, int x) {
    RightIdeal out = 0;
    for (int r = 0; r < module.ring()->order(); ++r)
        if (module.act(x, r) == module.zero()) out |= std::uint64_t{1} << r;
    return out;
}

bool is_submodule(const FiniteModule& module, const ElementSet& set) {
    if (static_cast<int>(set.size()) != module.order()) return false;
    if (!set[module.zero()]) return false;
    for (int x = 0; x < module.order(); ++x) {
        if (!set[x]) continue;
        for (int y = 0; y <= x; ++y)
            if (set[y] && !set[module.add(x, y)]) return false;
        for (int r = 0; r < module.ring()->order(); ++r)
            if (!set[module.act(x, r)]) return false;
    }
    return true;
}

ElementSet submodule_closure(const FiniteModule& module, const ElementSet& seed) {
    ElementSet set(module.order(), 0);
    set[module.zero()] = 1;
    for (int x = 0; x < module.order() && x < static_cast<int>(seed.size()); ++x)
        if (seed[x]) set[x] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < module.order(); ++x) {
            if (!set[x]) continue;
            for (int y = 0; y <= x; ++y) {
                if (!set[y]) continue;
                int s = module.add(x, y);
                if (!set[s]) set[s] = 1, grew = true;
            }
            for (int r = 0; r < module.ring()->order(); ++r) {
                int p = module.act(x, r);
                if (!set[p]) set[p] = 1, grew = true;
            }
        }
    }
    return set;
}

int set_size(const ElementSet& set) {
    return static_cast<int>(
        std::count_if(set.begin(), set.end(), [](char c) { return c != 0; }));
}

}  // namespace torsionkit
