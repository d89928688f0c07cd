#include "torsionkit/ring.hpp"

#include <algorithm>

namespace torsionkit {

namespace {

std::string elem(int a) { return std::to_string(a); }

[[noreturn]] void fail(std::string kind, std::string law, std::array<int, 3> witness) {
    throw RingValidationError(AxiomViolation{std::move(kind), std::move(law), witness});
}

void check_table_shape(const RingTables& t, const std::vector<int>& table, const char* which) {
    const int n = t.order;
    if (static_cast<int>(table.size()) != n * n)
        throw IllFormed("ring '" + t.name + "': " + which + " table must have order^2 = " +
                        std::to_string(n * n) + " entries, got " + std::to_string(table.size()));
    for (int i = 0; i < n * n; ++i) {
        if (table[i] < 0 || table[i] >= n)
            throw IllFormed("ring '" + t.name + "': " + which + " table entry at (" +
                            std::to_string(i / n) + "," + std::to_string(i % n) +
                            ") is out of range: " + std::to_string(table[i]));
    }
}

}  // namespace

RingPtr validate_ring(const RingTables& tables, const Caps& caps) {
    const int n = tables.order;
    if (n <= 0)
        throw IllFormed("ring '" + tables.name + "': order must be positive");
    if (n > 64 || n > caps.ring_order)
        throw OrderCapExceeded("ring '" + tables.name + "': order " + std::to_string(n) +
                               " exceeds cap " + std::to_string(std::min(caps.ring_order, 64)));
    check_table_shape(tables, tables.add, "add");
    check_table_shape(tables, tables.mul, "mul");

    auto add = [&](int a, int b) { return tables.add[a * n + b]; };
    auto mul = [&](int a, int b) { return tables.mul[a * n + b]; };

    // Additive group axioms, scanned in ascending element order.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    fail("NotAGroup", "(" + elem(a) + "+" + elem(b) + ")+" + elem(c) + " != " +
                                          elem(a) + "+(" + elem(b) + "+" + elem(c) + ")",
                         {a, b, c});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (add(a, b) != add(b, a))
                fail("NotAGroup", elem(a) + "+" + elem(b) + " != " + elem(b) + "+" + elem(a),
                     {a, b, -1});
    int zero = -1;
    for (int z = 0; z < n && zero < 0; ++z) {
        bool identity = true;
        for (int a = 0; a < n && identity; ++a)
            identity = add(z, a) == a && add(a, z) == a;
        if (identity) zero = z;
    }
    if (zero < 0)
        fail("NotAGroup", "no additive identity", {-1, -1, -1});
    std::vector<std::uint8_t> neg(n);
    for (int a = 0; a < n; ++a) {
        int inv = -1;
        for (int b = 0; b < n && inv < 0; ++b)
            if (add(a, b) == zero) inv = b;
        if (inv < 0)
            fail("NotAGroup", elem(a) + " has no additive inverse", {a, -1, -1});
        neg[a] = static_cast<std::uint8_t>(inv);
    }

    // Two-sided multiplicative identity.
    int one = -1;
    for (int e = 0; e < n && one < 0; ++e) {
        bool identity = true;
        for (int a = 0; a < n && identity; ++a)
            identity = mul(e, a) == a && mul(a, e) == a;
        if (identity) one = e;
    }
    if (one < 0)
        fail("NoUnit", "no two-sided multiplicative identity", {-1, -1, -1});

    // Multiplicative associativity.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail("NotAssociative", "(" + elem(a) + "*" + elem(b) + ")*" + elem(c) +
                                               " != " + elem(a) + "*(" + elem(b) + "*" + elem(c) + ")",
                         {a, b, c});

    // Distributivity, left law before right law at each triple.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    fail("NotDistributive", elem(a) + "*(" + elem(b) + "+" + elem(c) + ") != " +
                                                elem(a) + "*" + elem(b) + "+" + elem(a) + "*" + elem(c),
                         {a, b, c});
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                    fail("NotDistributive", "(" + elem(a) + "+" + elem(b) + ")*" + elem(c) + " != " +
                                                elem(a) + "*" + elem(c) + "+" + elem(b) + "*" + elem(c),
                         {a, b, c});
            }

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->order_ = n;
    ring->zero_ = zero;
    ring->one_ = one;
    ring->name_ = tables.name;
    ring->add_.assign(tables.add.begin(), tables.add.end());
    ring->mul_.assign(tables.mul.begin(), tables.mul.end());
    ring->neg_ = std::move(neg);

    bool commutative = true;
    for (int a = 0; a < n && commutative; ++a)
        for (int b = a + 1; b < n && commutative; ++b)
            commutative = mul(a, b) == mul(b, a);
    ring->commutative_ = commutative;

    ring->cyclic_.resize(n);
    for (int a = 0; a < n; ++a) {
        std::uint64_t mask = 0;
        for (int r = 0; r < n; ++r) mask |= std::uint64_t{1} << mul(a, r);
        ring->cyclic_[a] = mask;
    }
    return ring;
}

RingPtr make_zmod(int n, const Caps& caps) {
    if (n <= 0) throw IllFormed("zmod: modulus must be positive");
    RingTables t;
    t.name = "zmod" + std::to_string(n);
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            t.add[a * n + b] = (a + b) % n;
            t.mul[a * n + b] = (a * b) % n;
        }
    return validate_ring(t, caps);
}

RingPtr make_product(const RingPtr& left, const RingPtr& right, const Caps& caps) {
    const int nl = left->order();
    const int nr = right->order();
    if (nl > 64 / nr || nl * nr > caps.ring_order)
        throw OrderCapExceeded("product ring " + left->name() + "x" + right->name() +
                               " exceeds the ring order cap");
    const int n = nl * nr;
    RingTables t;
    t.name = left->name() + "x" + right->name();
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int al = a / nr, ar = a % nr;
            int bl = b / nr, br = b % nr;
            t.add[a * n + b] = left->add(al, bl) * nr + right->add(ar, br);
            t.mul[a * n + b] = left->mul(al, bl) * nr + right->mul(ar, br);
        }
    return validate_ring(t, caps);
}

namespace {

// Shared machinery for the matrix-shaped rings: elements are tuples of base
// ring entries, encoded as base-|R| digits with the first entry most
// significant.
struct TupleCodec {
    int base = 0;
    int len = 0;

    long long order() const {
        long long o = 1;
        for (int i = 0; i < len; ++i) {
            o *= base;
            if (o > 64) return o;  // caller treats anything past the cap alike
        }
        return o;
    }
    std::vector<int> decode(int index) const {
        std::vector<int> digits(len);
        for (int i = len - 1; i >= 0; --i) {
            digits[i] = index % base;
            index /= base;
        }
        return digits;
    }
    int encode(const std::vector<int>& digits) const {
        int index = 0;
        for (int d : digits) index = index * base + d;
        return index;
    }
};

}  // namespace

RingPtr make_matrix_ring(const RingPtr& base, int k, const Caps& caps) {
    if (k <= 0) throw IllFormed("matrix: size must be positive");
    TupleCodec codec{base->order(), k * k};
    long long order = codec.order();
    if (order > 64 || order > caps.ring_order)
        throw OrderCapExceeded("matrix(" + base->name() + "," + std::to_string(k) +
                               ") exceeds the ring order cap");
    const int n = static_cast<int>(order);

    RingTables t;
    t.name = "matrix(" + base->name() + "," + std::to_string(k) + ")";
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (int a = 0; a < n; ++a) {
        auto da = codec.decode(a);
        for (int b = 0; b < n; ++b) {
            auto db = codec.decode(b);
            std::vector<int> sum(k * k), prod(k * k);
            for (int i = 0; i < k * k; ++i) sum[i] = base->add(da[i], db[i]);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    int s = base->zero();
                    for (int m = 0; m < k; ++m)
                        s = base->add(s, base->mul(da[i * k + m], db[m * k + j]));
                    prod[i * k + j] = s;
                }
            t.add[a * n + b] = codec.encode(sum);
            t.mul[a * n + b] = codec.encode(prod);
        }
    }
    return validate_ring(t, caps);
}

RingPtr make_triangular_ring(const RingPtr& base, int k, const Caps& caps) {
    if (k <= 0) throw IllFormed("triangular: size must be positive");
    const int entries = k * (k + 1) / 2;
    TupleCodec codec{base->order(), entries};
    long long order = codec.order();
    if (order > 64 || order > caps.ring_order)
        throw OrderCapExceeded("triangular(" + base->name() + "," + std::to_string(k) +
                               ") exceeds the ring order cap");
    const int n = static_cast<int>(order);

    // Position of entry (i, j), i <= j, in row-major upper-triangle order.
    std::vector<int> pos(k * k, -1);
    {
        int p = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) pos[i * k + j] = p++;
    }

    RingTables t;
    t.name = "triangular(" + base->name() + "," + std::to_string(k) + ")";
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (int a = 0; a < n; ++a) {
        auto da = codec.decode(a);
        for (int b = 0; b < n; ++b) {
            auto db = codec.decode(b);
            std::vector<int> sum(entries), prod(entries);
            for (int i = 0; i < entries; ++i) sum[i] = base->add(da[i], db[i]);
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j) {
                    int s = base->zero();
                    for (int m = i; m <= j; ++m)
                        s = base->add(s, base->mul(da[pos[i * k + m]], db[pos[m * k + j]]));
                    prod[pos[i * k + j]] = s;
                }
            t.add[a * n + b] = codec.encode(sum);
            t.mul[a * n + b] = codec.encode(prod);
        }
    }
    return validate_ring(t, caps);
}

std::uint64_t regular_elements(const FiniteRing& ring) {
    const int n = ring.order();
    std::uint64_t mask = 0;
    for (int t = 0; t < n; ++t) {
        bool regular = true;
        for (int r = 0; r < n && regular; ++r) {
            if (r == ring.zero()) continue;
            if (ring.mul(r, t) == ring.zero() || ring.mul(t, r) == ring.zero()) regular = false;
        }
        if (regular) mask |= std::uint64_t{1} << t;
    }
    return mask;
}

std::uint64_t units(const FiniteRing& ring) {
    const int n = ring.order();
    std::uint64_t mask = 0;
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u)
            if (ring.mul(t, u) == ring.one() && ring.mul(u, t) == ring.one()) {
                mask |= std::uint64_t{1} << t;
                break;
            }
    return mask;
}

OreCheck is_right_ore(const FiniteRing& ring) {
    const int n = ring.order();
    std::uint64_t regular = regular_elements(ring);
    for (int r = 0; r < n; ++r)
        for (int t = 0; t < n; ++t) {
            if (!(regular >> t & 1)) continue;
            bool found = false;
            for (int tp = 0; tp < n && !found; ++tp) {
                if (!(regular >> tp & 1)) continue;
                for (int rp = 0; rp < n && !found; ++rp)
                    found = ring.mul(r, tp) == ring.mul(t, rp);
            }
            if (!found) return {false, r, t};
        }
    return {true, -1, -1};
}

}  // namespace torsionkit
