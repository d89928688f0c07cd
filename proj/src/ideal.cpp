#include "torsionkit/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace torsionkit {

std::vector<int> ideal_elements(RightIdeal ideal) {
    std::vector<int> out;
    for (std::uint64_t rest = ideal; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

std::string ideal_to_hex(RightIdeal ideal) {
    if (ideal == 0) return "0x0";
    char buf[19];
    int i = 18;
    buf[i] = '\0';
    for (std::uint64_t v = ideal; v != 0; v >>= 4)
        buf[--i] = "0123456789abcdef"[v & 0xf];
    return std::string("0x") + (buf + i);
}

RightIdeal ideal_from_hex(const std::string& text) {
    std::string digits = text;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.size() > 16)
        throw UsageError("ideal mask: expected up to 16 hex digits, got '" + text + "'");
    RightIdeal value = 0;
    for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw UsageError("ideal mask: bad hex digit in '" + text + "'");
        value = value << 4 | static_cast<unsigned>(d);
    }
    return value;
}

RightIdeal cyclic_ideal(const FiniteRing& ring, int a) {
    return ring.cyclic_mask(a);
}

RightIdeal generated_right_ideal(const FiniteRing& ring, const std::vector<int>& generators) {
    // Fixpoint closure under addition and right multiplication. Negation
    // closure follows: in a finite additive group -a is a repeated sum of a.
    RightIdeal set = std::uint64_t{1} << ring.zero();
    for (int g : generators) set |= std::uint64_t{1} << g;
    bool grew = true;
    while (grew) {
        grew = false;
        RightIdeal next = set;
        auto members = ideal_elements(set);
        for (int a : members) {
            for (int b : members) next |= std::uint64_t{1} << ring.add(a, b);
            next |= ring.cyclic_mask(a);
        }
        grew = next != set;
        set = next;
    }
    return set;
}

RightIdeal ideal_sum(const FiniteRing& ring, RightIdeal a, RightIdeal b) {
    // For right ideals the sum {x + y} is already closed under addition and
    // right multiplication, so a single pass over pairs is exact.
    RightIdeal out = 0;
    for (int x : ideal_elements(a))
        for (int y : ideal_elements(b)) out |= std::uint64_t{1} << ring.add(x, y);
    return out;
}

bool is_right_ideal(const FiniteRing& ring, RightIdeal set) {
    if (!ideal_contains(set, ring.zero())) return false;
    for (int a : ideal_elements(set)) {
        if (!ideal_contains(set, ring.neg(a))) return false;
        for (int b : ideal_elements(set))
            if (!ideal_contains(set, ring.add(a, b))) return false;
        for (int r = 0; r < ring.order(); ++r)
            if (!ideal_contains(set, ring.mul(a, r))) return false;
    }
    return true;
}

std::vector<RightIdeal> enumerate_right_ideals(const FiniteRing& ring) {
    // Every right ideal is the sum of the cyclic ideals of its elements, so
    // closing the cyclic ideals under pairwise sum yields the full lattice.
    std::set<RightIdeal> found;
    for (int a = 0; a < ring.order(); ++a) found.insert(cyclic_ideal(ring, a));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RightIdeal> current(found.begin(), found.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (found.insert(ideal_sum(ring, current[i], current[j])).second) grew = true;
    }
    std::vector<RightIdeal> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](RightIdeal a, RightIdeal b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

RightIdeal quotient_ideal(const FiniteRing& ring, RightIdeal ideal, int r) {
    RightIdeal out = 0;
    for (int s = 0; s < ring.order(); ++s)
        if (ideal_contains(ideal, ring.mul(r, s))) out |= std::uint64_t{1} << s;
    return out;
}

bool is_essential(const FiniteRing& ring, RightIdeal ideal) {
    // I is essential iff it meets aR for every a != 0: any nonzero right ideal
    // J contains some nonzero aR, and I & J = 0 would force I & aR = 0.
    for (int a = 0; a < ring.order(); ++a) {
        if (a == ring.zero()) continue;
        RightIdeal meet = ideal & ring.cyclic_mask(a);
        if (meet == std::uint64_t{1} << ring.zero() || meet == 0) return false;
    }
    return true;
}

bool is_dense(const FiniteRing& ring, RightIdeal ideal) {
    const int n = ring.order();
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (s == ring.zero()) continue;
            bool found = false;
            for (int t = 0; t < n && !found; ++t)
                found = ring.mul(s, t) != ring.zero() && ideal_contains(ideal, ring.mul(r, t));
            if (!found) return false;
        }
    return true;
}

}  // namespace torsionkit
