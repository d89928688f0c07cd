#include "torsionkit/filter.hpp"

#include <algorithm>
#include <bit>

namespace torsionkit {

namespace {

bool canonical_less(RightIdeal a, RightIdeal b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

}  // namespace

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::lambek: return "lambek";
        case Provenance::goldie: return "goldie";
        case Provenance::extension: return "extension";
        case Provenance::custom: return "custom";
    }
    return "custom";
}

int IdealLattice::index_of(RightIdeal ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal, canonical_less);
    if (it == ideals.end() || *it != ideal) return -1;
    return static_cast<int>(it - ideals.begin());
}

IdealLattice build_lattice(const RingPtr& ring) {
    IdealLattice lattice;
    lattice.ring = ring;
    lattice.ideals = enumerate_right_ideals(*ring);
    lattice.dense.reserve(lattice.ideals.size());
    lattice.essential.reserve(lattice.ideals.size());
    for (RightIdeal ideal : lattice.ideals) {
        lattice.dense.push_back(is_dense(*ring, ideal) ? 1 : 0);
        lattice.essential.push_back(is_essential(*ring, ideal) ? 1 : 0);
    }
    return lattice;
}

bool GabrielFilter::contains(RightIdeal ideal) const {
    return std::binary_search(members.begin(), members.end(), ideal, canonical_less);
}

GabrielFilter make_filter(const RingPtr& ring, std::vector<RightIdeal> members,
                          Provenance provenance) {
    // Normalize: close upward over the lattice, sort canonically, dedupe.
    auto lattice = enumerate_right_ideals(*ring);
    std::vector<RightIdeal> closed;
    for (RightIdeal candidate : lattice) {
        bool in = false;
        for (RightIdeal m : members)
            in = in || (m & candidate) == m;
        if (in) closed.push_back(candidate);
    }
    std::sort(closed.begin(), closed.end(), canonical_less);
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    return {ring, provenance, std::move(closed)};
}

namespace {

FilterViolation check_axioms_over(const GabrielFilter& filter,
                                  const std::vector<RightIdeal>& lattice) {
    const RingPtr& ring = filter.ring;

    if (!filter.contains(ring->full_mask()))
        return {false, "containsR", ring->full_mask(), -1, 0};

    for (RightIdeal i : filter.members)
        for (RightIdeal j : lattice)
            if ((i & j) == i && !filter.contains(j)) return {false, "upwardClosed", i, -1, j};

    for (RightIdeal i : filter.members)
        for (int r = 0; r < ring->order(); ++r)
            if (!filter.contains(quotient_ideal(*ring, i, r)))
                return {false, "axiom1", i, r, 0};

    // Axiom 2: no non-member J may have (J : r) in F for every r in some
    // member I.
    for (RightIdeal j : lattice) {
        if (filter.contains(j)) continue;
        for (RightIdeal i : filter.members) {
            bool forced = true;
            for (int r : ideal_elements(i))
                forced = forced && filter.contains(quotient_ideal(*ring, j, r));
            if (forced) return {false, "axiom2", i, -1, j};
        }
    }
    return {};
}

}  // namespace

FilterViolation check_gabriel_axioms(const GabrielFilter& filter) {
    return check_axioms_over(filter, enumerate_right_ideals(*filter.ring));
}

GabrielFilter lambek_filter(const RingPtr& ring) {
    std::vector<RightIdeal> members;
    for (RightIdeal ideal : enumerate_right_ideals(*ring))
        if (is_dense(*ring, ideal)) members.push_back(ideal);
    return {ring, Provenance::lambek, std::move(members)};
}

GabrielFilter goldie_filter(const RingPtr& ring) {
    std::vector<RightIdeal> members;
    for (RightIdeal ideal : enumerate_right_ideals(*ring)) {
        std::uint64_t star = 0;
        for (int r = 0; r < ring->order(); ++r)
            if (is_essential(*ring, quotient_ideal(*ring, ideal, r)))
                star |= std::uint64_t{1} << r;
        if (is_essential(*ring, star)) members.push_back(ideal);
    }
    return {ring, Provenance::goldie, std::move(members)};
}

GabrielFilter extension_filter(const RingPtr& ring, int e) {
    if (e < 0 || e >= ring->order())
        throw UsageError("extension filter: element " + std::to_string(e) +
                         " is out of range for " + ring->name());
    if (ring->mul(e, e) != e)
        throw NotIdempotent("extension filter: element " + std::to_string(e) +
                            " of " + ring->name() + " is not idempotent");
    for (int r = 0; r < ring->order(); ++r)
        if (ring->mul(e, r) != ring->mul(r, e))
            throw NotCentral("extension filter: element " + std::to_string(e) + " of " +
                             ring->name() + " does not commute with " + std::to_string(r));

    RightIdeal s = cyclic_ideal(*ring, e);
    std::vector<RightIdeal> members;
    for (RightIdeal ideal : enumerate_right_ideals(*ring)) {
        // I*S: additive closure of the pairwise products.
        std::vector<int> products;
        for (int i : ideal_elements(ideal))
            for (int x : ideal_elements(s)) products.push_back(ring->mul(i, x));
        std::uint64_t span = std::uint64_t{1} << ring->zero();
        bool grew = true;
        while (grew) {
            grew = false;
            for (int p : products)
                for (int a : ideal_elements(span)) {
                    int sum = ring->add(a, p);
                    if (!(span >> sum & 1)) {
                        span |= std::uint64_t{1} << sum;
                        grew = true;
                    }
                }
        }
        if (span == s) members.push_back(ideal);
    }
    return {ring, Provenance::extension, std::move(members)};
}

std::vector<GabrielFilter> enumerate_gabriel_filters(const RingPtr& ring, const Caps& caps) {
    auto lattice = enumerate_right_ideals(*ring);
    const int count = static_cast<int>(lattice.size());
    if (count > caps.lattice_size)
        throw LatticeTooLarge("filter enumeration: " + ring->name() + " has " +
                              std::to_string(count) + " right ideals, cap is " +
                              std::to_string(caps.lattice_size));
    std::vector<GabrielFilter> out;
    for (std::uint32_t bits = 0; bits < (1u << count); ++bits) {
        std::vector<RightIdeal> members;
        for (int i = 0; i < count; ++i)
            if (bits >> i & 1) members.push_back(lattice[i]);
        GabrielFilter candidate{ring, Provenance::custom, members};
        // Only normalized upward-closed families count once.
        if (check_axioms_over(candidate, lattice).ok) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end(), [](const GabrielFilter& a, const GabrielFilter& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                            b.members.begin(), b.members.end(), canonical_less);
    });
    return out;
}

std::vector<RightIdeal> minimal_members(const GabrielFilter& filter) {
    std::vector<RightIdeal> out;
    for (RightIdeal i : filter.members) {
        bool minimal = true;
        for (RightIdeal j : filter.members)
            if (j != i && (j & i) == j) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

}  // namespace torsionkit
