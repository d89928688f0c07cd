#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionkit/ideal.hpp"

using namespace torsionkit;

namespace {

const Caps kCaps;

std::vector<RingPtr> small_corpus() {
    return {make_zmod(2),  make_zmod(3),
            make_zmod(4),  make_zmod(6),
            make_zmod(8),  make_product(make_zmod(2), make_zmod(2)),
            make_product(make_zmod(2), make_zmod(3)),
            make_triangular_ring(make_zmod(2), 2),
            make_matrix_ring(make_zmod(2), 2)};
}

}  // namespace

TEST_CASE("hex round trip") {
    CHECK(ideal_to_hex(0) == "0x0");
    CHECK(ideal_to_hex(0x5) == "0x5");
    CHECK(ideal_to_hex(0xab) == "0xab");
    CHECK(ideal_from_hex("0xab") == 0xab);
    CHECK(ideal_from_hex("f") == 0xf);
    CHECK_THROWS_AS(ideal_from_hex("0xzz"), UsageError);
    CHECK_THROWS_AS(ideal_from_hex(""), UsageError);
}

TEST_CASE("ideal enumeration agrees with the full subset scan") {
    for (auto& ring : small_corpus()) {
        auto fast = enumerate_right_ideals(*ring);
        auto slow = oracle::all_right_ideals(*ring);
        REQUIRE(fast.size() == slow.size());
        std::vector<RightIdeal> slow_masks;
        for (auto& s : slow) slow_masks.push_back(oracle::subset_to_mask(s));
        std::sort(slow_masks.begin(), slow_masks.end());
        std::vector<RightIdeal> fast_sorted = fast;
        std::sort(fast_sorted.begin(), fast_sorted.end());
        CHECK(fast_sorted == slow_masks);
        // Canonical output order: by (popcount, mask).
        CHECK(std::is_sorted(fast.begin(), fast.end(), [](RightIdeal a, RightIdeal b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        }));
        for (RightIdeal i : fast) CHECK(is_right_ideal(*ring, i));
    }
}

TEST_CASE("known ideal counts") {
    CHECK(enumerate_right_ideals(*make_zmod(4)).size() == 3);
    CHECK(enumerate_right_ideals(*make_zmod(6)).size() == 4);
    CHECK(enumerate_right_ideals(*make_zmod(2)).size() == 2);
    CHECK(enumerate_right_ideals(*make_product(make_zmod(2), make_zmod(3))).size() == 4);
    // Upper triangular 2x2 over F2: 7 right ideals; full 2x2: 5.
    CHECK(enumerate_right_ideals(*make_triangular_ring(make_zmod(2), 2)).size() == 7);
    CHECK(enumerate_right_ideals(*make_matrix_ring(make_zmod(2), 2)).size() == 5);
}

TEST_CASE("zmod4 lattice is {0} < {0,2} < R") {
    auto ideals = enumerate_right_ideals(*make_zmod(4));
    CHECK(ideals[0] == 0b0001);
    CHECK(ideals[1] == 0b0101);
    CHECK(ideals[2] == 0b1111);
}

TEST_CASE("quotient ideals match the definition and known values") {
    auto z4 = make_zmod(4);
    CHECK(quotient_ideal(*z4, 0b0101, 2) == 0b1111);  // ({0,2} : 2) = R
    CHECK(quotient_ideal(*z4, 0b0101, 1) == 0b0101);  // ({0,2} : 1) = {0,2}
    auto z6 = make_zmod(6);
    CHECK(quotient_ideal(*z6, 0b001001, 2) == 0b001001);  // ({0,3} : 2) = {0,3}
    for (auto& ring : small_corpus()) {
        for (RightIdeal ideal : enumerate_right_ideals(*ring)) {
            CHECK(quotient_ideal(*ring, ideal, ring->zero()) == ring->full_mask());
            for (int r = 0; r < ring->order(); ++r) {
                RightIdeal q = quotient_ideal(*ring, ideal, r);
                CHECK(is_right_ideal(*ring, q));
                if (ideal_contains(ideal, r)) CHECK(q == ring->full_mask());
            }
        }
    }
}

TEST_CASE("essentiality agrees with the all-ideals definition") {
    for (auto& ring : small_corpus()) {
        auto all = oracle::all_right_ideals(*ring);
        for (RightIdeal ideal : enumerate_right_ideals(*ring))
            CHECK(is_essential(*ring, ideal) ==
                  oracle::subset_is_essential(*ring, oracle::mask_to_subset(ideal), all));
    }
}

TEST_CASE("known essentiality values in zmod4 and zmod6") {
    auto z4 = make_zmod(4);
    CHECK(is_essential(*z4, 0b0101));
    CHECK_FALSE(is_essential(*z4, 0b0001));
    CHECK(is_essential(*z4, 0b1111));
    auto z6 = make_zmod(6);
    CHECK_FALSE(is_essential(*z6, 0b010101));  // 2Z/6 misses 3Z/6
}

TEST_CASE("density agrees with the direct quantifier scan") {
    for (auto& ring : small_corpus())
        for (RightIdeal ideal : enumerate_right_ideals(*ring))
            CHECK(is_dense(*ring, ideal) ==
                  oracle::subset_is_dense(*ring, oracle::mask_to_subset(ideal)));
}

TEST_CASE("known density values") {
    auto z4 = make_zmod(4);
    CHECK(is_dense(*z4, z4->full_mask()));
    CHECK_FALSE(is_dense(*z4, 0b0101));  // r=1, s=2 has no witness
    CHECK_FALSE(is_dense(*z4, 0b0001));
}

TEST_CASE("dense implies essential across the corpus") {
    for (auto& ring : small_corpus())
        for (RightIdeal ideal : enumerate_right_ideals(*ring))
            if (is_dense(*ring, ideal)) CHECK(is_essential(*ring, ideal));
}

TEST_CASE("in the zero ring every ideal is dense and essential") {
    RingTables t;
    t.name = "trivial";
    t.order = 1;
    t.add = {0};
    t.mul = {0};
    auto ring = validate_ring(t);
    auto ideals = enumerate_right_ideals(*ring);
    REQUIRE(ideals.size() == 1);
    CHECK(is_dense(*ring, ideals[0]));
    CHECK(is_essential(*ring, ideals[0]));
}

TEST_CASE("enumeration is independent of generator order") {
    for (auto& ring : small_corpus()) {
        auto ideals = enumerate_right_ideals(*ring);
        // Rebuild each ideal from its own elements in reverse order.
        for (RightIdeal ideal : ideals) {
            auto elems = ideal_elements(ideal);
            std::reverse(elems.begin(), elems.end());
            CHECK(generated_right_ideal(*ring, elems) == ideal);
        }
    }
}
