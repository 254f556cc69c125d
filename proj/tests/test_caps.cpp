#include <doctest.h>

#include "capset/caps.hpp"
#include "capset/verify.hpp"

using namespace capset;

TEST_CASE("cap predicates") {
    const Geometry& g4 = Geometry::of(4);
    CHECK(is_cap(g4, PointSet{}));
    auto line = g4.lines().front();
    CHECK_FALSE(is_cap(g4, PointSet::from_indices({line[0], line[1], line[2]})));
    PointSet S = canonical_cap(g4);
    CHECK(is_cap(g4, S));
    CHECK(is_complete_cap(g4, S));
    CHECK_FALSE(is_complete_cap(Geometry::of(1), PointSet{}));
    CHECK_THROWS_AS(is_complete_cap(g4, PointSet::from_indices({line[0], line[1], line[2]})),
                    std::invalid_argument);
}

TEST_CASE("a complete 8-cap exists in AG(3,3)") {
    const Geometry& g3 = Geometry::of(3);
    PointSet found;
    for_each_cap(g3, g3.universe(), 8, -1, [&](PointSet s) {
        if (is_complete_cap(g3, s)) {
            found = s;
            return false;
        }
        return true;
    });
    REQUIRE(found.size() == 8);
    CHECK(is_cap(g3, found));
    CHECK(is_complete_cap(g3, found));
    CHECK(found.size() < 9);
}

TEST_CASE("maximal cap sizes are found by search") {
    CHECK(max_cap_size(Geometry::of(1)) == 2);
    CHECK(max_cap_size(Geometry::of(2)) == 4);
    CHECK(max_cap_size(Geometry::of(3)) == 9);
    CHECK(max_cap_size(Geometry::of(4)) == 20);
}

TEST_CASE("AG(2,3) maximal caps against a brute-force oracle") {
    const Geometry& g2 = Geometry::of(2);
    // oracle: filter all 4-subsets of the 9 cells
    int brute = 0;
    for (int mask = 0; mask < (1 << 9); ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        PointSet s;
        for (int i = 0; i < 9; ++i)
            if (mask & (1 << i)) s.set(i);
        if (is_cap(g2, s)) ++brute;
    }
    CHECK(brute == 54);
    auto caps = enumerate_maximal_caps(g2, 1);
    CHECK(caps.size() == 54);
}

TEST_CASE("anchor-0 enumeration and the canonical cap") {
    const Geometry& g4 = Geometry::of(4);
    const auto& caps = anchor0_caps(g4);
    CHECK(caps.size() == 8424);
    PointSet S = canonical_cap(g4);
    CHECK(S == caps.front());
    CHECK(S.to_indices() == canonical_cap_fixture());
    for (size_t i = 1; i < 50; ++i) CHECK(PointSet::lex_less(caps[i - 1], caps[i]));

    // every enumerated cap is a complete anchored cap
    for (size_t i = 0; i < caps.size(); i += 997) {
        CHECK(is_cap(g4, caps[i]));
        CHECK(is_complete_cap(g4, caps[i]));
        CHECK(anchor_of(g4, caps[i]).anchor == 0);
    }
}

TEST_CASE("cap sums") {
    const Geometry& g3 = Geometry::of(3);
    auto caps3 = enumerate_maximal_caps(g3, 1);
    CHECK(caps3.size() == 2106);
    for (size_t i = 0; i < caps3.size(); i += 211) CHECK(cap_sum(g3, caps3[i]) == 0);
    CHECK(cap_sum(g3, PointSet{}) == 0);
    CHECK(cap_sum(g3, PointSet::single(17)) == 17);
}

TEST_CASE("anchors decompose maximal caps into pairs") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    auto d = anchor_of(g4, S);
    CHECK(d.anchor == 0);
    CHECK(d.pairs.size() == 10);
    for (auto [p, q] : d.pairs) {
        CHECK(g4.is_line(d.anchor, p, q));
        CHECK(S.test(p));
        CHECK(S.test(q));
    }

    // translation equivariance over every translation
    for (int a = 0; a < g4.num_points(); ++a)
        CHECK(anchor_of(g4, translate_set(g4, S, a)).anchor == a);

    const Geometry& g2 = Geometry::of(2);
    for (const auto& c : enumerate_maximal_caps(g2, 1)) {
        auto d2 = anchor_of(g2, c);
        CHECK(d2.pairs.size() == 2);
        CHECK_FALSE(c.test(d2.anchor));
        for (auto [p, q] : d2.pairs) CHECK(g2.is_line(d2.anchor, p, q));
    }

    CHECK_THROWS_AS(anchor_of(Geometry::of(3), enumerate_maximal_caps(Geometry::of(3), 1)[0]),
                    std::invalid_argument);
    CHECK_THROWS_AS(anchor_of(Geometry::of(1), PointSet::from_indices({0, 1})),
                    std::invalid_argument);
    // a 4-point set whose points do not pair through the would-be anchor
    CHECK_THROWS_AS(anchor_of(g4, PointSet::from_indices({1, 2, 3, 9})), std::domain_error);
}

TEST_CASE("completion counts") {
    const Geometry& g4 = Geometry::of(4);
    const Geometry& g3 = Geometry::of(3);
    const Geometry& g2 = Geometry::of(2);
    PointSet S = canonical_cap(g4);
    CHECK(completion_count(g4, S, 0) == 10);
    CHECK_THROWS_AS(completion_count(g4, S, 1), std::invalid_argument);

    long long total = 0;
    (g4.universe() - S).for_each([&](int p) { total += completion_count(g4, S, p); });
    CHECK(total == 190);  // every pair of cap points has exactly one completion

    auto cap3 = enumerate_maximal_caps(g3, 1).front();
    (g3.universe() - cap3).for_each([&](int p) { CHECK(completion_count(g3, cap3, p) == 2); });

    auto cap2 = enumerate_maximal_caps(g2, 1).front();
    CHECK(completion_count(g2, cap2, anchor_of(g2, cap2).anchor) == 2);
}

TEST_CASE("caps_with_anchor are the translates") {
    const Geometry& g4 = Geometry::of(4);
    const auto& base = anchor0_caps(g4);
    CHECK(caps_with_anchor(g4, 0) == base);
    auto shifted = caps_with_anchor(g4, 7);
    CHECK(shifted.size() == 8424);
    for (size_t i = 0; i < shifted.size(); i += 487)
        CHECK(anchor_of(g4, shifted[i]).anchor == 7);
    // translating back recovers the anchor-0 family
    std::vector<PointSet> back;
    for (const auto& c : shifted) back.push_back(translate_set(g4, c, g4.neg(7)));
    std::sort(back.begin(), back.end(), PointSetLexLess{});
    CHECK(back == base);
}

TEST_CASE("full n=4 enumeration is sorted and complete") {
    const Geometry& g4 = Geometry::of(4);
    auto all = enumerate_maximal_caps(g4, 2);
    CHECK(all.size() == 8424u * 81);
    for (size_t i = 1; i < all.size(); i += 4999)
        CHECK(PointSet::lex_less(all[i - 1], all[i]));
}

TEST_CASE("AG(3,3) maximal caps lie in unique partitions (spot check)") {
    const Geometry& g3 = Geometry::of(3);
    auto caps = enumerate_maximal_caps(g3, 1);
    for (size_t i = 0; i < caps.size(); i += 401) {
        int splits = 0;
        for_each_cap(g3, g3.universe() - caps[i], 9, (g3.universe() - caps[i]).lowest(),
                     [&](PointSet b) {
                         if (is_cap(g3, (g3.universe() - caps[i]) - b)) ++splits;
                         return true;
                     });
        CHECK(splits == 1);
    }
}
