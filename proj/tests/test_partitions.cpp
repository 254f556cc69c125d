#include <doctest.h>

#include <random>
#include <unordered_set>

#include "capset/caps.hpp"
#include "capset/groups.hpp"
#include "capset/orbits.hpp"
#include "capset/partitions.hpp"

using namespace capset;

namespace {

struct PFixture {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    DisjointClassification dc = classify_disjoint_caps(g4, S, 2);
    SPartitions sp = partitions_containing(g4, S, dc, 2);

    PointSet first_cap_of_class(int k) const {
        for (size_t i = 0; i < dc.caps.size(); ++i)
            if (dc.split_count[i] == k) return dc.caps[i];
        return {};
    }
};

PFixture& fx() {
    static PFixture f;
    return f;
}

}  // namespace

TEST_CASE("disjoint caps share the anchor and count 198") {
    auto& f = fx();
    CHECK(f.dc.caps.size() == 198);
    for (const auto& c : f.dc.caps) {
        CHECK(c.disjoint(f.S));
        CHECK(anchor_of(f.g4, c).anchor == 0);
    }
    CHECK(f.dc.one == 36);
    CHECK(f.dc.two == 90);
    CHECK(f.dc.six == 72);

    // translate everything: the census is unchanged
    PointSet moved = translate_set(f.g4, f.S, 13);
    CHECK(disjoint_caps(f.g4, moved, 2).size() == 198);
}

TEST_CASE("complete_to_partitions honors the completability class") {
    auto& f = fx();
    for (int k : {1, 2, 6}) {
        PointSet c = f.first_cap_of_class(k);
        auto parts = complete_to_partitions(f.g4, f.S, c);
        CHECK(static_cast<int>(parts.size()) == k);
        for (const auto& p : parts) {
            CHECK(p.well_formed(f.g4));
            bool has_s = false, has_c = false;
            for (const auto& b : p.blocks) {
                has_s |= b == f.S;
                has_c |= b == c;
            }
            CHECK(has_s);
            CHECK(has_c);
        }
    }
    // non-disjoint input is rejected
    CHECK_THROWS_AS(complete_to_partitions(f.g4, f.S, f.S), std::invalid_argument);
}

TEST_CASE("the 216 partitions and their structure") {
    auto& f = fx();
    CHECK(f.sp.parts.size() == 216);
    CHECK(f.sp.e1 == 36);
    CHECK(f.sp.e2 == 180);

    std::unordered_set<PointSet, PointSetHash> covered;
    for (size_t i = 0; i < f.sp.parts.size(); ++i) {
        const auto& p = f.sp.parts[i];
        int sixes = 0, completable = 0;
        for (int b = 0; b < 4; ++b) {
            if (p.blocks[b] == f.S) continue;
            covered.insert(p.blocks[b]);
            int k = f.dc.class_of(p.blocks[b]);
            if (k == 6)
                ++sixes;
            else
                ++completable;
        }
        CHECK(sixes == 2);
        CHECK(completable == 1);
        CHECK(f.sp.cls[i] == f.dc.class_of(p.blocks[f.sp.completable_block[i]]));
    }
    CHECK(covered.size() == 198);  // every disjoint cap appears somewhere
}

TEST_CASE("pair counts") {
    auto& f = fx();
    PointSet one = f.first_cap_of_class(1);
    PointSet six = f.first_cap_of_class(6);
    CHECK(pair_count(f.g4, f.S, one) == 1);
    CHECK(pair_count(f.g4, one, f.S) == 1);
    CHECK(pair_count(f.g4, f.S, six) == 6);
    CHECK_THROWS_AS(pair_count(f.g4, f.S, f.S), std::invalid_argument);

    auto [e1, e2] = six_profile(f.g4, f.S, six, f.sp);
    CHECK(e1 == 1);
    CHECK(e2 == 5);
}

TEST_CASE("pair structure matches the class") {
    auto& f = fx();
    for (size_t i = 0; i < f.sp.parts.size(); i += 27) {
        auto ps = pair_structure(f.g4, f.sp.parts[i]);
        CHECK(ps.counts[0] == ps.counts[1]);
        CHECK(ps.counts[0] == f.sp.cls[i]);
    }
}

TEST_CASE("transporter_split identity case sums to the pair stabilizer order") {
    auto& f = fx();
    auto G = make_group(f.g4, setwise_stabilizer(f.g4, f.S, Ambient::GL));
    int e1_idx = -1, e2_idx = -1;
    for (int i = 0; i < static_cast<int>(f.sp.parts.size()); ++i) {
        if (f.sp.cls[i] == 1 && e1_idx < 0) e1_idx = i;
        if (f.sp.cls[i] == 2 && e2_idx < 0) e2_idx = i;
    }
    auto [a1, s1] = transporter_split(f.g4, G, f.sp, e1_idx, e1_idx);
    CHECK(a1 == 40);
    CHECK(s1 == 40);
    auto [a2, s2] = transporter_split(f.g4, G, f.sp, e2_idx, e2_idx);
    CHECK(a2 == 8);
    CHECK(s2 == 8);
    CHECK_THROWS_AS(transporter_split(f.g4, G, f.sp, e1_idx, e2_idx), std::invalid_argument);
}

TEST_CASE("partition transporters find witnesses within a class and refuse across") {
    auto& f = fx();
    int e1_idx = -1, e2_idx = -1, e1_other = -1;
    for (int i = 0; i < static_cast<int>(f.sp.parts.size()); ++i) {
        if (f.sp.cls[i] == 1 && e1_idx < 0)
            e1_idx = i;
        else if (f.sp.cls[i] == 1 && e1_other < 0)
            e1_other = i;
        if (f.sp.cls[i] == 2 && e2_idx < 0) e2_idx = i;
    }

    // same class, different anchors
    std::mt19937_64 rng(5);
    AffineMap shift = affine_identity(f.g4);
    shift.t = 23;
    auto perm = point_perm(f.g4, shift);
    Partition4 moved = apply_to_partition(f.g4, perm, f.sp.parts[e1_other]);
    auto w = transporter_partitions(f.g4, f.sp.parts[e1_idx], moved);
    REQUIRE(w.has_value());
    auto wperm = point_perm(f.g4, *w);
    CHECK(apply_to_partition(f.g4, wperm, f.sp.parts[e1_idx]) == moved);

    CHECK_FALSE(transporter_partitions(f.g4, f.sp.parts[e1_idx], f.sp.parts[e2_idx]).has_value());
}

TEST_CASE("low dimension partitions") {
    auto ld2 = low_dim_partitions(Geometry::of(2));
    CHECK(ld2.num_caps == 54);
    CHECK(ld2.num_partitions == 27);
    CHECK(ld2.every_cap_in_unique_partition);
    CHECK(ld2.single_affine_orbit);

    // Prop 2.1: the complement of a maximal cap (minus the anchor) is a cap
    const Geometry& g2 = Geometry::of(2);
    for (const auto& c : enumerate_maximal_caps(g2, 1)) {
        int anchor = anchor_of(g2, c).anchor;
        PointSet rest = g2.universe() - c;
        rest.reset(anchor);
        CHECK(is_cap(g2, rest));
        CHECK(anchor_of(g2, rest).anchor == anchor);
    }

    auto ld3 = low_dim_partitions(Geometry::of(3));
    CHECK(ld3.num_caps == 2106);
    CHECK(ld3.num_partitions == 702);
    CHECK(ld3.every_cap_in_unique_partition);
    CHECK(ld3.single_affine_orbit);
}

TEST_CASE("partition canonical form and application") {
    auto& f = fx();
    Partition4 p = f.sp.parts[0];
    CHECK(p.well_formed(f.g4));
    for (int b = 1; b < 4; ++b) CHECK(PointSet::lex_less(p.blocks[b - 1], p.blocks[b]));

    AffineMap shift = affine_identity(f.g4);
    shift.t = 9;
    auto perm = point_perm(f.g4, shift);
    Partition4 q = apply_to_partition(f.g4, perm, p);
    CHECK(q.anchor == 9);
    CHECK(q.well_formed(f.g4));
    CHECK_FALSE(q == p);
}
