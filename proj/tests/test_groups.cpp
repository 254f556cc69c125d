#include <doctest.h>

#include "capset/caps.hpp"
#include "capset/errors.hpp"
#include "capset/group_reports.hpp"
#include "capset/groups.hpp"
#include "capset/orbits.hpp"
#include "capset/partitions.hpp"

using namespace capset;

namespace {

struct SFixture {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    MatrixGroup G = make_group(g4, setwise_stabilizer(g4, S, Ambient::GL));
    DisjointClassification dc = classify_disjoint_caps(g4, S, 2);
    SPartitions sp = partitions_containing(g4, S, dc, 2);

    int first_of_class(int cls) const {
        for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i)
            if (sp.cls[i] == cls) return i;
        return -1;
    }
};

SFixture& fixture() {
    static SFixture f;
    return f;
}

}  // namespace

TEST_CASE("generated subgroups and element orders") {
    auto& f = fixture();
    const AffineMap* order5 = nullptr;
    for (const auto& m : f.G.elems)
        if (element_order(f.g4, m) == 5) {
            order5 = &m;
            break;
        }
    REQUIRE(order5 != nullptr);
    auto z5 = generated_subgroup(f.g4, {*order5});
    CHECK(z5.order() == 5);
    CHECK(is_closed_group(z5));
    CHECK(is_simple_group(z5));  // prime cyclic

    auto gens = greedy_generators(f.G);
    CHECK(generated_subgroup(f.g4, gens).order() == f.G.order());
    CHECK(gens.size() <= 8);
}

TEST_CASE("fingerprints of the section-4 groups") {
    auto& f = fixture();
    auto H = blockwise_partition_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(1)]);
    auto K = blockwise_partition_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(2)]);
    REQUIRE(H.order() == 40);
    REQUIRE(K.order() == 8);

    auto fpH = fingerprint(H);
    CHECK_FALSE(fpH.abelian);
    CHECK(fpH.element_order_histogram[20] == 8);
    CHECK(cyclic_subgroup_count(H, 20) == 1);
    CHECK(fpH.determinant_split[1] == 40);

    auto fpK = fingerprint(K);
    CHECK(fpK.abelian);
    CHECK(fpK.element_order_histogram[1] == 1);
    CHECK(fpK.element_order_histogram[2] == 3);
    CHECK(fpK.element_order_histogram[4] == 4);
    CHECK(fpK.derived_subgroup_order == 1);

    GroupFingerprint trivial = fingerprint(make_group(f.g4, {affine_identity(f.g4)}));
    CHECK(trivial.order == 1);
    CHECK(trivial.abelian);
    CHECK(trivial.center_order == 1);
}

TEST_CASE("fingerprint refuses oversized groups") {
    const Geometry& g3 = Geometry::of(3);
    auto whole_gl = setwise_stabilizer(g3, PointSet::single(0), Ambient::GL);
    REQUIRE(whole_gl.size() == 11232);
    CHECK_THROWS_AS(fingerprint(make_group(g3, whole_gl)), capacity_error);
}

TEST_CASE("isomorphism testing on reference groups") {
    TableGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
    TableGroup z8 = cyclic_group(8);
    CHECK_FALSE(find_isomorphism(z4xz2, z8).has_value());
    CHECK(find_isomorphism(z4xz2, direct_product(cyclic_group(2), cyclic_group(4))).has_value());

    // the three nonabelian Z20 x| Z2 are pairwise distinct
    TableGroup a = semidirect_cyclic(20, 2, 9);
    TableGroup b = semidirect_cyclic(20, 2, 11);
    TableGroup c = semidirect_cyclic(20, 2, 19);
    CHECK_FALSE(find_isomorphism(a, b).has_value());
    CHECK_FALSE(find_isomorphism(a, c).has_value());
    CHECK_FALSE(find_isomorphism(b, c).has_value());
    CHECK(find_isomorphism(a, a).has_value());

    // isomorphic groups share fingerprints
    auto fa = fingerprint(a);
    TableGroup a2 = semidirect_cyclic(20, 2, 9);
    auto fa2 = fingerprint(a2);
    CHECK(fa.order == fa2.order);
    CHECK(fa.element_order_histogram == fa2.element_order_histogram);
    CHECK(fa.center_order == fa2.center_order);
    CHECK(fa.derived_subgroup_order == fa2.derived_subgroup_order);
}

TEST_CASE("automorphism machinery") {
    TableGroup z2xz2 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(automorphisms(z2xz2).size() == 6);  // GL(2,2)
    TableGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
    CHECK(automorphisms(z4xz2).size() == 8);
}

TEST_CASE("matrix-group tables agree with compositions") {
    auto& f = fixture();
    auto K = blockwise_partition_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(2)]);
    TableGroup t = table_from_matrix_group(K);
    CHECK(t.order == 8);
    CHECK(matches_z4xz2(K));
    auto orders = t.element_orders();
    int have4 = 0;
    for (int o : orders) have4 += (o == 4);
    CHECK(have4 == 4);
}

TEST_CASE("semidirect reference matches for the paper's labels") {
    auto& f = fixture();
    auto H = blockwise_partition_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(1)]);
    auto matches = match_against_z20_semidirect_z2(H);
    REQUIRE(matches.size() == 3);
    int matched = 0;
    for (const auto& m : matches) matched += m.matched;
    CHECK(matched == 1);
    CHECK(matches[0].reference == "Z20:9:Z2");
    CHECK(matches[0].matched);

    auto P16 = partition_collection_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(2)]);
    REQUIRE(P16.order() == 16);
    auto m16 = match_against_z4_semidirect_z4(P16);
    CHECK_FALSE(m16[0].matched);  // abelian Z4 x Z4 refuted
    CHECK(m16[1].matched);        // nontrivial action
}

TEST_CASE("normal closures and simplicity") {
    auto& f = fixture();
    // an abelian 8-group is far from simple
    auto K = blockwise_partition_stabilizer(f.g4, f.G, f.sp.parts[f.first_of_class(2)]);
    CHECK_FALSE(is_simple_group(K));
    // normal closure of anything inside an abelian group is the cyclic bit it generates
    const AffineMap* x = nullptr;
    for (const auto& m : K.elems)
        if (element_order(f.g4, m) == 4) {
            x = &m;
            break;
        }
    REQUIRE(x != nullptr);
    CHECK(normal_closure(K, {*x}).order() == 4);
}
