#include <doctest.h>

#include <random>

#include "capset/caps.hpp"
#include "capset/groups.hpp"
#include "capset/linear.hpp"
#include "capset/orbits.hpp"

using namespace capset;

namespace {

AffineMap random_affine(const Geometry& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pt(0, g.num_points() - 1);
    AffineMap m;
    do {
        for (int i = 0; i < g.n(); ++i) m.lin.rows[i] = static_cast<uint8_t>(pt(rng));
    } while (determinant(g, m.lin) == 0);
    m.t = static_cast<uint8_t>(pt(rng));
    return m;
}

}  // namespace

TEST_CASE("compose, inverse and determinant") {
    const Geometry& g4 = Geometry::of(4);
    std::mt19937_64 rng(11);
    AffineMap id = affine_identity(g4);
    for (int trial = 0; trial < 200; ++trial) {
        AffineMap a = random_affine(g4, rng), b = random_affine(g4, rng);
        CHECK(compose(g4, a, inverse(g4, a)) == id);
        CHECK(compose(g4, inverse(g4, a), a) == id);
        // composition acts as a(b(x))
        for (int p = 0; p < 81; p += 17)
            CHECK(apply_point(g4, compose(g4, a, b), p) ==
                  apply_point(g4, a, apply_point(g4, b, p)));
        int da = determinant(g4, a.lin), db = determinant(g4, b.lin);
        CHECK(determinant(g4, compose(g4, a, b).lin) == (da * db) % 3);
    }
}

TEST_CASE("group orders by formula and enumeration") {
    CHECK(gl_order(1) == 2);
    CHECK(gl_order(2) == 48);
    CHECK(gl_order(3) == 11232);
    CHECK(gl_order(4) == 24261120);
    CHECK(aff_order(4) == 1965150720ull);

    for (int n = 1; n <= 3; ++n) {
        uint64_t count = 0;
        for_each_gl(Geometry::of(n), [&](const LinearMap&) {
            ++count;
            return true;
        });
        CHECK(count == gl_order(n));
    }
}

TEST_CASE("gl stream is deterministic, invertible-only and lexicographic") {
    const Geometry& g2 = Geometry::of(2);
    std::vector<std::array<uint8_t, 4>> rows;
    for_each_gl(g2, [&](const LinearMap& m) {
        CHECK(determinant(g2, m) != 0);
        rows.push_back(m.rows);
        return true;
    });
    CHECK(rows.size() == 48);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1] < rows[i]);

    // sharded variant covers the same stream
    uint64_t total = 0;
    for (int first = 1; first < g2.num_points(); ++first)
        for_each_gl_with_first_row(g2, first, [&](const LinearMap&) {
            ++total;
            return true;
        });
    CHECK(total == 48);
}

TEST_CASE("apply basics") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    CHECK(apply_set(g4, affine_identity(g4), S) == S);

    AffineMap shift = affine_identity(g4);
    shift.t = 5;
    CHECK(anchor_of(g4, apply_set(g4, shift, S)).anchor == 5);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        AffineMap m = random_affine(g4, rng);
        auto perm = point_perm(g4, m);
        for (size_t li = trial; li < g4.lines().size(); li += 97) {
            auto ln = g4.lines()[li];
            CHECK(g4.is_line(perm[ln[0]], perm[ln[1]], perm[ln[2]]));
        }
    }
}

TEST_CASE("affine maps preserve caps (randomized and exhaustive on the stabilizer)") {
    const Geometry& g4 = Geometry::of(4);
    const auto& caps = anchor0_caps(g4);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<size_t> pick(0, caps.size() - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        AffineMap m = random_affine(g4, rng);
        CHECK(is_cap(g4, apply_set(g4, m, caps[pick(rng)])));
    }

    PointSet S = canonical_cap(g4);
    auto stab = setwise_stabilizer(g4, S, Ambient::GL);
    REQUIRE(stab.size() == 2880);
    for (const auto& m : stab) CHECK(apply_set(g4, m, S) == S);
}

TEST_CASE("setwise stabilizers") {
    const Geometry& g2 = Geometry::of(2);
    // a single point {0} under GL is the whole GL
    CHECK(setwise_stabilizer(g2, PointSet::single(0), Ambient::GL).size() == 48);
    // the full universe is fixed by everything
    CHECK(setwise_stabilizer(g2, g2.universe(), Ambient::GL).size() == 48);
    CHECK(setwise_stabilizer(g2, g2.universe(), Ambient::Aff).size() == 432);

    // frame DFS agrees with a brute filter over the full GL stream
    PointSet c = enumerate_maximal_caps(g2, 1).front();
    auto frame = setwise_stabilizer(g2, c, Ambient::GL);
    std::vector<uint64_t> frame_keys, brute_keys;
    for (const auto& m : frame) frame_keys.push_back(pack_map(m));
    for_each_gl(g2, [&](const LinearMap& m) {
        if (apply_set(g2, {m, 0}, c) == c) brute_keys.push_back(pack_map({m, 0}));
        return true;
    });
    std::sort(frame_keys.begin(), frame_keys.end());
    std::sort(brute_keys.begin(), brute_keys.end());
    CHECK(frame_keys == brute_keys);
}

TEST_CASE("stabilizer of S is a closed group of order 2880") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    auto grp = make_group(g4, setwise_stabilizer(g4, S, Ambient::GL));
    REQUIRE(grp.order() == 2880);
    CHECK(is_closed_group(grp));

    // determinant is multiplicative across the whole subgroup
    std::vector<int> dets;
    dets.reserve(grp.order());
    for (const auto& m : grp.elems) dets.push_back(determinant(g4, m.lin));
    for (size_t i = 0; i < grp.order(); i += 40)
        for (size_t j = 0; j < grp.order(); ++j)
            CHECK(determinant(g4, compose(g4, grp.elems[i], grp.elems[j]).lin) ==
                  (dets[i] * dets[j]) % 3);
}

TEST_CASE("orbits") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    auto orbit = orbit_of_set(g4, S, gl_generators(g4));
    CHECK(orbit.size() == 8424);
    CHECK(orbit.size() * 2880 == gl_order(4));

    // the orbit under the stabilizer itself is a fixed point
    auto stab = setwise_stabilizer(g4, S, Ambient::GL);
    auto self_orbit = orbit_of_set(g4, S, stab);
    CHECK(self_orbit.size() == 1);
    CHECK(self_orbit.front() == S);

    const Geometry& g3 = Geometry::of(3);
    auto caps3 = enumerate_maximal_caps(g3, 1);
    auto orbit3 = orbit_of_set(g3, caps3.front(), aff_generators(g3));
    CHECK(orbit3.size() == caps3.size());
    CHECK(orbit3 == caps3);  // both canonically sorted
}

TEST_CASE("transporters") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    PointSet T = translate_set(g4, anchor0_caps(g4)[137], 5);

    auto w = transporter(g4, S, T, Ambient::Aff);
    REQUIRE(w.has_value());
    CHECK(apply_set(g4, *w, S) == T);

    CHECK(transporter(g4, S, S, Ambient::GL)->lin == identity_map(g4));

    // a non-cap 20-set is unreachable
    PointSet bad = S;
    bad.reset(S.to_indices().back());
    auto line = Geometry::of(4).lines().front();
    bad.set(S.test(line[0]) ? 79 : line[0]);
    if (bad.size() == 20 && !is_cap(g4, bad))
        CHECK_FALSE(transporter(g4, S, bad, Ambient::Aff).has_value());
}

TEST_CASE("trit serialization round trips") {
    const Geometry& g4 = Geometry::of(4);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        AffineMap m = random_affine(g4, rng);
        CHECK(affine_from_trits(g4, to_trits(g4, m)) == m);
        CHECK(linear_from_trits(g4, to_trits(g4, m.lin)) == m.lin);
    }
    CHECK(to_trits(g4, identity_map(g4)) == "1000010000100001");
    CHECK_THROWS_AS(linear_from_trits(g4, "123"), std::invalid_argument);
    CHECK_THROWS_AS(linear_from_trits(g4, "3000010000100001"), std::invalid_argument);
}
