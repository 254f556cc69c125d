#include <doctest.h>

#include <set>
#include <stdexcept>

#include "capset/gf3.hpp"
#include "capset/pointset.hpp"

using namespace capset;

TEST_CASE("point indices follow the big-endian trit encoding") {
    const Geometry& g4 = Geometry::of(4);
    CHECK(g4.point_from_coords({0, 0, 0, 0}) == 0);
    CHECK(g4.point_from_coords({1, 1, 1, 1}) == 40);
    CHECK(g4.point_from_coords({2, 2, 2, 2}) == 80);
    CHECK(Geometry::of(2).point_from_coords({2, 1}) == 7);

    for (int p = 0; p < g4.num_points(); ++p) {
        auto c = g4.coords_of(p);
        CHECK(g4.point_from_coords({c[0], c[1], c[2], c[3]}) == p);
    }

    CHECK_THROWS_AS(g4.point_from_coords({0, 0, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(g4.point_from_coords({0, 0, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(g4.point_from_coords({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("third_point completes lines") {
    const Geometry& g4 = Geometry::of(4);
    CHECK(g4.third_point(0, 40) == 80);
    CHECK(Geometry::of(2).third_point(1, 2) == 0);
    // (1,0,2,1) + (1,1,0,2) -> (1,2,1,0)
    int p = g4.point_from_coords({1, 0, 2, 1});
    int q = g4.point_from_coords({1, 1, 0, 2});
    CHECK(g4.third_point(p, q) == g4.point_from_coords({1, 2, 1, 0}));
    CHECK_THROWS_AS(g4.third_point(5, 5), std::invalid_argument);
}

TEST_CASE("third_point is the unique line completion (exhaustive, n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        const Geometry& g = Geometry::of(n);
        for (int p = 0; p < g.num_points(); ++p)
            for (int q = 0; q < g.num_points(); ++q) {
                if (p == q) continue;
                int r = g.third_point(p, q);
                CHECK(r != p);
                CHECK(r != q);
                CHECK(g.third_point(q, p) == r);
                CHECK(g.third_point(p, r) == q);
                CHECK(g.is_line(p, q, r));
                for (int s = 0; s < g.num_points(); ++s)
                    if (s != r) CHECK_FALSE(g.is_line(p, q, s));
            }
    }
}

TEST_CASE("is_line basics") {
    const Geometry& g4 = Geometry::of(4);
    CHECK(g4.is_line(0, 40, 80));
    CHECK_FALSE(g4.is_line(0, 0, 0));
    CHECK_FALSE(g4.is_line(0, 40, 40));
}

TEST_CASE("line enumeration matches the closed form and a brute triple scan") {
    int expected[5] = {0, 1, 12, 117, 1080};
    for (int n = 1; n <= 4; ++n) {
        const Geometry& g = Geometry::of(n);
        CHECK(g.num_lines() == expected[n]);
        CHECK(g.num_lines() == (g.num_points() / 3) * (g.num_points() - 1) / 2);

        // independent oracle: scan unordered triples for zero sums
        int brute = 0;
        for (int a = 0; a < g.num_points(); ++a)
            for (int b = a + 1; b < g.num_points(); ++b)
                for (int c = b + 1; c < g.num_points(); ++c)
                    if (g.add(g.add(a, b), c) == 0) ++brute;
        CHECK(brute == g.num_lines());

        std::set<std::array<uint8_t, 3>> seen;
        std::array<uint8_t, 3> prev{0, 0, 0};
        for (const auto& ln : g.lines()) {
            CHECK(ln[0] < ln[1]);
            CHECK(ln[1] < ln[2]);
            CHECK(g.is_line(ln[0], ln[1], ln[2]));
            CHECK(prev < ln);
            prev = ln;
            seen.insert(ln);
        }
        CHECK(static_cast<int>(seen.size()) == g.num_lines());

        // every point lies on (3^n - 1)/2 lines
        for (int p = 0; p < g.num_points(); ++p)
            CHECK(static_cast<int>(g.lines_through(p).size()) == (g.num_points() - 1) / 2);
    }
}

TEST_CASE("hyperplane slicing") {
    const Geometry& g3 = Geometry::of(3);
    CHECK(g3.coordinate_hyperplanes().size() == 3);
    auto families = g3.all_hyperplane_families();
    CHECK(families.size() == 13);
    CHECK(Geometry::of(4).all_hyperplane_families().size() == 40);

    for (const auto& h : families) {
        PointSet all;
        for (const auto& s : h.slices) {
            CHECK(s.size() == 9);
            CHECK(all.disjoint(s));
            all |= s;
        }
        CHECK(all == g3.universe());
    }

    auto prof_full = hyperplane_profile(g3.universe(), families[0]);
    CHECK(prof_full == std::array<int, 3>{9, 9, 9});
    CHECK(hyperplane_profile(PointSet{}, families[0]) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("grid positions follow the figure layout") {
    const Geometry& g4 = Geometry::of(4);
    CHECK(g4.grid_position(0) == std::pair<int, int>{0, 0});
    CHECK(g4.grid_position(g4.point_from_coords({1, 2, 0, 1})) == std::pair<int, int>{3, 7});
    CHECK(g4.grid_position(80) == std::pair<int, int>{8, 8});

    std::set<std::pair<int, int>> seen;
    for (int p = 0; p < 81; ++p) {
        auto pos = g4.grid_position(p);
        CHECK(pos.first >= 0);
        CHECK(pos.first < 9);
        CHECK(pos.second >= 0);
        CHECK(pos.second < 9);
        seen.insert(pos);
    }
    CHECK(seen.size() == 81);
}

TEST_CASE("point set algebra") {
    PointSet a = PointSet::from_indices({0, 5, 64, 80});
    CHECK(a.size() == 4);
    CHECK(a.test(64));
    CHECK_FALSE(a.test(63));
    PointSet b = PointSet::from_indices({5, 7});
    CHECK((a & b) == PointSet::from_indices({5}));
    CHECK((a | b).size() == 5);
    CHECK((a - b) == PointSet::from_indices({0, 64, 80}));
    CHECK(a.lowest() == 0);
    CHECK(a.above(5) == PointSet::from_indices({64, 80}));
    CHECK(PointSet::full(81).size() == 81);

    // lexicographic order on sorted index lists
    CHECK(PointSet::lex_less(PointSet::from_indices({0, 1}), PointSet::from_indices({0, 2})));
    CHECK(PointSet::lex_less(PointSet::from_indices({0, 5, 6}), PointSet::from_indices({0, 7})));
    CHECK(PointSet::lex_less(PointSet::from_indices({0}), PointSet::from_indices({0, 5})));
    CHECK_FALSE(PointSet::lex_less(PointSet::from_indices({0, 5}), PointSet::from_indices({0})));
    CHECK_FALSE(
        PointSet::lex_less(PointSet::from_indices({0, 2}), PointSet::from_indices({0, 1})));
}
