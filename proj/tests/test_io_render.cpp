#include <doctest.h>

#include <random>
#include <sstream>

#include "capset/caps.hpp"
#include "capset/io.hpp"
#include "capset/partitions.hpp"
#include "capset/render.hpp"
#include "capset/report.hpp"

using namespace capset;

TEST_CASE("cap json round trips") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    auto j = cap_to_json(g4, S);
    CHECK(j["n"] == 4);
    CHECK(cap_from_json(g4, j) == S);
    CHECK(cap_from_json(g4, j["points"]) == S);

    CHECK_THROWS_AS(cap_from_json(g4, nlohmann::json::parse("[81]")), std::invalid_argument);
    CHECK_THROWS_AS(cap_from_json(Geometry::of(2), j), std::invalid_argument);
}

TEST_CASE("jsonl and binary cap databases round trip") {
    const Geometry& g4 = Geometry::of(4);
    const auto& all = anchor0_caps(g4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::vector<PointSet> caps;
    for (int i = 0; i < 50; ++i) caps.push_back(all[pick(rng)]);

    std::stringstream jl;
    write_caps_jsonl(jl, caps);
    CHECK(read_caps_jsonl(jl) == caps);

    std::stringstream bin;
    write_caps_binary(bin, g4, 20, caps);
    CHECK(bin.str().size() == 16 + 20 * caps.size());
    int n = 0;
    CHECK(read_caps_binary(bin, &n) == caps);
    CHECK(n == 4);

    std::stringstream bad("not a database");
    CHECK_THROWS_AS(read_caps_binary(bad, nullptr), std::invalid_argument);
}

TEST_CASE("partition records") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    auto dc = classify_disjoint_caps(g4, S, 2);
    PointSet one;
    for (size_t i = 0; i < dc.caps.size(); ++i)
        if (dc.split_count[i] == 1) {
            one = dc.caps[i];
            break;
        }
    auto parts = complete_to_partitions(g4, S, one);
    REQUIRE(parts.size() == 1);
    auto j = partition_to_json(g4, parts[0]);
    CHECK(j["anchor"] == 0);
    CHECK(j["class"] == "E1");
    CHECK(j["pair_types"] == nlohmann::json::array({"one", "one"}));
    CHECK(partition_from_json(g4, j) == parts[0]);

    auto bad = j;
    bad["blocks"][0][0] = 0;  // collides with the anchor, breaking coverage
    CHECK_THROWS_AS(partition_from_json(g4, bad), std::invalid_argument);
}

TEST_CASE("renderings put glyphs exactly at grid positions") {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);
    std::string ascii = render_ascii(g4, {S}, 0);

    // rebuild the grid from the rendering (rows with gutters stripped)
    std::vector<std::string> rows;
    std::istringstream is(ascii);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::string cells;
        for (char ch : line)
            if (ch != ' ') cells.push_back(ch);
        rows.push_back(cells);
    }
    REQUIRE(rows.size() == 9);
    for (int p = 0; p < g4.num_points(); ++p) {
        auto [r, c] = g4.grid_position(p);
        char glyph = rows[r][c];
        if (p == 0)
            CHECK(glyph == '@');
        else if (S.test(p))
            CHECK(glyph == '#');
        else
            CHECK(glyph == '.');
    }

    std::string svg = render_svg(g4, {S}, 0);
    size_t circles = 0;
    for (size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1))
        ++circles;
    CHECK(circles == 21);  // 20 cap points and the anchor ring
    CHECK(svg.find(kSvgPalette[0]) != std::string::npos);
}

TEST_CASE("empty set renders a blank grid") {
    const Geometry& g2 = Geometry::of(2);
    std::string ascii = render_ascii(g2, {PointSet{}}, -1);
    for (char ch : ascii) CHECK((ch == '.' || ch == '\n'));
}

TEST_CASE("report digests ignore timing and worker count") {
    Report a;
    a.command = "classify";
    a.parameters = {{"dim", 4}};
    a.results = {{"one", 36}, {"two", 90}, {"six", 72}};
    a.timing = {{"total_ms", 12.5}};
    a.worker_count = 1;

    Report b = a;
    b.timing = {{"total_ms", 99.0}};
    b.worker_count = 8;
    CHECK(a.digest() == b.digest());

    Report c = a;
    c.results["six"] = 73;
    CHECK(a.digest() != c.digest());

    auto j = a.to_json();
    CHECK(j.contains("digest"));
    CHECK(j["worker_count"] == 1);
}
