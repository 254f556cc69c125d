#include "capset/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <unordered_set>

#include "capset/caps.hpp"
#include "capset/gf3.hpp"
#include "capset/group_reports.hpp"
#include "capset/groups.hpp"
#include "capset/io.hpp"
#include "capset/linear.hpp"
#include "capset/orbits.hpp"
#include "capset/parallel.hpp"
#include "capset/partitions.hpp"

namespace capset {

const std::vector<int>& canonical_cap_fixture() {
    static const std::vector<int> fixture = {1,  2,  3,  6,  9,  13, 18, 26, 27, 31,
                                             38, 42, 50, 52, 54, 62, 68, 70, 73, 75};
    return fixture;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();
    std::vector<std::string>* mismatches;

    void check(const std::string& key, long long actual) {
        long long want = expected_value(key);
        results[key] = actual;
        if (actual != want)
            mismatches->push_back(key + ": expected " + std::to_string(want) + ", got " +
                                  std::to_string(actual));
    }
    void check_bool(const std::string& key, bool ok) { check(key, ok ? 1 : 0); }
    void fail(const std::string& message) { mismatches->push_back(message); }

    template <class Fn>
    void phase(const std::string& name, Fn&& fn) {
        auto t0 = Clock::now();
        fn();
        timing[name] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
};

AffineMap random_affine(const Geometry& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pt(0, g.num_points() - 1);
    AffineMap m;
    do {
        for (int i = 0; i < g.n(); ++i) m.lin.rows[i] = static_cast<uint8_t>(pt(rng));
    } while (determinant(g, m.lin) == 0);
    m.t = static_cast<uint8_t>(pt(rng));
    return m;
}

void quick_checks(Checker& ck, int jobs) {
    // line counts against the closed form
    const char* line_keys[4] = {"sec2_ag13_lines", "sec2_ag23_lines", "derived_ag33_lines",
                                "derived_ag43_lines"};
    for (int n = 1; n <= 4; ++n) {
        const Geometry& g = Geometry::of(n);
        long long formula =
            static_cast<long long>(g.num_points() / 3) * (g.num_points() - 1) / 2;
        ck.check(line_keys[n - 1], g.num_lines());
        if (g.num_lines() != formula) ck.fail("line count disagrees with the closed form");
    }

    // Table 1 by search
    ck.check("table1_max_cap_n1", max_cap_size(Geometry::of(1)));
    ck.check("table1_max_cap_n2", max_cap_size(Geometry::of(2)));
    ck.check("table1_max_cap_n3", max_cap_size(Geometry::of(3)));
    ck.check("table1_max_cap_n4", max_cap_size(Geometry::of(4)));

    // AG(2,3)
    const Geometry& g2 = Geometry::of(2);
    ck.check("derived_ag23_maximal_caps",
             static_cast<long long>(enumerate_maximal_caps(g2, jobs).size()));
    auto ld2 = low_dim_partitions(g2);
    ck.check("derived_ag23_partitions", ld2.num_partitions);
    ck.check_bool("derived_ag23_single_orbit",
                  ld2.single_affine_orbit && ld2.every_cap_in_unique_partition);

    // AG(3,3)
    const Geometry& g3 = Geometry::of(3);
    auto caps3 = enumerate_maximal_caps(g3, jobs);
    ck.check("derived_ag33_maximal_caps", static_cast<long long>(caps3.size()));
    auto stab3 = setwise_stabilizer(g3, caps3.front(), Ambient::Aff);
    ck.check("derived_ag33_cap_stabilizer", static_cast<long long>(stab3.size()));
    if (stab3.size() * caps3.size() != aff_order(3))
        ck.fail("AG(3,3) orbit-stabilizer identity fails");
    auto ld3 = low_dim_partitions(g3);
    ck.check("derived_ag33_partitions", ld3.num_partitions);
    ck.check_bool("derived_ag33_single_orbit", ld3.single_affine_orbit);
    ck.check_bool("prop2_2_unique_partition", ld3.every_cap_in_unique_partition);

    bool zero_sums = true, completions_two = true, profiles_ok = true;
    auto families3 = g3.all_hyperplane_families();
    for (const auto& c : caps3) {
        if (cap_sum(g3, c) != 0) zero_sums = false;
        PointSet outside = g3.universe() - c;
        outside.for_each([&](int p) {
            if (completion_count(g3, c, p) != 2) completions_two = false;
        });
        for (const auto& h : families3) {
            auto prof = hyperplane_profile(c, h);
            bool is441 = prof == std::array<int, 3>{4, 4, 1};
            bool is333 = prof == std::array<int, 3>{3, 3, 3};
            if (!is441 && !is333) profiles_ok = false;
        }
    }
    ck.check_bool("prop2_2_zero_sums", zero_sums);
    ck.check_bool("prop2_2_completion_two", completions_two);
    ck.check_bool("prop2_2_profiles", profiles_ok);

    // a complete 8-cap exists (first one in DFS order)
    bool complete8 = false;
    for_each_cap(g3, g3.universe(), 8, -1, [&](PointSet s) {
        if (is_complete_cap(g3, s)) {
            complete8 = true;
            return false;
        }
        return true;
    });
    ck.check_bool("sec2_complete_8cap_exists", complete8);

    // the anchored enumeration and the canonical cap
    const Geometry& g4 = Geometry::of(4);
    ck.check("sec4_gl4_order", static_cast<long long>(gl_order(4)));
    ck.check("sec1_aff4_order", static_cast<long long>(aff_order(4)));
    const auto& a0 = anchor0_caps(g4);
    ck.check("lemma3_2_cap_count", static_cast<long long>(a0.size()));
    PointSet S = canonical_cap(g4);
    if (S.to_indices() != canonical_cap_fixture())
        ck.fail("canonical cap disagrees with the frozen fixture");
    if (!is_cap(g4, S) || !is_complete_cap(g4, S))
        ck.fail("canonical cap is not a complete cap");
    auto anchor = anchor_of(g4, S);
    if (anchor.anchor != 0) ck.fail("canonical cap anchor is not 0");

    auto stab = setwise_stabilizer(g4, S, Ambient::GL);
    ck.check("lemma3_2_stabilizer_order", static_cast<long long>(stab.size()));
    ck.check_bool("lemma3_2_orbit_stabilizer", stab.size() * a0.size() == gl_order(4));
    ck.check("lemma3_1_anchor_completions", completion_count(g4, S, 0));
    long long total_completions = 0;
    PointSet outside = g4.universe() - S;
    outside.for_each([&](int p) { total_completions += completion_count(g4, S, p); });
    ck.check("derived_pair_completion_sum", total_completions);
}

void full_checks(Checker& ck, int jobs, std::mt19937_64& rng) {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);

    ck.phase("prop3_4_sweep", [&] {
        ck.check_bool("prop3_4_cross_anchor_meets", verify_anchor_intersection(g4, S, jobs));
    });

    DisjointClassification dc;
    SPartitions sp;
    ck.phase("prop3_5_censuses", [&] {
        dc = classify_disjoint_caps(g4, S, jobs);
        ck.check("prop3_5_disjoint", static_cast<long long>(dc.caps.size()));
        ck.check("def3_6_one", dc.one);
        ck.check("def3_6_two", dc.two);
        ck.check("def3_6_six", dc.six);

        sp = partitions_containing(g4, S, dc, jobs);
        ck.check("prop3_5_partitions", static_cast<long long>(sp.parts.size()));
        ck.check("prop3_7_e1", sp.e1);
        ck.check("prop3_7_e2", sp.e2);

        std::unordered_set<PointSet, PointSetHash> covered;
        for (const auto& p : sp.parts)
            for (const auto& b : p.blocks)
                if (!(b == S)) covered.insert(b);
        ck.check_bool("prop3_5_coverage", covered.size() == dc.caps.size());
    });

    MatrixGroup G = make_group(g4, setwise_stabilizer(g4, S, Ambient::GL));

    ck.phase("lemma3_2_branching", [&] {
        // the dual route to 2880: group the stabilizer by the images of the
        // first two independent cap points; the proof's 20 * 18 * 8 branching
        // appears as 20 first-image buckets of 144 = 18 * 8, and 360
        // two-image buckets of 8
        int b1 = -1, b2 = -1;
        for (int p : S.to_indices()) {
            if (b1 < 0) {
                b1 = p;
                continue;
            }
            if (p != g4.neg(b1)) {
                b2 = p;
                break;
            }
        }
        std::map<int, int> first_bucket;
        std::map<std::pair<int, int>, int> pair_bucket;
        for (const auto& m : G.elems) {
            int t1 = apply_point(g4, m, b1), t2 = apply_point(g4, m, b2);
            ++first_bucket[t1];
            ++pair_bucket[{t1, t2}];
        }
        bool ok = first_bucket.size() == 20 && pair_bucket.size() == 360;
        for (const auto& [k, v] : first_bucket)
            if (v != 144) ok = false;
        for (const auto& [k, v] : pair_bucket)
            if (v != 8) ok = false;
        ck.check_bool("lemma3_2_branching", ok);
    });

    ck.phase("prop3_7_orbits", [&] {
        auto orbits = partition_orbits(g4, G, sp);
        if (orbits.size() != 2) {
            ck.fail("stabilizer orbit count on the 216 partitions is not 2");
            ck.check("prop3_7_orbit_e1", -1);
            ck.check("prop3_7_orbit_e2", -1);
        } else {
            ck.check("prop3_7_orbit_e1", static_cast<long long>(orbits[0].size()));
            ck.check("prop3_7_orbit_e2", static_cast<long long>(orbits[1].size()));
            bool aligned = true;
            for (int pi : orbits[0])
                if (sp.cls[pi] != 1) aligned = false;
            for (int pi : orbits[1])
                if (sp.cls[pi] != 2) aligned = false;
            if (!aligned) ck.fail("stabilizer orbits do not coincide with E1/E2");
        }

        bool six_profiles = true;
        for (size_t i = 0; i < dc.caps.size(); ++i) {
            if (dc.split_count[i] != 6) continue;
            auto [e1, e2] = six_profile(g4, S, dc.caps[i], sp);
            if (e1 != 1 || e2 != 5) six_profiles = false;
        }
        ck.check_bool("prop3_7_six_profiles", six_profiles);

        bool equivariant = true;
        for (const auto& m : G.elems) {
            auto perm = point_perm(g4, m);
            for (size_t i = 0; i < dc.caps.size(); ++i)
                if (dc.class_of(apply_perm(perm, dc.caps[i])) != dc.split_count[i])
                    equivariant = false;
        }
        ck.check_bool("prop3_7_equivariance", equivariant);
    });

    ck.phase("lemma3_8", [&] {
        bool pairings_ok = true;
        for (size_t i = 0; i < sp.parts.size(); ++i) {
            auto ps = pair_structure(g4, sp.parts[i]);
            if (ps.counts[0] != ps.counts[1] || ps.counts[0] != sp.cls[i]) pairings_ok = false;
        }
        ck.check_bool("lemma3_8_pairings", pairings_ok);
    });

    ck.phase("prop3_7d_split_halves", [&] {
        std::vector<int> e1_idx, e2_idx;
        for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i)
            (sp.cls[i] == 1 ? e1_idx : e2_idx).push_back(i);
        bool halves = true;
        for (int trial = 0; trial < 20; ++trial) {
            const auto& pool = (trial % 2 == 0) ? e1_idx : e2_idx;
            std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
            int pi = pool[pick(rng)];
            int qi = (trial < 2) ? pi : pool[pick(rng)];  // include the identity case
            auto [aligned, swapped] = transporter_split(g4, G, sp, pi, qi);
            if (aligned != swapped || aligned == 0) halves = false;
            int expect_total = (sp.cls[pi] == 1) ? 80 : 16;
            if (aligned + swapped != expect_total) halves = false;
        }
        ck.check_bool("prop3_7_split_halves", halves);
    });

    ck.phase("sec3_symmetry_and_invariance", [&] {
        bool symmetric = true;
        std::uniform_int_distribution<size_t> pick(0, dc.caps.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            PointSet other = dc.caps[pick(rng)];
            auto dc_other = classify_disjoint_caps(g4, other, jobs);
            if (dc_other.class_of(S) != dc.class_of(other)) symmetric = false;
            if (dc_other.one != 36 || dc_other.two != 90 || dc_other.six != 72)
                symmetric = false;
        }
        ck.check_bool("sec3_completability_symmetry", symmetric);

        bool censuses_match = true;
        const auto& all_caps = all_maximal_caps4(g4, jobs);
        std::uniform_int_distribution<size_t> pick_any(0, all_caps.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            PointSet base = all_caps[pick_any(rng)];
            auto dc_t = classify_disjoint_caps(g4, base, jobs);
            if (dc_t.caps.size() != 198 || dc_t.one != 36 || dc_t.two != 90 || dc_t.six != 72)
                censuses_match = false;
            auto sp_t = partitions_containing(g4, base, dc_t, jobs);
            if (sp_t.parts.size() != 216 || sp_t.e1 != 36 || sp_t.e2 != 180)
                censuses_match = false;
        }
        ck.check_bool("sec3_census_invariance", censuses_match);
    });

    ck.phase("thm3_9", [&] {
        // class invariance under random affine transports
        bool invariant = true;
        std::uniform_int_distribution<size_t> pick(0, sp.parts.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            int pi = static_cast<int>(pick(rng));
            AffineMap m = random_affine(g4, rng);
            auto perm = point_perm(g4, m);
            Partition4 image = apply_to_partition(g4, perm, sp.parts[pi]);
            auto ps = pair_structure(g4, image);
            if (ps.counts[0] != ps.counts[1] || ps.counts[0] != sp.cls[pi]) invariant = false;
        }
        ck.check_bool("thm3_9_invariance", invariant);

        std::vector<int> e1_idx, e2_idx;
        for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i)
            (sp.cls[i] == 1 ? e1_idx : e2_idx).push_back(i);
        std::uniform_int_distribution<size_t> pe1(0, e1_idx.size() - 1);
        std::uniform_int_distribution<size_t> pe2(0, e2_idx.size() - 1);

        bool cross_fails = true;
        for (int trial = 0; trial < 10; ++trial) {
            const Partition4& a = sp.parts[e1_idx[pe1(rng)]];
            Partition4 b = sp.parts[e2_idx[pe2(rng)]];
            if (trial % 2 == 1) {
                auto perm = point_perm(g4, random_affine(g4, rng));
                b = apply_to_partition(g4, perm, b);
            }
            if (transporter_partitions(g4, a, b)) cross_fails = false;
        }
        ck.check_bool("thm3_9_cross_class", cross_fails);

        bool connected = true;
        for (int trial = 0; trial < 10; ++trial) {
            const auto& pool = (trial % 2 == 0) ? e1_idx : e2_idx;
            std::uniform_int_distribution<size_t> pp(0, pool.size() - 1);
            const Partition4& a = sp.parts[pool[pp(rng)]];
            Partition4 b = sp.parts[pool[pp(rng)]];
            auto perm = point_perm(g4, random_affine(g4, rng));
            b = apply_to_partition(g4, perm, b);  // usually lands on another anchor
            auto witness = transporter_partitions(g4, a, b);
            if (!witness) {
                connected = false;
                continue;
            }
            auto wperm = point_perm(g4, *witness);
            if (!(apply_to_partition(g4, wperm, a) == b)) connected = false;
        }
        ck.check_bool("thm3_9_connectivity", connected);
    });

    ck.phase("sec3_anchor0_census", [&] {
        auto census = count_partitions_anchor0(g4, jobs);
        ck.check("sec3_anchor0_partitions", static_cast<long long>(census.total));
        ck.check("derived_e1_anchor0", static_cast<long long>(census.e1));
        ck.check("derived_e2_anchor0", static_cast<long long>(census.e2));
        uint64_t formula = anchor0_caps(g4).size() * sp.parts.size() / 4;
        ck.check_bool("sec3_anchor0_formula",
                      census.total == formula && census.e1 + census.e2 == census.total);
    });

    ck.phase("sec4_groups", [&] {
        int e1_first = -1, e2_first = -1;
        for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i) {
            if (sp.cls[i] == 1 && e1_first < 0) e1_first = i;
            if (sp.cls[i] == 2 && e2_first < 0) e2_first = i;
        }

        // G1 and its orbits
        std::vector<AffineMap> det1;
        for (const auto& m : G.elems)
            if (determinant(g4, m.lin) == 1) det1.push_back(m);
        MatrixGroup G1 = make_group(g4, det1);
        ck.check("sec4_g1_order", static_cast<long long>(G1.order()));
        auto orbits1 = partition_orbits(g4, G1, sp);
        int e1_orbits = 0, e2_orbits = 0;
        bool orbit90 = true, per_orbit = true;
        for (const auto& o : orbits1) {
            bool is_e1 = sp.cls[o.front()] == 1;
            (is_e1 ? e1_orbits : e2_orbits)++;
            if (!is_e1) {
                if (o.size() != 90) orbit90 = false;
                std::unordered_set<PointSet, PointSetHash> completables;
                for (int pi : o)
                    completables.insert(sp.parts[pi].blocks[sp.completable_block[pi]]);
                if (completables.size() != o.size()) per_orbit = false;
            }
        }
        ck.check("sec4_g1_e1_orbits", e1_orbits);
        ck.check("sec4_g1_e2_orbits", e2_orbits);
        ck.check("sec4_g1_orbit_size", orbit90 && per_orbit ? 90 : -1);

        // the det-2 coset maps one 90-orbit onto the other
        bool coset_ok = true;
        {
            const std::vector<int>* orbA = nullptr;
            const std::vector<int>* orbB = nullptr;
            for (const auto& o : orbits1)
                if (sp.cls[o.front()] == 2) (orbA ? orbB : orbA) = &o;
            if (!orbA || !orbB) {
                coset_ok = false;
            } else {
                std::unordered_set<uint64_t> orbB_keys;
                for (int pi : *orbB) orbB_keys.insert(sp.parts[pi].hash());
                int pi0 = orbA->front();
                std::unordered_set<uint64_t> images;
                std::unordered_set<PointSet, PointSetHash> image_completables;
                for (const auto& m : G.elems) {
                    if (determinant(g4, m.lin) != 2) continue;
                    auto perm = point_perm(g4, m);
                    Partition4 img = apply_to_partition(g4, perm, sp.parts[pi0]);
                    if (!orbB_keys.count(img.hash())) coset_ok = false;
                    images.insert(img.hash());
                    for (int b = 0; b < 4; ++b) {
                        int k = dc.class_of(img.blocks[b]);
                        if (k == 2) image_completables.insert(img.blocks[b]);
                    }
                }
                if (images.size() != 90 || image_completables.size() != 90) coset_ok = false;
            }
        }
        ck.check_bool("sec4_g1_coset_bijection", coset_ok);

        // H, the blockwise stabilizer of an E1 partition
        auto H = blockwise_partition_stabilizer(g4, G, sp.parts[e1_first]);
        ck.check("sec4_H_order", static_cast<long long>(H.order()));
        auto fpH = fingerprint(H);
        ck.check_bool("sec4_H_nonabelian", !fpH.abelian);
        ck.check_bool("sec4_H_unique_z20", cyclic_subgroup_count(H, 20) == 1);
        auto [h_d1, h_d2] = det_split(g4, H);
        if (h_d1 != 40 || h_d2 != 0) ck.fail("H determinant split is not 40/0");
        bool u9 = false, others = false;
        for (const auto& m : match_against_z20_semidirect_z2(H)) {
            ck.results["sec4_H_vs_" + m.reference] = m.matched;
            if (m.reference == "Z20:9:Z2")
                u9 = m.matched;
            else
                others |= m.matched;
        }
        ck.check_bool("sec4_H_semidirect_u9", u9 && !others);

        // the order-80 pair stabilizer of (S, S1)
        PointSet S1 = sp.parts[e1_first].blocks[sp.completable_block[e1_first]];
        auto P1 = subgroup_fixing_set(g4, G, S1);
        ck.check("sec4_pair1_stab_order", static_cast<long long>(P1.order()));
        bool swap_det2 = true;
        for (const auto& m : P1.elems)
            if (!H.contains(m) && determinant(g4, m.lin) != 2) swap_det2 = false;
        auto [p1_d1, p1_d2] = det_split(g4, P1);
        ck.check_bool("sec4_pair1_swap_det2", swap_det2 && p1_d1 == 40 && p1_d2 == 40);

        // K and the 16- and 32-element groups around an E2 partition
        auto K = blockwise_partition_stabilizer(g4, G, sp.parts[e2_first]);
        ck.check("sec4_K_order", static_cast<long long>(K.order()));
        ck.check_bool("sec4_K_is_z4xz2", matches_z4xz2(K));
        auto P16 = partition_collection_stabilizer(g4, G, sp.parts[e2_first]);
        ck.check("sec4_pi2_stab_order", static_cast<long long>(P16.order()));
        auto [p16_d1, p16_d2] = det_split(g4, P16);
        ck.check_bool("sec4_pi2_det1", p16_d1 == static_cast<int>(P16.order()) && p16_d2 == 0);
        bool nontrivial16 = false, abelian16 = false;
        for (const auto& m : match_against_z4_semidirect_z4(P16)) {
            ck.results["sec4_pi2_vs_" + m.reference] = m.matched;
            if (m.reference == "Z4:3:Z4")
                nontrivial16 = m.matched;
            else
                abelian16 = m.matched;
        }
        ck.check_bool("sec4_pi2_nonabelian_semidirect", nontrivial16 && !abelian16);

        PointSet S2 = sp.parts[e2_first].blocks[sp.completable_block[e2_first]];
        auto P32 = subgroup_fixing_set(g4, G, S2);
        ck.check("sec4_pair2_stab_order", static_cast<long long>(P32.order()));
        auto [p32_d1, p32_d2] = det_split(g4, P32);
        ck.check("sec4_pair2_det2_half", p32_d2);
        if (p32_d1 != 16) ck.fail("the 32-group does not split 16/16 by determinant");
        int matched32 = 0;
        for (const auto& m : match_against_z8xz2_semidirect_z2(P32)) {
            ck.results["sec4_pair2_vs_" + m.reference] = m.matched;
            if (m.matched) ++matched32;
        }
        ck.check_bool("sec4_pair2_semidirect_matched", matched32 == 1);

        // stab(S, S6) equals the H of the unique E1 partition containing S6
        bool six_pair_ok = true;
        for (int b = 0; b < 4 && six_pair_ok; ++b) {
            if (sp.parts[e1_first].blocks[b] == S || b == sp.completable_block[e1_first])
                continue;
            auto P6 = subgroup_fixing_set(g4, G, sp.parts[e1_first].blocks[b]);
            if (!(P6.elems == H.elems)) six_pair_ok = false;
        }
        ck.check_bool("sec4_six_pair_stab", six_pair_ok);

        // order-5 structure
        std::vector<AffineMap> ord5;
        for (const auto& m : G.elems)
            if (element_order(g4, m) == 5) ord5.push_back(m);
        ck.check("sec4_order5_elements", static_cast<long long>(ord5.size()));
        std::unordered_set<uint64_t> z5keys;
        std::vector<MatrixGroup> z5subs;
        for (const auto& m : ord5) {
            auto sub = generated_subgroup(g4, {m});
            uint64_t h = 0;
            for (const auto& e : sub.elems) h = h * 1099511628211ull ^ pack_map(e);
            if (z5keys.insert(h).second) z5subs.push_back(sub);
        }
        ck.check("sec4_z5_subgroups", static_cast<long long>(z5subs.size()));
        bool fixes_one = true;
        for (const auto& z5 : z5subs) {
            const AffineMap* gen = nullptr;
            for (const auto& e : z5.elems)
                if (!(e == affine_identity(g4))) {
                    gen = &e;
                    break;
                }
            auto perm = point_perm(g4, *gen);
            int fixed = 0;
            for (size_t i = 0; i < sp.parts.size(); ++i) {
                if (sp.cls[i] != 1) continue;
                if (apply_to_partition(g4, perm, sp.parts[i]) == sp.parts[i]) ++fixed;
            }
            if (fixed != 1) fixes_one = false;
        }
        ck.check_bool("sec4_z5_fixes_one_e1", fixes_one);

        auto gen5 = generated_subgroup(g4, ord5);
        ck.check("sec4_a6_order", static_cast<long long>(gen5.order()));
        ck.check_bool("sec4_a6_simple", is_simple_group(gen5));
        bool three = false;
        for (size_t i = 0; i < ord5.size() && !three; ++i)
            for (size_t j = i + 1; j < ord5.size() && !three; ++j)
                for (size_t k = j + 1; k < ord5.size() && !three; ++k)
                    if (generated_subgroup(g4, {ord5[i], ord5[j], ord5[k]}).order() ==
                        gen5.order())
                        three = true;
        ck.check_bool("sec4_a6_three_generators", three);
    });
}

void deep_checks(Checker& ck, int jobs) {
    const Geometry& g4 = Geometry::of(4);
    PointSet S = canonical_cap(g4);

    ck.phase("deep_no21", [&] {
        auto res = no21cap_search(g4, jobs, true);
        ck.check("deep_no_21_cap", res.cap21_found ? 1 : 0);
        ck.check_bool("deep_caps20_all_anchored",
                      res.caps20_visited > 0 && res.caps20_visited == res.caps20_anchored);
        ck.results["deep_no21_nodes"] = res.nodes;
        ck.results["deep_caps20_visited"] = res.caps20_visited;
    });

    ck.phase("deep_gl_sweep", [&] {
        auto basis_stab = setwise_stabilizer(g4, S, Ambient::GL);
        std::vector<uint64_t> basis_keys;
        for (const auto& m : basis_stab) basis_keys.push_back(pack_map(m));
        std::sort(basis_keys.begin(), basis_keys.end());

        auto shards = sharded_map<std::pair<uint64_t, std::vector<uint64_t>>>(
            g4.num_points() - 1, jobs, [&](int s) {
                uint64_t count = 0;
                std::vector<uint64_t> fixers;
                for_each_gl_with_first_row(g4, s + 1, [&](const LinearMap& m) {
                    ++count;
                    PointSet rem = S;
                    bool ok = true;
                    while (!rem.empty()) {
                        int p = rem.pop_lowest();
                        if (!S.test(apply_point(g4, m, p))) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) fixers.push_back(pack_map({m, 0}));
                    return true;
                });
                return std::make_pair(count, std::move(fixers));
            });
        uint64_t count = 0;
        std::vector<uint64_t> brute_keys;
        for (auto& [c, f] : shards) {
            count += c;
            brute_keys.insert(brute_keys.end(), f.begin(), f.end());
        }
        std::sort(brute_keys.begin(), brute_keys.end());
        ck.check("deep_gl4_stream_count", static_cast<long long>(count));
        ck.check("deep_brute_stabilizer", static_cast<long long>(brute_keys.size()));
        if (brute_keys != basis_keys)
            ck.fail("brute-force and basis-image stabilizers disagree as element sets");
    });
}

}  // namespace

VerifyOutcome verify_all(Depth depth, int jobs, uint64_t seed) {
    VerifyOutcome out;
    Checker ck;
    ck.mismatches = &out.mismatches;
    std::mt19937_64 rng(seed);

    ck.phase("quick", [&] { quick_checks(ck, jobs); });
    if (depth != Depth::quick) full_checks(ck, jobs, rng);
    if (depth == Depth::deep) deep_checks(ck, jobs);

    out.report.command = "verify";
    out.report.parameters = {{"depth", depth_to_string(depth)}, {"seed", seed}};
    out.report.results = ck.results;
    out.report.results["pass"] = out.mismatches.empty();
    if (!out.mismatches.empty()) out.report.results["mismatches"] = out.mismatches;
    out.report.timing = ck.timing;
    out.report.worker_count = jobs;
    return out;
}

}  // namespace capset
