#include "capset/registry.hpp"

#include <stdexcept>

namespace capset {

const std::vector<AnchorFact>& anchor_facts() {
    static const std::vector<AnchorFact> facts = {
        // dimension 1..4 basics
        {"sec2_ag13_lines", 1, Depth::quick, "lines of AG(1,3)"},
        {"sec2_ag23_lines", 12, Depth::quick, "lines of AG(2,3)"},
        {"derived_ag33_lines", 117, Depth::quick, "lines of AG(3,3)"},
        {"derived_ag43_lines", 1080, Depth::quick, "lines of AG(4,3)"},
        {"table1_max_cap_n1", 2, Depth::quick, "maximal cap size in AG(1,3)"},
        {"table1_max_cap_n2", 4, Depth::quick, "maximal cap size in AG(2,3)"},
        {"table1_max_cap_n3", 9, Depth::quick, "maximal cap size in AG(3,3)"},
        {"table1_max_cap_n4", 20, Depth::quick, "maximal cap size in AG(4,3)"},
        // low dimensions
        {"derived_ag23_maximal_caps", 54, Depth::quick, "maximal caps of AG(2,3)"},
        {"derived_ag23_partitions", 27, Depth::quick, "partitions of AG(2,3)"},
        {"derived_ag23_single_orbit", 1, Depth::quick, "AG(2,3) partitions form one orbit"},
        {"derived_ag33_maximal_caps", 2106, Depth::quick, "maximal caps of AG(3,3)"},
        {"derived_ag33_cap_stabilizer", 144, Depth::quick, "affine stabilizer of a 9-cap"},
        {"derived_ag33_partitions", 702, Depth::quick, "partitions of AG(3,3)"},
        {"derived_ag33_single_orbit", 1, Depth::quick, "AG(3,3) partitions form one orbit"},
        {"prop2_2_zero_sums", 1, Depth::quick, "all 9-caps sum to the zero vector"},
        {"prop2_2_completion_two", 1, Depth::quick, "external points complete exactly 2 lines"},
        {"prop2_2_profiles", 1, Depth::quick, "9-cap hyperplane profiles are 441 or 333"},
        {"prop2_2_unique_partition", 1, Depth::quick, "every 9-cap lies in a unique partition"},
        {"sec2_complete_8cap_exists", 1, Depth::quick, "AG(3,3) has a complete 8-cap"},
        // groups and the anchor-0 enumeration
        {"sec4_gl4_order", 24261120, Depth::quick, "|GL(4,3)|"},
        {"sec1_aff4_order", 1965150720, Depth::quick, "|Aff(4,3)|"},
        {"lemma3_2_cap_count", 8424, Depth::quick, "maximal caps with anchor 0"},
        {"lemma3_2_stabilizer_order", 2880, Depth::quick, "setwise stabilizer of S in GL(4,3)"},
        {"lemma3_2_orbit_stabilizer", 1, Depth::quick, "8424 * 2880 = |GL(4,3)|"},
        {"lemma3_1_anchor_completions", 10, Depth::quick, "anchor completes 10 lines of S"},
        {"derived_pair_completion_sum", 190, Depth::quick, "sum of completion counts over externals"},
        // section 3 censuses
        {"prop3_4_cross_anchor_meets", 1, Depth::full, "caps with other anchors all meet S"},
        {"lemma3_2_branching", 1, Depth::full, "stabilizer factors as 20 x 18 x 8 basis images"},
        {"prop3_5_disjoint", 198, Depth::full, "maximal caps disjoint from S"},
        {"prop3_5_partitions", 216, Depth::full, "partitions containing S"},
        {"prop3_5_coverage", 1, Depth::full, "every disjoint cap appears in a partition"},
        {"def3_6_one", 36, Depth::full, "S-1-completable caps"},
        {"def3_6_two", 90, Depth::full, "S-2-completable caps"},
        {"def3_6_six", 72, Depth::full, "S-6-completable caps"},
        {"prop3_7_e1", 36, Depth::full, "partitions in E1"},
        {"prop3_7_e2", 180, Depth::full, "partitions in E2"},
        {"prop3_7_orbit_e1", 36, Depth::full, "stabilizer orbit covering E1"},
        {"prop3_7_orbit_e2", 180, Depth::full, "stabilizer orbit covering E2"},
        {"prop3_7_six_profiles", 1, Depth::full, "every six cap meets (1,5) across E1/E2"},
        {"prop3_7_equivariance", 1, Depth::full, "classes invariant under the stabilizer"},
        {"prop3_7_split_halves", 1, Depth::full, "transporter splits land in equal halves"},
        {"lemma3_8_pairings", 1, Depth::full, "pair types agree across each partition"},
        {"thm3_9_invariance", 1, Depth::full, "classes invariant under sampled transports"},
        {"thm3_9_cross_class", 1, Depth::full, "no transporter between E1 and E2"},
        {"thm3_9_connectivity", 1, Depth::full, "same-class partitions are connected"},
        {"sec3_anchor0_partitions", 454896, Depth::full, "partitions with anchor 0"},
        {"derived_e1_anchor0", 75816, Depth::full, "anchor-0 partitions of class E1"},
        {"derived_e2_anchor0", 379080, Depth::full, "anchor-0 partitions of class E2"},
        {"sec3_completability_symmetry", 1, Depth::full, "k-completability is symmetric"},
        {"sec3_census_invariance", 1, Depth::full, "censuses match for sampled base caps"},
        // section 4
        {"sec4_g1_order", 1440, Depth::full, "determinant-1 subgroup order"},
        {"sec4_g1_e1_orbits", 1, Depth::full, "G1 is transitive on E1"},
        {"sec4_g1_e2_orbits", 2, Depth::full, "G1 splits E2 into two orbits"},
        {"sec4_g1_orbit_size", 90, Depth::full, "each G1 orbit on E2 has 90 partitions"},
        {"sec4_g1_coset_bijection", 1, Depth::full, "the det-2 coset swaps the 90-orbits"},
        {"sec4_H_order", 40, Depth::full, "blockwise stabilizer of an E1 partition"},
        {"sec4_H_nonabelian", 1, Depth::full, "H is nonabelian"},
        {"sec4_H_unique_z20", 1, Depth::full, "H has a unique cyclic subgroup of order 20"},
        {"sec4_pair1_stab_order", 80, Depth::full, "setwise stabilizer of (S, S1)"},
        {"sec4_pair1_swap_det2", 1, Depth::full, "the six-swapping half has determinant 2"},
        {"sec4_K_order", 8, Depth::full, "blockwise stabilizer of an E2 partition"},
        {"sec4_K_is_z4xz2", 1, Depth::full, "K is isomorphic to Z4 x Z2"},
        {"sec4_pi2_stab_order", 16, Depth::full, "stabilizer of an E2 partition's blocks"},
        {"sec4_pi2_det1", 1, Depth::full, "the 16 partition-fixing elements have det 1"},
        {"sec4_pair2_stab_order", 32, Depth::full, "setwise stabilizer of (S, S2)"},
        {"sec4_pair2_det2_half", 16, Depth::full, "elements of det 2 in the 32-group"},
        {"sec4_six_pair_stab", 1, Depth::full, "stab(S, S6) equals the partner's H"},
        {"sec4_H_semidirect_u9", 1, Depth::full, "H matches Z20 x| Z2 with the u=9 action"},
        {"sec4_pi2_nonabelian_semidirect", 1, Depth::full, "the 16-group is the nonabelian Z4 x| Z4"},
        {"sec4_pair2_semidirect_matched", 1, Depth::full, "the 32-group matches one (Z8xZ2) x| Z2 action"},
        {"sec3_anchor0_formula", 1, Depth::full, "census equals 8424*216/4 exactly"},
        {"sec4_order5_elements", 144, Depth::full, "elements of order 5 in G"},
        {"sec4_z5_subgroups", 36, Depth::full, "Z5 subgroups of G"},
        {"sec4_z5_fixes_one_e1", 1, Depth::full, "each Z5 fixes exactly one E1 partition"},
        {"sec4_a6_order", 360, Depth::full, "subgroup generated by order-5 elements"},
        {"sec4_a6_simple", 1, Depth::full, "that subgroup is simple"},
        {"sec4_a6_three_generators", 1, Depth::full, "three order-5 elements generate it"},
        // deep mode
        {"deep_no_21_cap", 0, Depth::deep, "21-caps found by the exhaustive search"},
        {"deep_caps20_all_anchored", 1, Depth::deep, "every visited 20-cap is anchored"},
        {"deep_gl4_stream_count", 24261120, Depth::deep, "GL(4,3) stream cardinality"},
        {"deep_brute_stabilizer", 2880, Depth::deep, "24M-matrix stabilizer sweep"},
    };
    return facts;
}

long long expected_value(const std::string& key) {
    for (const auto& f : anchor_facts())
        if (f.key == key) return f.expected;
    throw std::invalid_argument("unknown anchor key: " + key);
}

Depth depth_from_string(const std::string& s) {
    if (s == "quick") return Depth::quick;
    if (s == "full") return Depth::full;
    if (s == "deep") return Depth::deep;
    throw std::invalid_argument("depth must be quick, full or deep");
}

std::string depth_to_string(Depth d) {
    switch (d) {
        case Depth::quick: return "quick";
        case Depth::full: return "full";
        default: return "deep";
    }
}

}  // namespace capset
