#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "capset/caps.hpp"
#include "capset/gf3.hpp"
#include "capset/groups.hpp"
#include "capset/orbits.hpp"
#include "capset/pointset.hpp"

namespace capset {

// A partition of AG(4,3): the anchor plus 4 mutually disjoint maximal caps.
// Identity is the anchor with the unordered set of blocks; canonical form
// stores the blocks in lexicographic order.
struct Partition4 {
    int anchor = 0;
    std::array<PointSet, 4> blocks;

    void canonicalize();
    bool operator==(const Partition4&) const = default;
    uint64_t hash() const;
    bool well_formed(const Geometry& g) const;  // 1 + 4*20 = 81 coverage
};

Partition4 apply_to_partition(const Geometry& g, const std::array<uint8_t, 81>& perm,
                              const Partition4& p);

// Unordered splits of `residual` into two disjoint caps of half its size; the
// block containing the lowest residual point is listed first.
std::vector<std::pair<PointSet, PointSet>> cap_splits(const Geometry& g, PointSet residual);
int count_cap_splits(const Geometry& g, PointSet residual);

// Every maximal cap of AG(4,3) (all anchors) cached for the disjointness scans.
const std::vector<PointSet>& all_maximal_caps4(const Geometry& g, int jobs);

// All maximal caps disjoint from s, all anchors scanned. 198 for any maximal
// cap, and they share s's anchor.
std::vector<PointSet> disjoint_caps(const Geometry& g, PointSet s, int jobs);

// Prop 3.4 sweep: every translated cap with a different anchor meets s.
bool verify_anchor_intersection(const Geometry& g, PointSet s, int jobs);

// The partitions containing both s and the disjoint cap c (1, 2 or 6 of them).
std::vector<Partition4> complete_to_partitions(const Geometry& g, PointSet s, PointSet c);

struct DisjointClassification {
    std::vector<PointSet> caps;    // the 198, lexicographic
    std::vector<int> split_count;  // parallel array: 1, 2 or 6
    int one = 0, two = 0, six = 0;
    int class_of(PointSet c) const;  // -1 when c is not in caps
};
DisjointClassification classify_disjoint_caps(const Geometry& g, PointSet s, int jobs);

// The 216 partitions containing s, each classified E1/E2 via its unique
// completable (non-six) block.
struct SPartitions {
    std::vector<Partition4> parts;
    std::vector<int> completable_block;  // index into parts[i].blocks
    std::vector<int> cls;                // 1 = E1, 2 = E2
    int e1 = 0, e2 = 0;
};
SPartitions partitions_containing(const Geometry& g, PointSet s,
                                  const DisjointClassification& dc, int jobs);

// Number of partitions of AG(4,3) containing both caps (their pair count).
int pair_count(const Geometry& g, PointSet a, PointSet b);

// (#E1, #E2) among the partitions containing both s and an s-6-completable.
std::pair<int, int> six_profile(const Geometry& g, PointSet s, PointSet s6,
                                const SPartitions& sp);

// Canonical enumeration of every anchor-0 partition with its class census.
struct Anchor0Census {
    uint64_t total = 0;
    uint64_t e1 = 0;
    uint64_t e2 = 0;
};
Anchor0Census count_partitions_anchor0(const Geometry& g, int jobs);

// Orbits of an explicit group acting on the 216 partitions; sizes ascending.
std::vector<std::vector<int>> partition_orbits(const Geometry& g, const MatrixGroup& grp,
                                               const SPartitions& sp);

// Prop 3.7(d): among stabilizer elements sending the completable block of p
// to the completable block of q, how many map the six-pair aligned vs swapped.
std::pair<int, int> transporter_split(const Geometry& g, const MatrixGroup& stab,
                                      const SPartitions& sp, int pi, int qi);

// Exhaustive affine transporter between two partitions (any anchors).
std::optional<AffineMap> transporter_partitions(const Geometry& g, const Partition4& p,
                                                const Partition4& q);

// The pairing structure of a partition: the unique split into two pairs whose
// pair counts are 1 or 2, plus that count (1 or 2).
struct PairStructure {
    std::array<std::pair<int, int>, 2> pairs;  // block indices
    std::array<int, 2> counts;                 // both 1 or both 2
};
PairStructure pair_structure(const Geometry& g, const Partition4& p);

// Low-dimension partition facts (n = 2: 2 blocks + anchor; n = 3: 3 blocks).
struct LowDimPartition {
    int anchor = -1;  // -1 for n = 3
    std::vector<PointSet> blocks;
    bool operator==(const LowDimPartition&) const = default;
};
struct LowDimCensus {
    int num_caps = 0;
    int num_partitions = 0;
    bool every_cap_in_unique_partition = false;
    bool single_affine_orbit = false;
};
LowDimCensus low_dim_partitions(const Geometry& g);

}  // namespace capset
