#pragma once

#include <string>
#include <vector>

#include "capset/groups.hpp"
#include "capset/partitions.hpp"

namespace capset {

// Elements of `within` fixing every block of p setwise.
MatrixGroup blockwise_partition_stabilizer(const Geometry& g, const MatrixGroup& within,
                                           const Partition4& p);

// Elements of `within` fixing the block collection of p (blocks may permute).
MatrixGroup partition_collection_stabilizer(const Geometry& g, const MatrixGroup& within,
                                            const Partition4& p);

// Elements of `within` fixing the set c.
MatrixGroup subgroup_fixing_set(const Geometry& g, const MatrixGroup& within, PointSet c);

std::pair<int, int> det_split(const Geometry& g, const MatrixGroup& grp);  // (det 1, det 2)

// Count of distinct cyclic subgroups of the given order.
int cyclic_subgroup_count(const MatrixGroup& grp, int order);

// Which semidirect-product references a group matches; the paper's labels
// leave the twisting action open, so every candidate action is constructed
// and tested.
struct IsoMatch {
    std::string reference;
    bool matched;
};
std::vector<IsoMatch> match_against_z20_semidirect_z2(const MatrixGroup& h);
std::vector<IsoMatch> match_against_z4_semidirect_z4(const MatrixGroup& p16);
std::vector<IsoMatch> match_against_z8xz2_semidirect_z2(const MatrixGroup& p32);
bool matches_z4xz2(const MatrixGroup& k);

}  // namespace capset
