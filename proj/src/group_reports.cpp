#include "capset/group_reports.hpp"

#include <set>
#include <unordered_set>

namespace capset {

MatrixGroup blockwise_partition_stabilizer(const Geometry& g, const MatrixGroup& within,
                                           const Partition4& p) {
    std::vector<AffineMap> out;
    for (const auto& m : within.elems) {
        auto perm = point_perm(g, m);
        bool ok = perm[p.anchor] == p.anchor;
        for (int b = 0; ok && b < 4; ++b)
            if (!(apply_perm(perm, p.blocks[b]) == p.blocks[b])) ok = false;
        if (ok) out.push_back(m);
    }
    return make_group(g, std::move(out));
}

MatrixGroup partition_collection_stabilizer(const Geometry& g, const MatrixGroup& within,
                                            const Partition4& p) {
    std::vector<AffineMap> out;
    for (const auto& m : within.elems) {
        auto perm = point_perm(g, m);
        if (apply_to_partition(g, perm, p) == p) out.push_back(m);
    }
    return make_group(g, std::move(out));
}

MatrixGroup subgroup_fixing_set(const Geometry& g, const MatrixGroup& within, PointSet c) {
    std::vector<AffineMap> out;
    for (const auto& m : within.elems) {
        auto perm = point_perm(g, m);
        if (apply_perm(perm, c) == c) out.push_back(m);
    }
    return make_group(g, std::move(out));
}

std::pair<int, int> det_split(const Geometry& g, const MatrixGroup& grp) {
    int d1 = 0, d2 = 0;
    for (const auto& m : grp.elems) (determinant(g, m.lin) == 1 ? d1 : d2)++;
    return {d1, d2};
}

int cyclic_subgroup_count(const MatrixGroup& grp, int order) {
    const Geometry& g = *grp.geom;
    std::set<std::vector<uint64_t>> keys;
    for (const auto& m : grp.elems) {
        if (element_order(g, m) != order) continue;
        auto sub = generated_subgroup(g, {m});
        std::vector<uint64_t> key;
        key.reserve(sub.elems.size());
        for (const auto& e : sub.elems) key.push_back(pack_map(e));
        keys.insert(std::move(key));
    }
    return static_cast<int>(keys.size());
}

std::vector<IsoMatch> match_against_z20_semidirect_z2(const MatrixGroup& h) {
    TableGroup t = table_from_matrix_group(h);
    std::vector<IsoMatch> out;
    for (int u : {9, 11, 19}) {  // the square roots of 1 mod 20 besides 1
        TableGroup ref = semidirect_cyclic(20, 2, u);
        out.push_back({ref.name, find_isomorphism(t, ref).has_value()});
    }
    return out;
}

std::vector<IsoMatch> match_against_z4_semidirect_z4(const MatrixGroup& p16) {
    TableGroup t = table_from_matrix_group(p16);
    std::vector<IsoMatch> out;
    for (int u : {1, 3}) {
        TableGroup ref = semidirect_cyclic(4, 4, u);
        out.push_back({ref.name, find_isomorphism(t, ref).has_value()});
    }
    return out;
}

std::vector<IsoMatch> match_against_z8xz2_semidirect_z2(const MatrixGroup& p32) {
    TableGroup t = table_from_matrix_group(p32);
    TableGroup n = direct_product(cyclic_group(8), cyclic_group(2));
    std::vector<IsoMatch> out;
    std::vector<TableGroup> refs;
    int action_id = 0;
    for (const auto& alpha : automorphisms(n)) {
        bool involution = true;
        for (int x = 0; x < n.order; ++x)
            if (alpha[alpha[x]] != x) {
                involution = false;
                break;
            }
        if (!involution) continue;
        TableGroup ref = semidirect(n, 2, alpha, "Z8xZ2:a" + std::to_string(action_id) + ":Z2");
        ++action_id;
        bool duplicate = false;
        for (const auto& prior : refs)
            if (find_isomorphism(ref, prior)) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        refs.push_back(ref);
        out.push_back({ref.name, find_isomorphism(t, ref).has_value()});
    }
    return out;
}

bool matches_z4xz2(const MatrixGroup& k) {
    TableGroup t = table_from_matrix_group(k);
    TableGroup ref = direct_product(cyclic_group(4), cyclic_group(2));
    return find_isomorphism(t, ref).has_value();
}

}  // namespace capset
