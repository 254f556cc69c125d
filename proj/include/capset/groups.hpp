#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "capset/gf3.hpp"
#include "capset/linear.hpp"

namespace capset {

// Stable packing of a map for hashing and canonical element order.
uint64_t pack_map(const AffineMap& m);

// An explicit finite set of maps; canonical element order by pack_map.
struct MatrixGroup {
    const Geometry* geom = nullptr;
    std::vector<AffineMap> elems;

    uint64_t order() const { return elems.size(); }
    bool contains(const AffineMap& m) const;
    bool all_linear() const;
};

MatrixGroup make_group(const Geometry& g, std::vector<AffineMap> elems);
bool is_closed_group(const MatrixGroup& grp);
MatrixGroup generated_subgroup(const Geometry& g, const std::vector<AffineMap>& gens,
                               size_t limit = 1u << 22);
int element_order(const Geometry& g, const AffineMap& m);

// A small generating set found greedily over the canonical element order.
std::vector<AffineMap> greedy_generators(const MatrixGroup& grp);

MatrixGroup normal_closure(const MatrixGroup& grp, const std::vector<AffineMap>& seed);
bool is_simple_group(const MatrixGroup& grp);

struct GroupFingerprint {
    uint64_t order = 0;
    bool abelian = false;
    uint64_t center_order = 0;
    std::map<int, uint64_t> element_order_histogram;
    std::map<int, uint64_t> determinant_split;  // {1: ..., 2: ...}
    uint64_t derived_subgroup_order = 0;
};

// Throws capacity_error when |grp| exceeds the limit.
GroupFingerprint fingerprint(const MatrixGroup& grp, size_t limit = 4096);

// Explicit multiplication table; element 0 is the identity in constructions.
struct TableGroup {
    int order = 0;
    int id = 0;
    std::vector<uint16_t> mul;
    std::string name;

    int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int inverse_of(int a) const;
    int order_of(int a) const;
    std::vector<int> element_orders() const;
};

TableGroup table_from_matrix_group(const MatrixGroup& grp);
TableGroup cyclic_group(int k);
TableGroup direct_product(const TableGroup& a, const TableGroup& b);
// Z_k x| Z_m with the action c -> u*c mod k (u^m = 1 mod k required).
TableGroup semidirect_cyclic(int k, int m, int u);
// N x| Z_m via an automorphism alpha of N with alpha^m = id.
TableGroup semidirect(const TableGroup& n, int m, const std::vector<int>& alpha,
                      const std::string& name);

// All automorphisms of a small group (brute force; order <= 64 intended).
std::vector<std::vector<int>> automorphisms(const TableGroup& grp);

// Brute-force isomorphism search: generator images with matching orders,
// extended through the multiplication tables. Returns the full bijection.
std::optional<std::vector<int>> find_isomorphism(const TableGroup& a, const TableGroup& b);

GroupFingerprint fingerprint(const TableGroup& grp);

}  // namespace capset
