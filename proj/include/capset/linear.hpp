#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capset/gf3.hpp"
#include "capset/pointset.hpp"

namespace capset {

// Invertible n x n matrix over GF(3); rows[i] is the point index of row i.
struct LinearMap {
    std::array<uint8_t, 4> rows{};
    bool operator==(const LinearMap&) const = default;
};

// x -> A x + t
struct AffineMap {
    LinearMap lin;
    uint8_t t = 0;
    bool operator==(const AffineMap&) const = default;
};

LinearMap identity_map(const Geometry& g);
AffineMap affine_identity(const Geometry& g);

int apply_point(const Geometry& g, const LinearMap& m, int p);
int apply_point(const Geometry& g, const AffineMap& m, int p);
PointSet apply_set(const Geometry& g, const AffineMap& m, PointSet s);

LinearMap compose(const Geometry& g, const LinearMap& a, const LinearMap& b);  // a after b
AffineMap compose(const Geometry& g, const AffineMap& a, const AffineMap& b);
LinearMap inverse(const Geometry& g, const LinearMap& m);
AffineMap inverse(const Geometry& g, const AffineMap& m);
int determinant(const Geometry& g, const LinearMap& m);  // 0 = singular

// Build from column images (col[i] = image of the i-th standard basis vector).
LinearMap map_from_columns(const Geometry& g, const std::array<uint8_t, 4>& cols);

// The full point permutation of m, for hot loops.
std::array<uint8_t, 81> point_perm(const Geometry& g, const AffineMap& m);
PointSet apply_perm(const std::array<uint8_t, 81>& perm, PointSet s);

// Row-major trit string ("0120..." of n*n chars); affine maps append n trits
// of translation.
std::string to_trits(const Geometry& g, const LinearMap& m);
std::string to_trits(const Geometry& g, const AffineMap& m);
LinearMap linear_from_trits(const Geometry& g, const std::string& s);
AffineMap affine_from_trits(const Geometry& g, const std::string& s);

uint64_t gl_order(int n);
uint64_t aff_order(int n);

// Deterministic stream of GL(n,3) in row-major lexicographic order.
// fn(const LinearMap&) returns false to stop early.
template <class Fn>
void for_each_gl(const Geometry& g, Fn&& fn) {
    const int num = g.num_points();
    const int n = g.n();
    LinearMap m;
    auto span_grow = [&](PointSet sp, int v) {
        return sp | translate_set(g, sp, v) | translate_set(g, sp, g.neg(v));
    };
    std::array<PointSet, 5> spans;
    spans[0] = PointSet::single(0);
    std::array<int, 4> row{};
    int depth = 0;
    while (true) {
        ++row[depth];
        if (row[depth] >= num) {
            row[depth] = 0;
            if (depth == 0) break;
            --depth;
            continue;
        }
        if (spans[depth].test(row[depth])) continue;
        m.rows[depth] = static_cast<uint8_t>(row[depth]);
        if (depth == n - 1) {
            if (!fn(static_cast<const LinearMap&>(m))) return;
        } else {
            spans[depth + 1] = span_grow(spans[depth], row[depth]);
            ++depth;
        }
    }
}

// Parallel-friendly split: enumerate the matrices whose first row is `first`.
template <class Fn>
void for_each_gl_with_first_row(const Geometry& g, int first, Fn&& fn) {
    const int num = g.num_points();
    const int n = g.n();
    if (first <= 0 || first >= num) return;
    LinearMap m;
    m.rows[0] = static_cast<uint8_t>(first);
    auto span_grow = [&](PointSet sp, int v) {
        return sp | translate_set(g, sp, v) | translate_set(g, sp, g.neg(v));
    };
    if (n == 1) {
        fn(static_cast<const LinearMap&>(m));
        return;
    }
    std::array<PointSet, 5> spans;
    spans[1] = span_grow(PointSet::single(0), first);
    std::array<int, 4> row{};
    int depth = 1;
    while (true) {
        ++row[depth];
        if (row[depth] >= num) {
            row[depth] = 0;
            if (depth == 1) break;
            --depth;
            continue;
        }
        if (spans[depth].test(row[depth])) continue;
        m.rows[depth] = static_cast<uint8_t>(row[depth]);
        if (depth == n - 1) {
            if (!fn(static_cast<const LinearMap&>(m))) return;
        } else {
            spans[depth + 1] = span_grow(spans[depth], row[depth]);
            ++depth;
        }
    }
}

// Small generating sets for BFS orbit closures.
std::vector<AffineMap> gl_generators(const Geometry& g);
std::vector<AffineMap> aff_generators(const Geometry& g);

}  // namespace capset
