#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "capset/pointset.hpp"

namespace capset {

// One family of 3 parallel hyperplanes: the level sets of a nonzero linear
// functional. Scalar multiples give the same family with the slices permuted,
// so the normal is kept with leading nonzero coefficient 1.
struct HyperplaneFamily {
    int normal;  // point index of the coefficient vector
    std::array<PointSet, 3> slices;
};

// Tables for AG(n,3): point indices are big-endian trit encodings of the
// coordinate vectors (first coordinate most significant). All per-dimension
// state is immutable after construction; instances are shared via of().
class Geometry {
  public:
    static const Geometry& of(int n);

    int n() const { return n_; }
    int num_points() const { return num_points_; }
    PointSet universe() const { return universe_; }

    // index <-> coordinates (trits, coords[0] most significant)
    int point_from_coords(const std::vector<int>& coords) const;
    std::array<uint8_t, 4> coords_of(int p) const { return coords_[p]; }

    int add(int p, int q) const { return add_[p][q]; }
    int neg(int p) const { return neg_[p]; }
    int scale(int c, int p) const { return c == 0 ? 0 : (c == 1 ? p : neg_[p]); }
    int dot(int p, int q) const { return dot_[p][q]; }
    int trit(int p, int i) const { return coords_[p][i]; }

    // The unique r with p + q + r = 0; throws on p == q.
    int third_point(int p, int q) const;
    int third_unchecked(int p, int q) const { return third_[p][q]; }

    bool is_line(int p, int q, int r) const;

    // All lines as sorted triples in lexicographic order.
    const std::vector<std::array<uint8_t, 3>>& lines() const { return lines_; }
    int num_lines() const { return static_cast<int>(lines_.size()); }
    // The (3^n - 1)/2 pairs {q, r} completing a line through p.
    const std::vector<std::pair<uint8_t, uint8_t>>& lines_through(int p) const {
        return lines_through_[p];
    }

    // Coordinate-functional families only (n of them).
    std::vector<HyperplaneFamily> coordinate_hyperplanes() const;
    // All (3^n - 1)/2 families.
    std::vector<HyperplaneFamily> all_hyperplane_families() const;

    // Figure layout: 9x9 grid for n=4 (subgrid = first two coordinates),
    // 3x9 for n=3, 3x3 for n=2, 1x3 for n=1.
    std::pair<int, int> grid_shape() const;
    std::pair<int, int> grid_position(int p) const;

  private:
    explicit Geometry(int n);

    int n_;
    int num_points_;
    PointSet universe_;
    std::array<std::array<uint8_t, 4>, 81> coords_{};
    std::array<std::array<uint8_t, 81>, 81> add_{};
    std::array<uint8_t, 81> neg_{};
    std::array<std::array<uint8_t, 81>, 81> third_{};
    std::array<std::array<uint8_t, 81>, 81> dot_{};
    std::vector<std::array<uint8_t, 3>> lines_;
    std::vector<std::vector<std::pair<uint8_t, uint8_t>>> lines_through_;
};

// Sizes of s's intersections with the 3 slices, sorted descending.
std::array<int, 3> hyperplane_profile(const PointSet& s, const HyperplaneFamily& h);

// The set s + a (vector translation applied pointwise).
PointSet translate_set(const Geometry& g, PointSet s, int a);

}  // namespace capset
