#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capset/gf3.hpp"
#include "capset/linear.hpp"
#include "capset/pointset.hpp"

namespace capset {

enum class Ambient { GL, Aff };

// All linear maps sending s onto t (setwise, exactly), found by a frame DFS:
// images of a maximal independent subset of s are chosen inside t, frame
// completions outside s map outside t, and every newly spanned point must
// agree in membership. With first_only the search stops at one witness.
std::vector<AffineMap> linear_transporters(const Geometry& g, PointSet s, PointSet t,
                                           bool first_only, size_t limit = 1u << 24);

std::vector<AffineMap> affine_transporters(const Geometry& g, PointSet s, PointSet t,
                                           bool first_only, size_t limit = 1u << 24);

// First witness mapping s onto t within the ambient group, if any.
std::optional<AffineMap> transporter(const Geometry& g, PointSet s, PointSet t, Ambient ambient);

// Every ambient element fixing s setwise. Throws capacity_error past `limit`.
std::vector<AffineMap> setwise_stabilizer(const Geometry& g, PointSet s, Ambient ambient,
                                          size_t limit = 1u << 24);

// BFS closure of s under the given maps, canonically sorted.
std::vector<PointSet> orbit_of_set(const Geometry& g, PointSet s,
                                   const std::vector<AffineMap>& gens, size_t limit = 1u << 24);

}  // namespace capset
