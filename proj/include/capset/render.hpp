#pragma once

#include <string>
#include <vector>

#include "capset/gf3.hpp"
#include "capset/pointset.hpp"

namespace capset {

// Fixed glyph set: anchor '@', blocks 'A'..'D', empty '.'.
// Fixed SVG palette (block fill colors, anchor black ring).
extern const char kAnchorGlyph;
extern const char kBlockGlyphs[4];
extern const char* kSvgPalette[4];

std::string render_ascii(const Geometry& g, const std::vector<PointSet>& blocks, int anchor);
std::string render_svg(const Geometry& g, const std::vector<PointSet>& blocks, int anchor);

}  // namespace capset
