#include "capset/render.hpp"

#include <sstream>
#include <stdexcept>

namespace capset {

const char kAnchorGlyph = '@';
const char kBlockGlyphs[4] = {'A', 'B', 'C', 'D'};
const char* kSvgPalette[4] = {"#1b1b1b", "#b2182b", "#2166ac", "#4d9221"};

std::string render_ascii(const Geometry& g, const std::vector<PointSet>& blocks, int anchor) {
    if (blocks.size() > 4) throw std::invalid_argument("at most 4 blocks are rendered");
    auto [rows, cols] = g.grid_shape();
    std::vector<std::string> grid(rows, std::string(cols, '.'));
    for (size_t b = 0; b < blocks.size(); ++b)
        blocks[b].for_each([&](int p) {
            auto [r, c] = g.grid_position(p);
            grid[r][c] = blocks.size() == 1 ? '#' : kBlockGlyphs[b];
        });
    if (anchor >= 0) {
        auto [r, c] = g.grid_position(anchor);
        grid[r][c] = kAnchorGlyph;
    }
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            os << grid[r][c];
            // subgrid gutters follow the figure layout
            if (c + 1 < cols && g.n() >= 3 && (c + 1) % 3 == 0) os << ' ';
        }
        os << '\n';
        if (r + 1 < rows && g.n() == 4 && (r + 1) % 3 == 0) os << '\n';
    }
    return os.str();
}

std::string render_svg(const Geometry& g, const std::vector<PointSet>& blocks, int anchor) {
    if (blocks.size() > 4) throw std::invalid_argument("at most 4 blocks are rendered");
    auto [rows, cols] = g.grid_shape();
    const int cell = 24, margin = 12;
    const int width = cols * cell + 2 * margin, height = rows * cell + 2 * margin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (int r = 0; r <= rows; ++r)
        os << "<line x1=\"" << margin << "\" y1=\"" << margin + r * cell << "\" x2=\""
           << margin + cols * cell << "\" y2=\"" << margin + r * cell
           << "\" stroke=\"#cccccc\" stroke-width=\"" << ((g.n() >= 3 && r % 3 == 0) ? 2 : 1)
           << "\"/>\n";
    for (int c = 0; c <= cols; ++c)
        os << "<line x1=\"" << margin + c * cell << "\" y1=\"" << margin << "\" x2=\""
           << margin + c * cell << "\" y2=\"" << margin + rows * cell
           << "\" stroke=\"#cccccc\" stroke-width=\"" << ((g.n() >= 3 && c % 3 == 0) ? 2 : 1)
           << "\"/>\n";
    auto center = [&](int p) {
        auto [r, c] = g.grid_position(p);
        return std::make_pair(margin + c * cell + cell / 2, margin + r * cell + cell / 2);
    };
    for (size_t b = 0; b < blocks.size(); ++b)
        blocks[b].for_each([&](int p) {
            auto [x, y] = center(p);
            os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << cell / 3
               << "\" fill=\"" << kSvgPalette[b] << "\"/>\n";
        });
    if (anchor >= 0) {
        auto [x, y] = center(anchor);
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << cell / 3
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace capset
