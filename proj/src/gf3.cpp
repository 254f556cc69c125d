#include "capset/gf3.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace capset {

static int pow3(int n) {
    int r = 1;
    while (n--) r *= 3;
    return r;
}

Geometry::Geometry(int n) : n_(n), num_points_(pow3(n)) {
    if (n < 1 || n > 4) throw std::invalid_argument("dimension must be in [1,4]");
    universe_ = PointSet::full(num_points_);

    for (int p = 0; p < num_points_; ++p) {
        int v = p;
        for (int i = n_ - 1; i >= 0; --i) {
            coords_[p][i] = static_cast<uint8_t>(v % 3);
            v /= 3;
        }
    }
    for (int p = 0; p < num_points_; ++p) {
        int neg = 0;
        for (int i = 0; i < n_; ++i) neg = neg * 3 + (3 - coords_[p][i]) % 3;
        neg_[p] = static_cast<uint8_t>(neg);
        for (int q = 0; q < num_points_; ++q) {
            int sum = 0, dp = 0;
            for (int i = 0; i < n_; ++i) {
                sum = sum * 3 + (coords_[p][i] + coords_[q][i]) % 3;
                dp += coords_[p][i] * coords_[q][i];
            }
            add_[p][q] = static_cast<uint8_t>(sum);
            dot_[p][q] = static_cast<uint8_t>(dp % 3);
        }
    }
    for (int p = 0; p < num_points_; ++p)
        for (int q = 0; q < num_points_; ++q) third_[p][q] = neg_[add_[p][q]];

    // lex order by construction: p ascending, q ascending, r determined
    for (int p = 0; p < num_points_; ++p)
        for (int q = p + 1; q < num_points_; ++q) {
            int r = third_[p][q];
            if (r > q) lines_.push_back({static_cast<uint8_t>(p), static_cast<uint8_t>(q),
                                         static_cast<uint8_t>(r)});
        }
    lines_through_.resize(num_points_);
    for (const auto& ln : lines_) {
        lines_through_[ln[0]].push_back({ln[1], ln[2]});
        lines_through_[ln[1]].push_back({ln[0], ln[2]});
        lines_through_[ln[2]].push_back({ln[0], ln[1]});
    }
}

const Geometry& Geometry::of(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("dimension must be in [1,4]");
    static std::once_flag flags[4];
    static const Geometry* cache[4] = {nullptr, nullptr, nullptr, nullptr};
    std::call_once(flags[n - 1], [n] { cache[n - 1] = new Geometry(n); });
    return *cache[n - 1];
}

int Geometry::point_from_coords(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != n_)
        throw std::invalid_argument("coordinate count does not match dimension");
    int p = 0;
    for (int c : coords) {
        if (c < 0 || c > 2) throw std::invalid_argument("coordinate outside {0,1,2}");
        p = p * 3 + c;
    }
    return p;
}

int Geometry::third_point(int p, int q) const {
    if (p == q) throw std::invalid_argument("third_point needs two distinct points");
    return third_[p][q];
}

bool Geometry::is_line(int p, int q, int r) const {
    if (p == q || p == r || q == r) return false;
    return add_[add_[p][q]][r] == 0;
}

std::vector<HyperplaneFamily> Geometry::coordinate_hyperplanes() const {
    std::vector<HyperplaneFamily> out;
    for (int i = 0; i < n_; ++i) {
        std::vector<int> c(n_, 0);
        c[i] = 1;
        HyperplaneFamily h;
        h.normal = point_from_coords(c);
        for (int p = 0; p < num_points_; ++p) h.slices[dot_[h.normal][p]].set(p);
        out.push_back(h);
    }
    return out;
}

std::vector<HyperplaneFamily> Geometry::all_hyperplane_families() const {
    std::vector<HyperplaneFamily> out;
    for (int v = 1; v < num_points_; ++v) {
        // keep one representative per {v, -v}: first nonzero trit equal to 1
        int lead = 0;
        for (int i = 0; i < n_; ++i)
            if (coords_[v][i] != 0) {
                lead = coords_[v][i];
                break;
            }
        if (lead != 1) continue;
        HyperplaneFamily h;
        h.normal = v;
        for (int p = 0; p < num_points_; ++p) h.slices[dot_[v][p]].set(p);
        out.push_back(h);
    }
    return out;
}

std::pair<int, int> Geometry::grid_shape() const {
    switch (n_) {
        case 1: return {1, 3};
        case 2: return {3, 3};
        case 3: return {3, 9};
        default: return {9, 9};
    }
}

std::pair<int, int> Geometry::grid_position(int p) const {
    const auto& c = coords_[p];
    switch (n_) {
        case 1: return {0, c[0]};
        case 2: return {c[0], c[1]};
        case 3: return {c[1], 3 * c[0] + c[2]};
        default: return {3 * c[0] + c[2], 3 * c[1] + c[3]};
    }
}

std::array<int, 3> hyperplane_profile(const PointSet& s, const HyperplaneFamily& h) {
    std::array<int, 3> prof{};
    for (int i = 0; i < 3; ++i) prof[i] = (s & h.slices[i]).size();
    std::sort(prof.begin(), prof.end(), std::greater<int>());
    return prof;
}

PointSet translate_set(const Geometry& g, PointSet s, int a) {
    if (a == 0) return s;
    PointSet out;
    s.for_each([&](int p) { out.set(g.add(p, a)); });
    return out;
}

}  // namespace capset
