#include "capset/orbits.hpp"

#include <algorithm>
#include <unordered_set>

#include "capset/errors.hpp"

namespace capset {

namespace {

struct FrameDfs {
    const Geometry& g;
    PointSet s, t;
    bool first_only;
    size_t limit;
    std::vector<AffineMap> out;

    int nframe = 0;
    std::array<int, 4> frame{};
    std::array<bool, 4> frame_in_s{};

    // per-level snapshots of the partial map
    std::array<std::array<uint8_t, 81>, 5> img{};
    std::array<PointSet, 5> spanned;      // source points with determined images
    std::array<PointSet, 5> img_spanned;  // their images

    bool build_frame() {
        PointSet sp = PointSet::single(0);
        auto grow = [&](int v) {
            sp = sp | translate_set(g, sp, v) | translate_set(g, sp, g.neg(v));
        };
        PointSet rest = s;
        while (!rest.empty()) {
            int p = rest.pop_lowest();
            if (sp.test(p)) continue;
            frame[nframe] = p;
            frame_in_s[nframe] = true;
            ++nframe;
            grow(p);
        }
        for (int p = 1; p < g.num_points() && nframe < g.n(); ++p) {
            if (sp.test(p)) continue;
            frame[nframe] = p;
            frame_in_s[nframe] = false;
            ++nframe;
            grow(p);
        }
        return nframe == g.n();
    }

    void emit(const std::array<uint8_t, 81>& full) {
        std::array<uint8_t, 4> cols{};
        for (int i = 0; i < g.n(); ++i) {
            int basis = 1;
            for (int k = g.n() - 1 - i; k > 0; --k) basis *= 3;
            cols[i] = full[basis];
        }
        out.push_back({map_from_columns(g, cols), 0});
        if (out.size() > limit) throw capacity_error("transporter collection exceeds limit");
    }

    void rec(int level) {
        if (level == nframe) {
            emit(img[level]);
            return;
        }
        const int f = frame[level];
        PointSet cands = frame_in_s[level] ? t : (g.universe() - t);
        cands = cands - img_spanned[level];
        while (!cands.empty() && !(first_only && !out.empty())) {
            int y = cands.pop_lowest();
            // extend the span by f -> y and check membership agreement
            auto& nimg = img[level + 1];
            nimg = img[level];
            PointSet nsp = spanned[level];
            PointSet nimg_sp = img_spanned[level];
            bool ok = true;
            PointSet base = spanned[level];
            for (int c = 1; c <= 2 && ok; ++c) {
                int cf = g.scale(c, f), cy = g.scale(c, y);
                PointSet m = base;
                while (!m.empty()) {
                    int x = m.pop_lowest();
                    int nx = g.add(x, cf);
                    int ny = g.add(nimg[x], cy);
                    if (s.test(nx) != t.test(ny)) {
                        ok = false;
                        break;
                    }
                    nimg[nx] = static_cast<uint8_t>(ny);
                    nsp.set(nx);
                    nimg_sp.set(ny);
                }
            }
            if (ok) {
                spanned[level + 1] = nsp;
                img_spanned[level + 1] = nimg_sp;
                rec(level + 1);
            }
        }
    }

    void run() {
        if (s.size() != t.size()) return;
        if (s.test(0) != t.test(0)) return;  // linear maps fix 0
        if (!build_frame()) return;
        img[0].fill(0);
        spanned[0] = PointSet::single(0);
        img_spanned[0] = PointSet::single(0);
        rec(0);
    }
};

}  // namespace

std::vector<AffineMap> linear_transporters(const Geometry& g, PointSet s, PointSet t,
                                           bool first_only, size_t limit) {
    FrameDfs dfs{g, s, t, first_only, limit};
    dfs.run();
    return std::move(dfs.out);
}

std::vector<AffineMap> affine_transporters(const Geometry& g, PointSet s, PointSet t,
                                           bool first_only, size_t limit) {
    std::vector<AffineMap> out;
    if (s.size() != t.size()) return out;
    if (s.empty()) {
        // every affine map works; enumerate via the frame DFS on empty sets
        for (int q0 = 0; q0 < g.num_points(); ++q0) {
            auto lin = linear_transporters(g, {}, {}, first_only, limit);
            for (auto& l : lin) {
                out.push_back({l.lin, static_cast<uint8_t>(q0)});
                if (out.size() > limit) throw capacity_error("transporter collection exceeds limit");
                if (first_only) return out;
            }
        }
        return out;
    }
    int p0 = s.lowest();
    PointSet s0 = translate_set(g, s, g.neg(p0));
    PointSet tq = t;
    while (!tq.empty()) {
        int q0 = tq.pop_lowest();
        PointSet t0 = translate_set(g, t, g.neg(q0));
        auto lin = linear_transporters(g, s0, t0, first_only, limit);
        for (auto& l : lin) {
            // x -> L(x - p0) + q0
            uint8_t tr = static_cast<uint8_t>(g.add(q0, g.neg(apply_point(g, l.lin, p0))));
            out.push_back({l.lin, tr});
            if (out.size() > limit) throw capacity_error("transporter collection exceeds limit");
        }
        if (first_only && !out.empty()) return out;
    }
    return out;
}

std::optional<AffineMap> transporter(const Geometry& g, PointSet s, PointSet t, Ambient ambient) {
    if (s == t) return affine_identity(g);
    auto found = (ambient == Ambient::GL) ? linear_transporters(g, s, t, true)
                                          : affine_transporters(g, s, t, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<AffineMap> setwise_stabilizer(const Geometry& g, PointSet s, Ambient ambient,
                                          size_t limit) {
    return (ambient == Ambient::GL) ? linear_transporters(g, s, s, false, limit)
                                    : affine_transporters(g, s, s, false, limit);
}

std::vector<PointSet> orbit_of_set(const Geometry& g, PointSet s,
                                   const std::vector<AffineMap>& gens, size_t limit) {
    std::unordered_set<PointSet, PointSetHash> seen{s};
    std::vector<PointSet> queue{s};
    std::vector<std::array<uint8_t, 81>> perms;
    perms.reserve(gens.size());
    for (const auto& m : gens) perms.push_back(point_perm(g, m));
    for (size_t head = 0; head < queue.size(); ++head) {
        PointSet cur = queue[head];
        for (const auto& perm : perms) {
            PointSet next = apply_perm(perm, cur);
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw capacity_error("orbit exceeds limit");
                queue.push_back(next);
            }
        }
    }
    std::sort(queue.begin(), queue.end(), PointSetLexLess{});
    return queue;
}

}  // namespace capset
