#pragma once

#include <array>
#include <stdexcept>
#include <cstdint>
#include <utility>
#include <vector>

#include "capset/gf3.hpp"
#include "capset/pointset.hpp"

namespace capset {

bool is_cap(const Geometry& g, PointSet s);

// Whether no external point can be added while keeping s a cap.
// Precondition: is_cap(s).
bool is_complete_cap(const Geometry& g, PointSet s);

// Coordinate-wise sum mod 3 of all points, as a point index.
int cap_sum(const Geometry& g, PointSet s);

struct AnchorDecomposition {
    int anchor;
    std::vector<std::pair<int, int>> pairs;  // {p, third(anchor, p)}, p < partner
};

// Anchor structure of a maximal cap in even dimension (n = 2 or 4).
// Throws std::invalid_argument for n in {1,3} and std::domain_error when the
// pair-matching invariant fails (never for a genuine maximal cap).
AnchorDecomposition anchor_of(const Geometry& g, PointSet cap);

// Number of pairs {q,r} in cap completing a line with p; throws if p is in cap.
int completion_count(const Geometry& g, PointSet cap, int p);

// Depth-first enumeration of all caps with exactly `target` points inside
// `allowed`, emitted in lexicographic order of the sorted index lists.
// If forced_seed >= 0 only caps whose lowest point equals forced_seed are
// visited. fn(mask) returns false to stop the search.
template <class Fn>
void for_each_cap(const Geometry& g, PointSet allowed, int target, int forced_seed, Fn&& fn) {
    if (target == 0) {
        fn(PointSet{});
        return;
    }
    struct Dfs {
        const Geometry& g;
        Fn& fn;
        int target;
        PointSet mask{};
        std::array<uint8_t, 81> pts{};
        int npts = 0;
        bool stopped = false;

        void rec(PointSet cand) {
            while (!cand.empty() && !stopped) {
                if (npts + cand.size() < target) return;
                int p = cand.pop_lowest();
                PointSet next = cand;
                for (int j = 0; j < npts; ++j) next.reset(g.third_unchecked(p, pts[j]));
                mask.set(p);
                pts[npts++] = p;
                if (npts == target) {
                    if (!fn(mask)) stopped = true;
                } else {
                    rec(next);
                }
                --npts;
                mask.reset(p);
            }
        }
    } dfs{g, fn, target};

    if (forced_seed >= 0) {
        if (!allowed.test(forced_seed)) return;
        dfs.mask.set(forced_seed);
        dfs.pts[dfs.npts++] = forced_seed;
        PointSet cand = allowed.above(forced_seed);
        if (target == 1) {
            fn(dfs.mask);
            return;
        }
        dfs.rec(cand);
    } else {
        dfs.rec(allowed);
    }
}

// Exhaustive search for the largest cap inside `allowed` (n <= 3 scale).
struct CapSearchStats {
    int max_size = 0;
    uint64_t nodes = 0;
};
CapSearchStats max_cap_search(const Geometry& g, PointSet allowed);

// Largest cap size, established by search: exhaustive DFS for n <= 3; for
// n = 4 a 20-cap is constructed and checked complete (the exhaustive no-21-cap
// proof lives in no21cap_search).
int max_cap_size(const Geometry& g);

// All maximal caps with anchor 0 in AG(4,3), lexicographic order (8424 sets).
// Cached after the first computation.
const std::vector<PointSet>& anchor0_caps(const Geometry& g);

// The lexicographically least 20-cap with anchor 0. Cached.
PointSet canonical_cap(const Geometry& g);

// Translates of the anchor-0 caps by a.
std::vector<PointSet> caps_with_anchor(const Geometry& g, int a);

// Every maximal cap of AG(n,3), n <= 4, in lexicographic order.
std::vector<PointSet> enumerate_maximal_caps(const Geometry& g, int jobs);

// Pair-level DFS for anchored caps: caps that are unions of pairs
// {x, third(anchor, x)} drawn from `allowed`, visited in lexicographic order
// of the sorted index lists. With seed_lowest the pair of the lowest allowed
// point is forced, so each unordered residual split is reached exactly once.
// fn(mask) returns false to stop.
template <class Fn>
void for_each_anchored_cap_in(const Geometry& g, PointSet allowed, int anchor, int npairs,
                              bool seed_lowest, Fn&& fn) {
    struct Dfs {
        const Geometry& g;
        Fn& fn;
        int anchor;
        std::vector<int> mins;
        PointSet mask{}, forb{};
        std::array<uint8_t, 81> pts{};
        int npts = 0;
        bool stopped = false;

        bool push_pair(int p) {
            int q = g.third_unchecked(anchor, p);
            if (forb.test(p) || forb.test(q)) return false;
            for (int j = 0; j < npts; ++j) forb.set(g.third_unchecked(p, pts[j]));
            pts[npts++] = static_cast<uint8_t>(p);
            for (int j = 0; j < npts; ++j) forb.set(g.third_unchecked(q, pts[j]));
            pts[npts++] = static_cast<uint8_t>(q);
            mask.set(p);
            mask.set(q);
            return true;
        }

        void rec(int idx, int pairs_left) {
            if (pairs_left == 0) {
                if (!fn(static_cast<const PointSet&>(mask))) stopped = true;
                return;
            }
            for (int i = idx; i + pairs_left <= static_cast<int>(mins.size()) && !stopped; ++i) {
                PointSet m0 = mask, f0 = forb;
                int n0 = npts;
                if (push_pair(mins[i])) rec(i + 1, pairs_left - 1);
                mask = m0;
                forb = f0;
                npts = n0;
            }
        }
    } dfs{g, fn, anchor};
    if (allowed.test(anchor)) return;
    PointSet rest = allowed;
    while (!rest.empty()) {
        int x = rest.pop_lowest();
        int y = g.third_unchecked(anchor, x);
        if (y > x && allowed.test(y)) {
            dfs.mins.push_back(x);
            rest.reset(y);
        }
    }
    if (static_cast<int>(dfs.mins.size()) < npairs) return;
    if (seed_lowest) {
        if (dfs.mins.empty() || dfs.mins[0] != allowed.lowest()) return;
        if (!dfs.push_pair(dfs.mins[0])) return;
        dfs.rec(1, npairs - 1);
    } else {
        dfs.rec(0, npairs);
    }
}

// Anchor-0 maximal caps of AG(4,3) (or AG(2,3)) in lexicographic order.
template <class Fn>
void for_each_anchor0_cap(const Geometry& g, Fn&& fn) {
    if (g.n() != 2 && g.n() != 4)
        throw std::invalid_argument("anchored caps exist only in dimensions 2 and 4");
    PointSet allowed = g.universe();
    allowed.reset(0);
    for_each_anchored_cap_in(g, allowed, 0, g.n() == 4 ? 10 : 2, false, fn);
}

// Exhaustive no-21-cap proof for AG(4,3): symmetry-pruned DFS over all caps
// whose image under the affine normalization has sorted prefix (0, 1, 3).
struct No21Result {
    bool cap21_found = false;
    uint64_t nodes = 0;
    uint64_t caps20_visited = 0;   // only when certify_anchors
    uint64_t caps20_anchored = 0;  // ditto
};
No21Result no21cap_search(const Geometry& g, int jobs, bool certify_anchors);

}  // namespace capset
