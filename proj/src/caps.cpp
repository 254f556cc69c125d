#include "capset/caps.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "capset/parallel.hpp"

namespace capset {

bool is_cap(const Geometry& g, PointSet s) {
    auto idx = s.to_indices();
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (s.test(g.third_unchecked(idx[i], idx[j]))) return false;
    return true;
}

bool is_complete_cap(const Geometry& g, PointSet s) {
    if (!is_cap(g, s)) throw std::invalid_argument("is_complete_cap requires a cap");
    PointSet outside = g.universe() - s;
    bool complete = true;
    outside.for_each([&](int p) {
        bool blocked = false;
        for (const auto& [q, r] : g.lines_through(p))
            if (s.test(q) && s.test(r)) {
                blocked = true;
                break;
            }
        if (!blocked) complete = false;
    });
    return complete;
}

int cap_sum(const Geometry& g, PointSet s) {
    int acc = 0;
    s.for_each([&](int p) { acc = g.add(acc, p); });
    return acc;
}

AnchorDecomposition anchor_of(const Geometry& g, PointSet cap) {
    if (g.n() != 2 && g.n() != 4)
        throw std::invalid_argument("anchors exist only in dimensions 2 and 4");
    AnchorDecomposition d;
    // k pairs each summing to -a give a cap sum of -k*a: k = 10 = 1 (mod 3)
    // in dimension 4, k = 2 in dimension 2
    d.anchor = g.n() == 4 ? g.neg(cap_sum(g, cap)) : cap_sum(g, cap);
    if (cap.test(d.anchor)) throw std::domain_error("anchor point lies inside the cap");
    PointSet left = cap;
    while (!left.empty()) {
        int p = left.pop_lowest();
        int q = g.third_unchecked(d.anchor, p);
        if (!left.test(q)) throw std::domain_error("cap does not pair up through its anchor");
        left.reset(q);
        d.pairs.push_back({p, q});
    }
    return d;
}

int completion_count(const Geometry& g, PointSet cap, int p) {
    if (cap.test(p)) throw std::invalid_argument("completion_count needs a point outside the cap");
    int count = 0;
    for (const auto& [q, r] : g.lines_through(p))
        if (cap.test(q) && cap.test(r)) ++count;
    return count;
}

namespace {

struct MaxDfs {
    const Geometry& g;
    CapSearchStats stats;
    std::array<uint8_t, 81> pts{};
    int npts = 0;

    void rec(PointSet cand) {
        while (!cand.empty()) {
            if (npts + cand.size() <= stats.max_size) return;
            int p = cand.pop_lowest();
            PointSet next = cand;
            for (int j = 0; j < npts; ++j) next.reset(g.third_unchecked(p, pts[j]));
            pts[npts++] = static_cast<uint8_t>(p);
            ++stats.nodes;
            stats.max_size = std::max(stats.max_size, npts);
            rec(next);
            --npts;
        }
    }
};

}  // namespace

CapSearchStats max_cap_search(const Geometry& g, PointSet allowed) {
    MaxDfs dfs{g};
    dfs.rec(allowed);
    return dfs.stats;
}

int max_cap_size(const Geometry& g) {
    if (g.n() <= 3) return max_cap_search(g, g.universe()).max_size;
    // A 20-cap is constructed by the anchored search and checked complete;
    // no21cap_search supplies the exhaustive upper bound.
    PointSet best = canonical_cap(g);
    if (!is_complete_cap(g, best)) throw std::domain_error("canonical 20-cap is not complete");
    return best.size();
}

const std::vector<PointSet>& anchor0_caps(const Geometry& g) {
    if (g.n() != 4) throw std::invalid_argument("anchor0_caps is the n = 4 enumeration");
    static std::once_flag flag;
    static std::vector<PointSet> caps;
    std::call_once(flag, [&] {
        caps.reserve(8424);
        for_each_anchor0_cap(g, [&](PointSet s) {
            caps.push_back(s);
            return true;
        });
    });
    return caps;
}

PointSet canonical_cap(const Geometry& g) {
    if (g.n() != 4) throw std::invalid_argument("canonical_cap is defined for n = 4");
    static std::once_flag flag;
    static PointSet cap;
    std::call_once(flag, [&] {
        for_each_anchor0_cap(g, [&](PointSet s) {
            cap = s;
            return false;  // first leaf of the lexicographic DFS
        });
    });
    return cap;
}

std::vector<PointSet> caps_with_anchor(const Geometry& g, int a) {
    const auto& base = anchor0_caps(g);
    if (a == 0) return base;
    std::vector<PointSet> out;
    out.reserve(base.size());
    for (const auto& s : base) out.push_back(translate_set(g, s, a));
    std::sort(out.begin(), out.end(), PointSetLexLess{});
    return out;
}

std::vector<PointSet> enumerate_maximal_caps(const Geometry& g, int jobs) {
    std::vector<PointSet> out;
    if (g.n() <= 3) {
        int k = max_cap_search(g, g.universe()).max_size;
        for_each_cap(g, g.universe(), k, -1, [&](PointSet s) {
            out.push_back(s);
            return true;
        });
        return out;  // DFS order is already lexicographic
    }
    const auto& base = anchor0_caps(g);
    auto shards = sharded_map<std::vector<PointSet>>(g.num_points(), jobs, [&](int a) {
        std::vector<PointSet> part;
        part.reserve(base.size());
        for (const auto& s : base) part.push_back(translate_set(g, s, a));
        return part;
    });
    out.reserve(base.size() * g.num_points());
    for (auto& part : shards) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), PointSetLexLess{});
    return out;
}

namespace {

// Affine maps fixing {0, 1, 3} as a set: images of 0,1,3 are a permutation of
// the triple, the two remaining basis images are free. Used to canonicalize
// the 4th point of the deep search prefix.
std::array<uint8_t, 81> canonical4_table(const Geometry& g) {
    std::array<uint8_t, 81> canon{};
    for (int p = 0; p < g.num_points(); ++p) canon[p] = static_cast<uint8_t>(p);
    const int triple[3] = {0, 1, 3};
    int perm3[6][3];
    {
        int k = 0;
        int idx[3] = {0, 1, 2};
        std::sort(idx, idx + 3);
        do {
            for (int i = 0; i < 3; ++i) perm3[k][i] = triple[idx[i]];
            ++k;
        } while (std::next_permutation(idx, idx + 3));
    }
    auto span_of = [&](std::vector<int> vecs) {
        PointSet sp = PointSet::single(0);
        for (int v : vecs) {
            PointSet grown = sp;
            grown |= translate_set(g, sp, v);
            grown |= translate_set(g, sp, g.neg(v));
            sp = grown;
        }
        return sp;
    };
    for (auto& images : perm3) {
        int b = images[0];
        int col3 = g.add(images[1], g.neg(b));  // image of e4 = point 1
        int col2 = g.add(images[2], g.neg(b));  // image of e3 = point 3
        PointSet span23 = span_of({col3, col2});
        for (int col1 = 1; col1 < g.num_points(); ++col1) {
            if (span23.test(col1)) continue;
            PointSet span123 = span_of({col3, col2, col1});
            for (int col0 = 1; col0 < g.num_points(); ++col0) {
                if (span123.test(col0)) continue;
                for (int p = 0; p < g.num_points(); ++p) {
                    int img = b;
                    img = g.add(img, g.scale(g.trit(p, 0), col0));
                    img = g.add(img, g.scale(g.trit(p, 1), col1));
                    img = g.add(img, g.scale(g.trit(p, 2), col2));
                    img = g.add(img, g.scale(g.trit(p, 3), col3));
                    if (img < canon[p]) canon[p] = static_cast<uint8_t>(img);
                }
            }
        }
    }
    return canon;
}

struct DeepDfs {
    const Geometry& g;
    int capacity;  // prune when npts + |cand| < capacity
    bool certify;
    No21Result res;
    std::array<uint8_t, 81> pts{};
    int npts = 0;

    void visit_leaf(PointSet mask) {
        if (npts >= 21) {
            res.cap21_found = true;
            return;
        }
        if (!certify || npts != 20) return;
        ++res.caps20_visited;
        int anchor = g.neg(cap_sum(g, mask));
        bool ok = !mask.test(anchor);
        if (ok) {
            PointSet m = mask;
            while (!m.empty()) {
                int p = m.pop_lowest();
                int q = g.third_unchecked(anchor, p);
                if (p == q || !mask.test(q)) {
                    ok = false;
                    break;
                }
                m.reset(q);
            }
        }
        if (ok) ++res.caps20_anchored;
    }

    void rec(PointSet mask, PointSet cand) {
        bool extended = false;
        while (!cand.empty()) {
            if (npts + cand.size() < capacity) break;
            int p = cand.pop_lowest();
            PointSet next = cand;
            for (int j = 0; j < npts; ++j) next.reset(g.third_unchecked(p, pts[j]));
            pts[npts++] = static_cast<uint8_t>(p);
            mask.set(p);
            ++res.nodes;
            extended = true;
            if (npts >= 21)
                visit_leaf(mask);
            else
                rec(mask, next);
            mask.reset(p);
            --npts;
        }
        if (certify && !extended && npts == 20) visit_leaf(mask);
    }
};

}  // namespace

No21Result no21cap_search(const Geometry& g, int jobs, bool certify_anchors) {
    if (g.n() != 4) throw std::invalid_argument("no21cap_search targets AG(4,3)");
    auto canon4 = canonical4_table(g);

    // Forced prefix (0, 1, 3): any 21-cap has an affine image whose three
    // smallest points are exactly these (2 is excluded by the line {0,1,2}).
    const int prefix[3] = {0, 1, 3};
    PointSet mask0;
    std::array<uint8_t, 81> pts0{};
    int npts0 = 0;
    PointSet cand = g.universe();
    cand.reset(0);
    for (int p : prefix) {
        // no third-point exclusions fire inside the prefix itself
        for (int j = 0; j < npts0; ++j) cand.reset(g.third_unchecked(p, pts0[j]));
        pts0[npts0++] = static_cast<uint8_t>(p);
        mask0.set(p);
        cand.reset(p);
    }
    cand = cand.above(3);

    // Shard on the canonicalized 4th point together with the 5th.
    struct Task {
        int p4, p5;
        PointSet mask, cand;
    };
    std::vector<Task> tasks;
    PointSet c4 = cand;
    while (!c4.empty()) {
        int p4 = c4.pop_lowest();
        if (canon4[p4] != p4) continue;
        PointSet cand5 = cand.above(p4);
        for (int j = 0; j < npts0; ++j) cand5.reset(g.third_unchecked(p4, pts0[j]));
        PointSet m4 = mask0;
        m4.set(p4);
        PointSet c5 = cand5;
        while (!c5.empty()) {
            int p5 = c5.pop_lowest();
            PointSet cand6 = cand5.above(p5);
            cand6.reset(g.third_unchecked(p5, p4));
            for (int j = 0; j < npts0; ++j) cand6.reset(g.third_unchecked(p5, pts0[j]));
            PointSet m5 = m4;
            m5.set(p5);
            tasks.push_back({p4, p5, m5, cand6});
        }
    }

    int capacity = certify_anchors ? 20 : 21;
    auto partials =
        sharded_map<No21Result>(static_cast<int>(tasks.size()), jobs, [&](int ti) {
            const Task& t = tasks[ti];
            DeepDfs dfs{g, capacity, certify_anchors};
            dfs.pts = pts0;
            dfs.npts = npts0;
            dfs.pts[dfs.npts++] = static_cast<uint8_t>(t.p4);
            dfs.pts[dfs.npts++] = static_cast<uint8_t>(t.p5);
            dfs.rec(t.mask, t.cand);
            return dfs.res;
        });

    No21Result total;
    total.nodes = 5 + tasks.size();  // prefix nodes plus the sharded roots
    for (const auto& r : partials) {
        total.cap21_found |= r.cap21_found;
        total.nodes += r.nodes;
        total.caps20_visited += r.caps20_visited;
        total.caps20_anchored += r.caps20_anchored;
    }
    return total;
}

}  // namespace capset
