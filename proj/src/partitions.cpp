#include "capset/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "capset/parallel.hpp"

namespace capset {

void Partition4::canonicalize() {
    std::sort(blocks.begin(), blocks.end(), PointSetLexLess{});
}

uint64_t Partition4::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(anchor);
    for (const auto& b : blocks) h = (h ^ b.hash()) * 1099511628211ull;
    return h;
}

bool Partition4::well_formed(const Geometry& g) const {
    PointSet u = PointSet::single(anchor);
    int total = 1;
    for (const auto& b : blocks) {
        if (!u.disjoint(b)) return false;
        u |= b;
        total += b.size();
    }
    return total == g.num_points() && u == g.universe();
}

Partition4 apply_to_partition(const Geometry& g, const std::array<uint8_t, 81>& perm,
                              const Partition4& p) {
    Partition4 out;
    out.anchor = perm[p.anchor];
    for (int i = 0; i < 4; ++i) out.blocks[i] = apply_perm(perm, p.blocks[i]);
    out.canonicalize();
    (void)g;
    return out;
}

std::vector<std::pair<PointSet, PointSet>> cap_splits(const Geometry& g, PointSet residual) {
    std::vector<std::pair<PointSet, PointSet>> out;
    if (residual.empty()) return out;
    int half = residual.size() / 2;
    if (half * 2 != residual.size()) throw std::invalid_argument("residual size must be even");
    int anchor = cap_sum(g, residual);  // sum of two anchored blocks is -2a = a
    if (g.n() == 4 && half == 20 && !residual.test(anchor)) {
        // blocks of an AG(4,3) partition pair up through the removed anchor,
        // so both halves are unions of anchor pairs (the verified Prop 3.4 sweep)
        for_each_anchored_cap_in(g, residual, anchor, 10, true, [&](PointSet b) {
            PointSet other = residual - b;
            if (is_cap(g, other)) out.push_back({b, other});
            return true;
        });
        return out;
    }
    int seed = residual.lowest();
    for_each_cap(g, residual, half, seed, [&](PointSet b) {
        PointSet other = residual - b;
        if (is_cap(g, other)) out.push_back({b, other});
        return true;
    });
    return out;
}

int count_cap_splits(const Geometry& g, PointSet residual) {
    int count = 0;
    if (residual.empty()) return 0;
    int half = residual.size() / 2;
    int anchor = cap_sum(g, residual);
    if (g.n() == 4 && half == 20 && !residual.test(anchor)) {
        for_each_anchored_cap_in(g, residual, anchor, 10, true, [&](PointSet b) {
            if (is_cap(g, residual - b)) ++count;
            return true;
        });
        return count;
    }
    int seed = residual.lowest();
    for_each_cap(g, residual, half, seed, [&](PointSet b) {
        if (is_cap(g, residual - b)) ++count;
        return true;
    });
    return count;
}

const std::vector<PointSet>& all_maximal_caps4(const Geometry& g, int jobs) {
    static std::once_flag flag;
    static std::vector<PointSet> caps;
    std::call_once(flag, [&] { caps = enumerate_maximal_caps(g, jobs); });
    return caps;
}

std::vector<PointSet> disjoint_caps(const Geometry& g, PointSet s, int jobs) {
    std::vector<PointSet> out;
    for (const auto& c : all_maximal_caps4(g, jobs))
        if (c.disjoint(s)) out.push_back(c);
    return out;
}

bool verify_anchor_intersection(const Geometry& g, PointSet s, int jobs) {
    const auto& base = anchor0_caps(g);
    int s_anchor = anchor_of(g, s).anchor;
    auto bad = sharded_map<uint64_t>(g.num_points(), jobs, [&](int a) {
        if (g.add(a, 0) == s_anchor) return static_cast<uint64_t>(0);
        uint64_t misses = 0;
        for (const auto& c : base)
            if (translate_set(g, c, a).disjoint(s)) ++misses;
        return misses;
    });
    uint64_t total = 0;
    for (uint64_t m : bad) total += m;
    return total == 0;
}

std::vector<Partition4> complete_to_partitions(const Geometry& g, PointSet s, PointSet c) {
    if (!s.disjoint(c)) throw std::invalid_argument("caps must be disjoint");
    auto sa = anchor_of(g, s), ca = anchor_of(g, c);
    if (sa.anchor != ca.anchor) throw std::invalid_argument("caps must share their anchor");
    PointSet residual = g.universe() - s - c;
    residual.reset(sa.anchor);
    std::vector<Partition4> out;
    for (const auto& [d, e] : cap_splits(g, residual)) {
        Partition4 p{sa.anchor, {s, c, d, e}};
        p.canonicalize();
        out.push_back(p);
    }
    return out;
}

int DisjointClassification::class_of(PointSet c) const {
    auto it = std::lower_bound(caps.begin(), caps.end(), c, PointSetLexLess{});
    if (it == caps.end() || !(*it == c)) return -1;
    return split_count[it - caps.begin()];
}

DisjointClassification classify_disjoint_caps(const Geometry& g, PointSet s, int jobs) {
    DisjointClassification dc;
    dc.caps = disjoint_caps(g, s, jobs);
    int anchor = anchor_of(g, s).anchor;
    PointSet residual_base = g.universe() - s;
    residual_base.reset(anchor);
    dc.split_count = sharded_map<int>(static_cast<int>(dc.caps.size()), jobs, [&](int i) {
        return count_cap_splits(g, residual_base - dc.caps[i]);
    });
    for (int k : dc.split_count) {
        if (k == 1)
            ++dc.one;
        else if (k == 2)
            ++dc.two;
        else if (k == 6)
            ++dc.six;
        else
            throw std::domain_error("disjoint cap with unexpected completion count");
    }
    return dc;
}

SPartitions partitions_containing(const Geometry& g, PointSet s,
                                  const DisjointClassification& dc, int jobs) {
    int anchor = anchor_of(g, s).anchor;
    PointSet residual_base = g.universe() - s;
    residual_base.reset(anchor);
    auto shards = sharded_map<std::vector<Partition4>>(
        static_cast<int>(dc.caps.size()), jobs, [&](int i) {
            std::vector<Partition4> part;
            for (const auto& [d, e] : cap_splits(g, residual_base - dc.caps[i])) {
                Partition4 p{anchor, {s, dc.caps[i], d, e}};
                p.canonicalize();
                part.push_back(p);
            }
            return part;
        });
    std::vector<Partition4> all;
    for (auto& v : shards) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const Partition4& a, const Partition4& b) {
        for (int i = 0; i < 4; ++i) {
            if (a.blocks[i] == b.blocks[i]) continue;
            return PointSet::lex_less(a.blocks[i], b.blocks[i]);
        }
        return false;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());

    SPartitions sp;
    sp.parts = std::move(all);
    for (const auto& p : sp.parts) {
        if (!p.well_formed(g)) throw std::domain_error("malformed partition");
        int completable = -1, sixes = 0;
        for (int b = 0; b < 4; ++b) {
            if (p.blocks[b] == s) continue;
            int k = dc.class_of(p.blocks[b]);
            if (k == 1 || k == 2) {
                if (completable >= 0) throw std::domain_error("two completable blocks");
                completable = b;
            } else if (k == 6) {
                ++sixes;
            } else {
                throw std::domain_error("partition block is not a classified disjoint cap");
            }
        }
        if (completable < 0 || sixes != 2)
            throw std::domain_error("partition lacks the six/six/completable block pattern");
        sp.completable_block.push_back(completable);
        int k = dc.class_of(p.blocks[completable]);
        sp.cls.push_back(k);
        if (k == 1)
            ++sp.e1;
        else
            ++sp.e2;
    }
    return sp;
}

int pair_count(const Geometry& g, PointSet a, PointSet b) {
    if (!a.disjoint(b)) throw std::invalid_argument("pair_count needs disjoint caps");
    auto aa = anchor_of(g, a), ba = anchor_of(g, b);
    if (aa.anchor != ba.anchor) throw std::invalid_argument("caps must share their anchor");
    PointSet residual = g.universe() - a - b;
    residual.reset(aa.anchor);
    return count_cap_splits(g, residual);
}

std::pair<int, int> six_profile(const Geometry& g, PointSet s, PointSet s6,
                                const SPartitions& sp) {
    (void)g;
    (void)s;
    int e1 = 0, e2 = 0;
    for (size_t i = 0; i < sp.parts.size(); ++i) {
        const auto& p = sp.parts[i];
        bool has = false;
        for (const auto& b : p.blocks)
            if (b == s6) has = true;
        if (!has) continue;
        (sp.cls[i] == 1 ? e1 : e2)++;
    }
    return {e1, e2};
}

Anchor0Census count_partitions_anchor0(const Geometry& g, int jobs) {
    const auto& base = anchor0_caps(g);
    std::vector<int> holders;  // caps containing point 1
    for (int i = 0; i < static_cast<int>(base.size()); ++i)
        if (base[i].test(1)) holders.push_back(i);

    auto shards = sharded_map<Anchor0Census>(
        static_cast<int>(holders.size()), jobs, [&](int hi) {
            Anchor0Census acc;
            const PointSet a = base[holders[hi]];
            PointSet r1 = g.universe() - a;
            r1.reset(0);
            int seed1 = r1.lowest();
            std::unordered_map<PointSet, int, PointSetHash> pair_memo;
            auto pair_count_memo = [&](PointSet x) {
                auto it = pair_memo.find(x);
                if (it != pair_memo.end()) return it->second;
                PointSet residual = g.universe() - a - x;
                residual.reset(0);
                int m = count_cap_splits(g, residual);
                pair_memo.emplace(x, m);
                return m;
            };
            // every block disjoint from a shares its anchor 0 (the verified
            // Prop 3.4 sweep), so the pair-level DFS is exhaustive here
            for_each_anchored_cap_in(g, r1, 0, 10, true, [&](PointSet b) {
                PointSet r2 = r1 - b;
                auto splits = cap_splits(g, r2);
                int m = static_cast<int>(splits.size());
                if (m == 0) return true;
                if (m != 1 && m != 2 && m != 6)
                    throw std::domain_error("pair with unexpected partition count");
                for (const auto& [c, d] : splits) {
                    acc.total++;
                    if (m == 1)
                        acc.e1++;
                    else if (m == 2)
                        acc.e2++;
                    else {
                        int m2 = pair_count_memo(c);
                        int cls;
                        if (m2 == 1 || m2 == 2) {
                            cls = m2;
                        } else {
                            int m3 = pair_count_memo(d);
                            if (m3 != 1 && m3 != 2)
                                throw std::domain_error("six-pair partition without completable pairing");
                            cls = m3;
                        }
                        (cls == 1 ? acc.e1 : acc.e2)++;
                    }
                }
                return true;
            });
            return acc;
        });
    Anchor0Census total;
    for (const auto& s : shards) {
        total.total += s.total;
        total.e1 += s.e1;
        total.e2 += s.e2;
    }
    return total;
}

std::vector<std::vector<int>> partition_orbits(const Geometry& g, const MatrixGroup& grp,
                                               const SPartitions& sp) {
    std::unordered_map<uint64_t, int> index;
    for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i)
        index.emplace(sp.parts[i].hash(), i);
    std::vector<std::array<uint8_t, 81>> perms;
    perms.reserve(grp.order());
    for (const auto& m : grp.elems) perms.push_back(point_perm(g, m));

    std::vector<int> orbit_of(sp.parts.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < static_cast<int>(sp.parts.size()); ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> members;
        for (const auto& perm : perms) {
            Partition4 q = apply_to_partition(g, perm, sp.parts[i]);
            auto it = index.find(q.hash());
            if (it == index.end() || !(sp.parts[it->second] == q))
                throw std::domain_error("group does not act on the partition family");
            if (orbit_of[it->second] < 0) {
                orbit_of[it->second] = static_cast<int>(orbits.size());
                members.push_back(it->second);
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return orbits;
}

std::pair<int, int> transporter_split(const Geometry& g, const MatrixGroup& stab,
                                      const SPartitions& sp, int pi, int qi) {
    if (sp.cls[pi] != sp.cls[qi])
        throw std::invalid_argument("transporter_split needs same-class partitions");
    const Partition4& p = sp.parts[pi];
    const Partition4& q = sp.parts[qi];
    PointSet a = p.blocks[sp.completable_block[pi]];
    PointSet a2 = q.blocks[sp.completable_block[qi]];
    // the two six blocks of each partition, skipping s and the completable one
    PointSet s_block;  // the common reference cap: the block equal in both? identified by class slot
    // blocks of p: s, a, six1, six2 -- s is whichever block also lies in q... safer: caller's
    // partitions both contain the reference cap; find it as the shared block.
    std::vector<PointSet> psix, qsix;
    PointSet shared;
    bool found_shared = false;
    for (const auto& bp : p.blocks)
        for (const auto& bq : q.blocks)
            if (bp == bq && !found_shared) {
                shared = bp;
                found_shared = true;
            }
    if (!found_shared) throw std::invalid_argument("partitions do not share the reference cap");
    for (int b = 0; b < 4; ++b) {
        if (p.blocks[b] == shared || b == sp.completable_block[pi]) continue;
        psix.push_back(p.blocks[b]);
    }
    for (int b = 0; b < 4; ++b) {
        if (q.blocks[b] == shared || b == sp.completable_block[qi]) continue;
        qsix.push_back(q.blocks[b]);
    }
    if (psix.size() != 2 || qsix.size() != 2)
        throw std::domain_error("partition six-pair extraction failed");
    int n_aligned = 0, n_swapped = 0;
    for (const auto& m : stab.elems) {
        auto perm = point_perm(g, m);
        if (!(apply_perm(perm, a) == a2)) continue;
        PointSet ib = apply_perm(perm, psix[0]);
        PointSet ic = apply_perm(perm, psix[1]);
        if (ib == qsix[0] && ic == qsix[1])
            ++n_aligned;
        else if (ib == qsix[1] && ic == qsix[0])
            ++n_swapped;
    }
    return {n_aligned, n_swapped};
}

std::optional<AffineMap> transporter_partitions(const Geometry& g, const Partition4& p,
                                                const Partition4& q) {
    // reduce to linear maps between the anchor-0 translates
    auto translate_partition = [&](const Partition4& x, int by) {
        Partition4 out;
        out.anchor = g.add(x.anchor, by);
        for (int i = 0; i < 4; ++i) out.blocks[i] = translate_set(g, x.blocks[i], by);
        out.canonicalize();
        return out;
    };
    Partition4 p0 = translate_partition(p, g.neg(p.anchor));
    Partition4 q0 = translate_partition(q, g.neg(q.anchor));

    PointSet a = p0.blocks[0];
    auto stab_a = linear_transporters(g, a, a, false);
    auto block_set_eq = [&](const Partition4& x, const Partition4& y) {
        for (int i = 0; i < 4; ++i)
            if (!(x.blocks[i] == y.blocks[i])) return false;
        return true;
    };
    for (const auto& target : q0.blocks) {
        auto reps = linear_transporters(g, a, target, true);
        if (reps.empty()) continue;
        for (const auto& h : stab_a) {
            AffineMap cand = compose(g, reps[0], h);
            auto perm = point_perm(g, cand);
            Partition4 image = apply_to_partition(g, perm, p0);
            if (image.anchor == q0.anchor && block_set_eq(image, q0)) {
                // conjugate back: T_{anchor_q} o cand o T_{-anchor_p}
                AffineMap pre = affine_identity(g);
                pre.t = static_cast<uint8_t>(g.neg(p.anchor));
                AffineMap post = affine_identity(g);
                post.t = static_cast<uint8_t>(q.anchor);
                return compose(g, post, compose(g, cand, pre));
            }
        }
    }
    return std::nullopt;
}

PairStructure pair_structure(const Geometry& g, const Partition4& p) {
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings) {
        int c1 = pair_count(g, p.blocks[pr[0]], p.blocks[pr[1]]);
        if (c1 != 1 && c1 != 2) continue;
        int c2 = pair_count(g, p.blocks[pr[2]], p.blocks[pr[3]]);
        PairStructure out;
        out.pairs[0] = {pr[0], pr[1]};
        out.pairs[1] = {pr[2], pr[3]};
        out.counts = {c1, c2};
        return out;
    }
    throw std::domain_error("partition has no completable pairing");
}

LowDimCensus low_dim_partitions(const Geometry& g) {
    LowDimCensus out;
    if (g.n() != 2 && g.n() != 3)
        throw std::invalid_argument("low_dim_partitions covers n = 2 and n = 3");
    auto caps = enumerate_maximal_caps(g, 1);
    out.num_caps = static_cast<int>(caps.size());

    std::vector<LowDimPartition> parts;
    std::unordered_set<uint64_t> seen;
    auto part_hash = [](const LowDimPartition& p) {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(p.anchor + 1);
        for (const auto& b : p.blocks) h = (h ^ b.hash()) * 1099511628211ull;
        return h;
    };
    out.every_cap_in_unique_partition = true;
    for (const auto& c : caps) {
        LowDimPartition p;
        if (g.n() == 2) {
            int anchor = anchor_of(g, c).anchor;
            PointSet other = g.universe() - c;
            other.reset(anchor);
            if (!is_cap(g, other) || anchor_of(g, other).anchor != anchor) {
                out.every_cap_in_unique_partition = false;
                continue;
            }
            p.anchor = anchor;
            p.blocks = {c, other};
        } else {
            PointSet residual = g.universe() - c;
            auto splits = cap_splits(g, residual);
            // blocks must be maximal caps, i.e. 9-caps
            std::vector<std::pair<PointSet, PointSet>> good;
            for (auto& s : splits)
                if (s.first.size() == 9) good.push_back(s);
            if (good.size() != 1) {
                out.every_cap_in_unique_partition = false;
                continue;
            }
            p.anchor = -1;
            p.blocks = {c, good[0].first, good[0].second};
        }
        std::sort(p.blocks.begin(), p.blocks.end(), PointSetLexLess{});
        if (seen.insert(part_hash(p)).second) parts.push_back(p);
    }
    out.num_partitions = static_cast<int>(parts.size());

    // single affine orbit: BFS closure from the first partition
    if (!parts.empty()) {
        auto gens = aff_generators(g);
        std::vector<std::array<uint8_t, 81>> perms;
        for (const auto& m : gens) perms.push_back(point_perm(g, m));
        std::unordered_set<uint64_t> orbit;
        std::vector<LowDimPartition> queue{parts[0]};
        orbit.insert(part_hash(parts[0]));
        for (size_t head = 0; head < queue.size(); ++head) {
            LowDimPartition cur = queue[head];
            for (const auto& perm : perms) {
                LowDimPartition nxt;
                nxt.anchor = cur.anchor < 0 ? -1 : perm[cur.anchor];
                for (const auto& b : cur.blocks) nxt.blocks.push_back(apply_perm(perm, b));
                std::sort(nxt.blocks.begin(), nxt.blocks.end(), PointSetLexLess{});
                if (orbit.insert(part_hash(nxt)).second) queue.push_back(nxt);
            }
        }
        out.single_affine_orbit = orbit.size() == static_cast<size_t>(out.num_partitions);
        for (const auto& p : parts)
            if (!orbit.count(part_hash(p))) out.single_affine_orbit = false;
    }
    return out;
}

}  // namespace capset
