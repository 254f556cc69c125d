#include "capset/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "capset/errors.hpp"

namespace capset {

uint64_t pack_map(const AffineMap& m) {
    uint64_t k = m.t;
    for (int i = 0; i < 4; ++i) k |= static_cast<uint64_t>(m.lin.rows[i]) << (8 * (i + 1));
    return k;
}

bool MatrixGroup::contains(const AffineMap& m) const {
    uint64_t key = pack_map(m);
    auto it = std::lower_bound(elems.begin(), elems.end(), key,
                               [](const AffineMap& a, uint64_t k) { return pack_map(a) < k; });
    return it != elems.end() && pack_map(*it) == key;
}

bool MatrixGroup::all_linear() const {
    for (const auto& m : elems)
        if (m.t != 0) return false;
    return true;
}

MatrixGroup make_group(const Geometry& g, std::vector<AffineMap> elems) {
    std::sort(elems.begin(), elems.end(),
              [](const AffineMap& a, const AffineMap& b) { return pack_map(a) < pack_map(b); });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return {&g, std::move(elems)};
}

bool is_closed_group(const MatrixGroup& grp) {
    const Geometry& g = *grp.geom;
    if (!grp.contains(affine_identity(g))) return false;
    for (const auto& a : grp.elems) {
        if (!grp.contains(inverse(g, a))) return false;
        for (const auto& b : grp.elems)
            if (!grp.contains(compose(g, a, b))) return false;
    }
    return true;
}

MatrixGroup generated_subgroup(const Geometry& g, const std::vector<AffineMap>& gens,
                               size_t limit) {
    std::unordered_map<uint64_t, size_t> seen;
    std::vector<AffineMap> elems{affine_identity(g)};
    seen.emplace(pack_map(elems[0]), 0);
    for (size_t head = 0; head < elems.size(); ++head) {
        AffineMap cur = elems[head];
        for (const auto& gen : gens) {
            AffineMap next = compose(g, gen, cur);
            if (seen.emplace(pack_map(next), elems.size()).second) {
                elems.push_back(next);
                if (elems.size() > limit) throw capacity_error("generated subgroup exceeds limit");
            }
        }
    }
    return make_group(g, std::move(elems));
}

int element_order(const Geometry& g, const AffineMap& m) {
    AffineMap id = affine_identity(g);
    AffineMap cur = m;
    int k = 1;
    while (!(cur == id)) {
        cur = compose(g, cur, m);
        ++k;
        if (k > 10000) throw std::domain_error("element order runaway");
    }
    return k;
}

std::vector<AffineMap> greedy_generators(const MatrixGroup& grp) {
    const Geometry& g = *grp.geom;
    std::vector<AffineMap> gens;
    MatrixGroup have = make_group(g, {affine_identity(g)});
    for (const auto& e : grp.elems) {
        if (have.contains(e)) continue;
        gens.push_back(e);
        have = generated_subgroup(g, gens, grp.order());
        if (have.order() == grp.order()) break;
    }
    return gens;
}

MatrixGroup normal_closure(const MatrixGroup& grp, const std::vector<AffineMap>& seed) {
    const Geometry& g = *grp.geom;
    auto conjugators = greedy_generators(grp);
    std::vector<AffineMap> gens = seed;
    for (;;) {
        MatrixGroup h = generated_subgroup(g, gens, grp.order());
        bool grew = false;
        std::vector<AffineMap> fresh;
        for (const auto& x : gens)
            for (const auto& c : conjugators) {
                AffineMap y = compose(g, compose(g, c, x), inverse(g, c));
                if (!h.contains(y)) {
                    fresh.push_back(y);
                    grew = true;
                }
            }
        if (!grew) return h;
        gens.insert(gens.end(), fresh.begin(), fresh.end());
    }
}

bool is_simple_group(const MatrixGroup& grp) {
    const Geometry& g = *grp.geom;
    AffineMap id = affine_identity(g);
    if (grp.order() <= 1) return false;
    for (const auto& x : grp.elems) {
        if (x == id) continue;
        if (normal_closure(grp, {x}).order() != grp.order()) return false;
    }
    return true;
}

GroupFingerprint fingerprint(const MatrixGroup& grp, size_t limit) {
    if (grp.order() > limit) throw capacity_error("group too large to fingerprint");
    const Geometry& g = *grp.geom;
    GroupFingerprint fp;
    fp.order = grp.order();
    for (const auto& m : grp.elems) {
        ++fp.element_order_histogram[element_order(g, m)];
        ++fp.determinant_split[determinant(g, m.lin)];
    }
    fp.abelian = true;
    fp.center_order = 0;
    for (const auto& a : grp.elems) {
        bool central = true;
        for (const auto& b : grp.elems) {
            if (!(compose(g, a, b) == compose(g, b, a))) {
                central = false;
                fp.abelian = false;
                break;
            }
        }
        if (central) ++fp.center_order;
    }
    auto gens = greedy_generators(grp);
    std::vector<AffineMap> comms;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            AffineMap c = compose(g, compose(g, a, b),
                                  inverse(g, compose(g, b, a)));
            comms.push_back(c);
        }
    fp.derived_subgroup_order = grp.order() <= 1 ? 1 : normal_closure(grp, comms).order();
    return fp;
}

int TableGroup::inverse_of(int a) const {
    for (int b = 0; b < order; ++b)
        if (at(a, b) == id) return b;
    throw std::domain_error("element has no inverse (table is not a group)");
}

int TableGroup::order_of(int a) const {
    int cur = a, k = 1;
    while (cur != id) {
        cur = at(cur, a);
        ++k;
        if (k > order + 1) throw std::domain_error("element order runaway");
    }
    return k;
}

std::vector<int> TableGroup::element_orders() const {
    std::vector<int> out(order);
    for (int a = 0; a < order; ++a) out[a] = order_of(a);
    return out;
}

TableGroup table_from_matrix_group(const MatrixGroup& grp) {
    const Geometry& g = *grp.geom;
    TableGroup t;
    t.order = static_cast<int>(grp.order());
    t.name = "matrix-group";
    std::unordered_map<uint64_t, int> index;
    for (int i = 0; i < t.order; ++i) index.emplace(pack_map(grp.elems[i]), i);
    t.mul.resize(static_cast<size_t>(t.order) * t.order);
    for (int i = 0; i < t.order; ++i)
        for (int j = 0; j < t.order; ++j) {
            auto it = index.find(pack_map(compose(g, grp.elems[i], grp.elems[j])));
            if (it == index.end()) throw std::domain_error("element set is not closed");
            t.mul[static_cast<size_t>(i) * t.order + j] = static_cast<uint16_t>(it->second);
        }
    t.id = index.at(pack_map(affine_identity(g)));
    return t;
}

TableGroup cyclic_group(int k) {
    TableGroup t;
    t.order = k;
    t.name = "Z" + std::to_string(k);
    t.mul.resize(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            t.mul[static_cast<size_t>(a) * k + b] = static_cast<uint16_t>((a + b) % k);
    return t;
}

TableGroup direct_product(const TableGroup& a, const TableGroup& b) {
    TableGroup t;
    t.order = a.order * b.order;
    t.name = a.name + "x" + b.name;
    t.id = a.id * b.order + b.id;
    t.mul.resize(static_cast<size_t>(t.order) * t.order);
    for (int x = 0; x < t.order; ++x)
        for (int y = 0; y < t.order; ++y) {
            int xa = x / b.order, xb = x % b.order;
            int ya = y / b.order, yb = y % b.order;
            t.mul[static_cast<size_t>(x) * t.order + y] =
                static_cast<uint16_t>(a.at(xa, ya) * b.order + b.at(xb, yb));
        }
    return t;
}

TableGroup semidirect_cyclic(int k, int m, int u) {
    // (a, b) * (c, d) = (a + u^b c, b + d)
    std::vector<int> upow(m);
    upow[0] = 1 % k;
    for (int i = 1; i < m; ++i) upow[i] = (upow[i - 1] * u) % k;
    if ((upow[m - 1] * u) % k != 1 % k)
        throw std::invalid_argument("semidirect action must satisfy u^m = 1 mod k");
    TableGroup t;
    t.order = k * m;
    t.name = "Z" + std::to_string(k) + ":" + std::to_string(u) + ":Z" + std::to_string(m);
    t.mul.resize(static_cast<size_t>(t.order) * t.order);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < k; ++c)
                for (int d = 0; d < m; ++d) {
                    int x = a * m + b, y = c * m + d;
                    int ra = (a + upow[b] * c) % k, rb = (b + d) % m;
                    t.mul[static_cast<size_t>(x) * t.order + y] =
                        static_cast<uint16_t>(ra * m + rb);
                }
    return t;
}

TableGroup semidirect(const TableGroup& n, int m, const std::vector<int>& alpha,
                      const std::string& name) {
    // check alpha^m = id
    std::vector<std::vector<int>> pow(m, std::vector<int>(n.order));
    for (int x = 0; x < n.order; ++x) pow[0][x] = x;
    for (int i = 1; i < m; ++i)
        for (int x = 0; x < n.order; ++x) pow[i][x] = alpha[pow[i - 1][x]];
    for (int x = 0; x < n.order; ++x)
        if (alpha[pow[m - 1][x]] != x)
            throw std::invalid_argument("semidirect action must have order dividing m");
    TableGroup t;
    t.order = n.order * m;
    t.name = name;
    t.id = n.id * m + 0;
    t.mul.resize(static_cast<size_t>(t.order) * t.order);
    for (int a = 0; a < n.order; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < n.order; ++c)
                for (int d = 0; d < m; ++d) {
                    int x = a * m + b, y = c * m + d;
                    int ra = n.at(a, pow[b][c]), rb = (b + d) % m;
                    t.mul[static_cast<size_t>(x) * t.order + y] =
                        static_cast<uint16_t>(ra * m + rb);
                }
    return t;
}

namespace {

// Minimal generating sequence over the table, greedy in element order.
std::vector<int> table_generators(const TableGroup& t) {
    std::vector<int> gens;
    std::vector<char> have(t.order, 0);
    have[t.id] = 1;
    int have_count = 1;
    auto close_over = [&](std::vector<int>& queue) {
        for (size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (int gi : gens) {
                int nx = t.at(cur, gi);
                if (!have[nx]) {
                    have[nx] = 1;
                    ++have_count;
                    queue.push_back(nx);
                }
                int nx2 = t.at(gi, cur);
                if (!have[nx2]) {
                    have[nx2] = 1;
                    ++have_count;
                    queue.push_back(nx2);
                }
            }
        }
    };
    while (have_count < t.order) {
        int pick = -1;
        for (int e = 0; e < t.order; ++e)
            if (!have[e]) {
                pick = e;
                break;
            }
        gens.push_back(pick);
        std::fill(have.begin(), have.end(), 0);
        have[t.id] = 1;
        have_count = 1;
        std::vector<int> queue{t.id};
        close_over(queue);
    }
    return gens;
}

// Derivation of every element as id or (previous element * generator).
struct Derivation {
    std::vector<int> order_elems;           // BFS order, order_elems[0] = id
    std::vector<std::pair<int, int>> from;  // (index into order_elems, generator slot)
};

Derivation derive(const TableGroup& t, const std::vector<int>& gens) {
    Derivation d;
    std::vector<int> pos(t.order, -1);
    d.order_elems.push_back(t.id);
    d.from.push_back({-1, -1});
    pos[t.id] = 0;
    for (size_t head = 0; head < d.order_elems.size(); ++head) {
        int cur = d.order_elems[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int nx = t.at(cur, gens[gi]);
            if (pos[nx] < 0) {
                pos[nx] = static_cast<int>(d.order_elems.size());
                d.order_elems.push_back(nx);
                d.from.push_back({static_cast<int>(head), static_cast<int>(gi)});
            }
        }
    }
    return d;
}

bool try_images(const TableGroup& a, const TableGroup& b, const Derivation& d,
                const std::vector<int>& images, std::vector<int>* full) {
    std::vector<int> phi(a.order, -1);
    std::vector<char> hit(b.order, 0);
    std::vector<int> img_of_pos(d.order_elems.size());
    img_of_pos[0] = b.id;
    phi[d.order_elems[0]] = b.id;
    hit[b.id] = 1;
    for (size_t i = 1; i < d.order_elems.size(); ++i) {
        int prev = img_of_pos[d.from[i].first];
        int gimg = images[d.from[i].second];
        int val = b.at(prev, gimg);
        img_of_pos[i] = val;
        int elem = d.order_elems[i];
        phi[elem] = val;
        if (hit[val]) return false;  // not injective
        hit[val] = 1;
    }
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (phi[a.at(x, y)] != b.at(phi[x], phi[y])) return false;
    if (full) *full = phi;
    return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const TableGroup& a, const TableGroup& b) {
    if (a.order != b.order) return std::nullopt;
    auto ea = a.element_orders();
    auto eb = b.element_orders();
    {
        auto ha = ea, hb = eb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    auto gens = table_generators(a);
    if (gens.empty()) {  // trivial group
        std::vector<int> phi{b.id};
        return phi;
    }
    auto d = derive(a, gens);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int y = 0; y < b.order; ++y)
            if (eb[y] == ea[gens[i]]) candidates[i].push_back(y);
    std::vector<int> images(gens.size());
    std::vector<int> full;
    // DFS over candidate tuples
    std::vector<size_t> idx(gens.size(), 0);
    size_t level = 0;
    while (true) {
        if (idx[level] == candidates[level].size()) {
            if (level == 0) return std::nullopt;
            idx[level] = 0;
            --level;
            ++idx[level];
            continue;
        }
        images[level] = candidates[level][idx[level]];
        if (level + 1 < gens.size()) {
            ++level;
            continue;
        }
        if (try_images(a, b, d, images, &full)) return full;
        ++idx[level];
    }
}

std::vector<std::vector<int>> automorphisms(const TableGroup& grp) {
    std::vector<std::vector<int>> out;
    auto ea = grp.element_orders();
    auto gens = table_generators(grp);
    if (gens.empty()) return {{grp.id}};
    auto d = derive(grp, gens);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (int y = 0; y < grp.order; ++y)
            if (ea[y] == ea[gens[i]]) candidates[i].push_back(y);
    std::vector<int> images(gens.size());
    std::vector<int> full;
    std::vector<size_t> idx(gens.size(), 0);
    size_t level = 0;
    while (true) {
        if (idx[level] == candidates[level].size()) {
            if (level == 0) break;
            idx[level] = 0;
            --level;
            ++idx[level];
            continue;
        }
        images[level] = candidates[level][idx[level]];
        if (level + 1 < gens.size()) {
            ++level;
            continue;
        }
        if (try_images(grp, grp, d, images, &full)) out.push_back(full);
        ++idx[level];
    }
    return out;
}

GroupFingerprint fingerprint(const TableGroup& grp) {
    GroupFingerprint fp;
    fp.order = grp.order;
    for (int a = 0; a < grp.order; ++a) ++fp.element_order_histogram[grp.order_of(a)];
    fp.abelian = true;
    for (int a = 0; a < grp.order; ++a) {
        bool central = true;
        for (int b = 0; b < grp.order; ++b)
            if (grp.at(a, b) != grp.at(b, a)) {
                central = false;
                fp.abelian = false;
                break;
            }
        if (central) ++fp.center_order;
    }
    // derived subgroup via full commutator closure (orders here are small)
    std::vector<char> in(grp.order, 0);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    };
    add(grp.id);
    for (int a = 0; a < grp.order; ++a)
        for (int b = 0; b < grp.order; ++b) {
            int c = grp.at(grp.at(a, b), grp.inverse_of(grp.at(b, a)));
            add(c);
        }
    for (size_t head = 0; head < elems.size(); ++head)
        for (size_t j = 0; j < elems.size(); ++j) add(grp.at(elems[head], elems[j]));
    fp.derived_subgroup_order = elems.size();
    return fp;
}

}  // namespace capset
