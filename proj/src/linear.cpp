#include "capset/linear.hpp"

#include <stdexcept>

namespace capset {

static int basis_index(const Geometry& g, int i) {
    int p = 1;
    for (int k = g.n() - 1 - i; k > 0; --k) p *= 3;
    return p;
}

LinearMap identity_map(const Geometry& g) {
    LinearMap m;
    for (int i = 0; i < g.n(); ++i) m.rows[i] = static_cast<uint8_t>(basis_index(g, i));
    return m;
}

AffineMap affine_identity(const Geometry& g) { return {identity_map(g), 0}; }

int apply_point(const Geometry& g, const LinearMap& m, int p) {
    int out = 0;
    for (int i = 0; i < g.n(); ++i) out = out * 3 + g.dot(m.rows[i], p);
    return out;
}

int apply_point(const Geometry& g, const AffineMap& m, int p) {
    return g.add(apply_point(g, m.lin, p), m.t);
}

PointSet apply_set(const Geometry& g, const AffineMap& m, PointSet s) {
    PointSet out;
    s.for_each([&](int p) { out.set(apply_point(g, m, p)); });
    return out;
}

LinearMap compose(const Geometry& g, const LinearMap& a, const LinearMap& b) {
    LinearMap c;
    for (int i = 0; i < g.n(); ++i) {
        int row = 0;
        for (int k = 0; k < g.n(); ++k) row = g.add(row, g.scale(g.trit(a.rows[i], k), b.rows[k]));
        c.rows[i] = static_cast<uint8_t>(row);
    }
    return c;
}

AffineMap compose(const Geometry& g, const AffineMap& a, const AffineMap& b) {
    // x -> A(Bx + t_b) + t_a
    AffineMap c;
    c.lin = compose(g, a.lin, b.lin);
    c.t = static_cast<uint8_t>(g.add(apply_point(g, a.lin, b.t), a.t));
    return c;
}

namespace {

// Gaussian elimination over GF(3) on trit rows; used for det and inverse.
struct Elim {
    int n;
    int mat[4][4];    // working copy
    int aug[4][4];    // identity augmentation
    int det = 1;
    bool singular = false;

    Elim(const Geometry& g, const LinearMap& m) : n(g.n()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mat[i][j] = g.trit(m.rows[i], j);
                aug[i][j] = (i == j) ? 1 : 0;
            }
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (mat[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) {
                singular = true;
                det = 0;
                return;
            }
            if (pivot != col) {
                std::swap(mat[pivot], mat[col]);
                std::swap(aug[pivot], aug[col]);
                det = (3 - det) % 3;
            }
            if (mat[col][col] == 2) {
                det = (det * 2) % 3;
                for (int j = 0; j < n; ++j) {
                    mat[col][j] = (mat[col][j] * 2) % 3;
                    aug[col][j] = (aug[col][j] * 2) % 3;
                }
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || mat[r][col] == 0) continue;
                int f = mat[r][col];
                for (int j = 0; j < n; ++j) {
                    mat[r][j] = (mat[r][j] + (3 - f) * mat[col][j]) % 3;
                    aug[r][j] = (aug[r][j] + (3 - f) * aug[col][j]) % 3;
                }
            }
        }
    }
};

}  // namespace

int determinant(const Geometry& g, const LinearMap& m) { return Elim(g, m).det; }

LinearMap inverse(const Geometry& g, const LinearMap& m) {
    Elim e(g, m);
    if (e.singular) throw std::domain_error("singular matrix has no inverse");
    LinearMap inv;
    for (int i = 0; i < g.n(); ++i) {
        int row = 0;
        for (int j = 0; j < g.n(); ++j) row = row * 3 + e.aug[i][j];
        inv.rows[i] = static_cast<uint8_t>(row);
    }
    return inv;
}

AffineMap inverse(const Geometry& g, const AffineMap& m) {
    AffineMap inv;
    inv.lin = inverse(g, m.lin);
    inv.t = static_cast<uint8_t>(g.neg(apply_point(g, inv.lin, m.t)));
    return inv;
}

LinearMap map_from_columns(const Geometry& g, const std::array<uint8_t, 4>& cols) {
    LinearMap m;
    for (int i = 0; i < g.n(); ++i) {
        int row = 0;
        for (int j = 0; j < g.n(); ++j) row = row * 3 + g.trit(cols[j], i);
        m.rows[i] = static_cast<uint8_t>(row);
    }
    return m;
}

std::array<uint8_t, 81> point_perm(const Geometry& g, const AffineMap& m) {
    std::array<uint8_t, 81> perm{};
    for (int p = 0; p < g.num_points(); ++p)
        perm[p] = static_cast<uint8_t>(apply_point(g, m, p));
    return perm;
}

PointSet apply_perm(const std::array<uint8_t, 81>& perm, PointSet s) {
    PointSet out;
    s.for_each([&](int p) { out.set(perm[p]); });
    return out;
}

std::string to_trits(const Geometry& g, const LinearMap& m) {
    std::string s;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) s.push_back(static_cast<char>('0' + g.trit(m.rows[i], j)));
    return s;
}

std::string to_trits(const Geometry& g, const AffineMap& m) {
    std::string s = to_trits(g, m.lin);
    for (int j = 0; j < g.n(); ++j) s.push_back(static_cast<char>('0' + g.trit(m.t, j)));
    return s;
}

static int parse_trits(const std::string& s, size_t pos, int n) {
    int v = 0;
    for (int j = 0; j < n; ++j) {
        char c = s.at(pos + j);
        if (c < '0' || c > '2') throw std::invalid_argument("trit string must use {0,1,2}");
        v = v * 3 + (c - '0');
    }
    return v;
}

LinearMap linear_from_trits(const Geometry& g, const std::string& s) {
    const int n = g.n();
    if (static_cast<int>(s.size()) != n * n)
        throw std::invalid_argument("linear trit string must have n*n characters");
    LinearMap m;
    for (int i = 0; i < n; ++i) m.rows[i] = static_cast<uint8_t>(parse_trits(s, i * n, n));
    return m;
}

AffineMap affine_from_trits(const Geometry& g, const std::string& s) {
    const int n = g.n();
    if (static_cast<int>(s.size()) != n * n + n)
        throw std::invalid_argument("affine trit string must have n*n+n characters");
    AffineMap m;
    m.lin = linear_from_trits(g, s.substr(0, n * n));
    m.t = static_cast<uint8_t>(parse_trits(s, static_cast<size_t>(n) * n, n));
    return m;
}

uint64_t gl_order(int n) {
    uint64_t q = 1;
    for (int i = 0; i < n; ++i) q *= 3;
    uint64_t order = 1, p3 = 1;
    for (int i = 0; i < n; ++i) {
        order *= q - p3;
        p3 *= 3;
    }
    return order;
}

uint64_t aff_order(int n) {
    uint64_t q = 1;
    for (int i = 0; i < n; ++i) q *= 3;
    return gl_order(n) * q;
}

std::vector<AffineMap> gl_generators(const Geometry& g) {
    const int n = g.n();
    std::vector<AffineMap> gens;
    LinearMap id = identity_map(g);
    // transvections: add row j into row i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            LinearMap m = id;
            m.rows[i] = static_cast<uint8_t>(g.add(m.rows[i], m.rows[j]));
            gens.push_back({m, 0});
        }
    // determinant-2 representative
    LinearMap d = id;
    d.rows[0] = static_cast<uint8_t>(g.neg(d.rows[0]));
    gens.push_back({d, 0});
    return gens;
}

std::vector<AffineMap> aff_generators(const Geometry& g) {
    auto gens = gl_generators(g);
    for (int i = 0; i < g.n(); ++i) {
        AffineMap t = affine_identity(g);
        t.t = static_cast<uint8_t>(basis_index(g, i));
        gens.push_back(t);
    }
    return gens;
}

}  // namespace capset
