#include "kstab/polytope.hpp"

#include <algorithm>
#include <set>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b) {
    Rat out(0);
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

// Scales to the primitive integer vector with the same direction.
void make_primitive(Vec& v) {
    Int common_den(1);
    for (const auto& x : v) common_den = lcm(common_den, Int(denominator(x)));
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int g(0);
    for (const auto& x : v) {
        Int w = Int(numerator(x)) * (common_den / Int(denominator(x)));
        g = gcd(g, w);
        ints.push_back(std::move(w));
    }
    if (g == 0) return;  // zero vector
    g = abs(g);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(ints[i] / g);
}

// ---------------------------------------------------------------------------
// Double description over the homogenization cone.
//
// A point x of the polyhedron {c : form_j(c) >= 0} corresponds to the ray
// (1, x) of the cone {y in Q^{k+1} : y_0 >= 0, row_j . y >= 0} with
// row_j = (constant_j, coeffs_j). Lines track the lineality space of the
// intermediate cone (initially all of {y_0 = 0}); rays are kept extreme
// modulo that space, so the final x_0 > 0 rays are exactly the vertices.
// ---------------------------------------------------------------------------

struct Ray {
    Vec v;
    std::vector<bool> tight;  // per processed row
};

class DoubleDescription {
  public:
    explicit DoubleDescription(std::size_t dim) : dim_(dim) {
        Vec nonneg(dim + 1, Rat(0));
        nonneg[0] = 1;
        rows_.push_back(nonneg);  // y_0 >= 0, the homogenization constraint
        rays_.push_back(Ray{nonneg, {}});
        for (std::size_t i = 1; i <= dim; ++i) {
            Vec line(dim + 1, Rat(0));
            line[i] = 1;
            lines_.push_back(std::move(line));
        }
        refresh_tight_sets();
    }

    void insert(Vec row) {
        make_primitive(row);
        std::size_t pivot = lines_.size();
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            if (dot(row, lines_[i]) != 0) {
                pivot = i;
                break;
            }
        }

        if (pivot < lines_.size()) {
            absorb_line(row, pivot);
        } else {
            split_rays(row);
        }

        rows_.push_back(std::move(row));
        refresh_tight_sets();
    }

    // Returns vertices; throws on unbounded regions.
    std::vector<CoefficientPoint> extract() const {
        std::vector<CoefficientPoint> vertices;
        bool has_direction = !lines_.empty();
        for (const auto& ray : rays_) {
            if (ray.v[0] == 0) {
                has_direction = true;
                continue;
            }
            CoefficientPoint point(dim_);
            for (std::size_t i = 0; i < dim_; ++i) point[i] = ray.v[i + 1] / ray.v[0];
            vertices.push_back(std::move(point));
        }
        if (vertices.empty()) return {};  // empty region; recession directions are moot
        if (has_direction) throw contract_violation("region is unbounded");
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        return vertices;
    }

  private:
    // The new constraint sees a line: turn that line into the ray normalized
    // to value 1 and project every other generator onto the hyperplane
    // row . y = 0. Coefficients against old rows are unchanged, so
    // feasibility and tightness are preserved.
    void absorb_line(const Vec& row, std::size_t pivot) {
        Vec lplus = lines_[pivot];
        Rat value = dot(row, lplus);
        for (auto& x : lplus) x /= value;  // row . lplus = 1

        std::vector<Vec> new_lines;
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            if (i == pivot) continue;
            Vec adjusted = lines_[i];
            Rat t = dot(row, adjusted);
            for (std::size_t j = 0; j < adjusted.size(); ++j) adjusted[j] -= t * lplus[j];
            make_primitive(adjusted);
            new_lines.push_back(std::move(adjusted));
        }
        lines_ = std::move(new_lines);

        for (auto& ray : rays_) {
            Rat t = dot(row, ray.v);
            for (std::size_t j = 0; j < ray.v.size(); ++j) ray.v[j] -= t * lplus[j];
            make_primitive(ray.v);
        }
        make_primitive(lplus);
        rays_.push_back(Ray{std::move(lplus), {}});
        dedupe_rays();
    }

    void split_rays(const Vec& row) {
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Rat> values(rays_.size());
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            values[i] = dot(row, rays_[i].v);
            if (values[i] > 0)
                pos.push_back(i);
            else if (values[i] < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }

        std::vector<Ray> next;
        for (std::size_t i : pos) next.push_back(rays_[i]);
        for (std::size_t i : zero) next.push_back(rays_[i]);
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                if (!adjacent(p, n)) continue;
                Vec combo(rays_[p].v.size());
                for (std::size_t j = 0; j < combo.size(); ++j)
                    combo[j] = values[p] * rays_[n].v[j] - values[n] * rays_[p].v[j];
                make_primitive(combo);
                if (is_zero_vec(combo)) continue;
                next.push_back(Ray{std::move(combo), {}});
            }
        }
        rays_ = std::move(next);
        dedupe_rays();
    }

    // Combinatorial adjacency test of Fukuda-Prodon: p and n are adjacent
    // iff no third ray is tight on every row where both are tight.
    bool adjacent(std::size_t p, std::size_t n) const {
        const auto& tp = rays_[p].tight;
        const auto& tn = rays_[n].tight;
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (r == p || r == n) continue;
            const auto& tr = rays_[r].tight;
            bool covers = true;
            for (std::size_t j = 0; j < rows_.size() && covers; ++j)
                if (tp[j] && tn[j] && !tr[j]) covers = false;
            if (covers) return false;
        }
        return true;
    }

    void dedupe_rays() {
        std::sort(rays_.begin(), rays_.end(),
                  [](const Ray& a, const Ray& b) { return a.v < b.v; });
        rays_.erase(std::unique(rays_.begin(), rays_.end(),
                                [](const Ray& a, const Ray& b) { return a.v == b.v; }),
                    rays_.end());
    }

    void refresh_tight_sets() {
        for (auto& ray : rays_) {
            ray.tight.assign(rows_.size(), false);
            for (std::size_t j = 0; j < rows_.size(); ++j)
                ray.tight[j] = dot(rows_[j], ray.v) == 0;
        }
    }

    std::size_t dim_;
    std::vector<Vec> rows_;  // processed constraints, homogeneous
    std::vector<Vec> lines_;
    std::vector<Ray> rays_;
};

Vec homogeneous_row(const AffineForm& form) {
    Vec row;
    row.reserve(form.arity() + 1);
    row.push_back(form.constant);
    for (const auto& c : form.coeffs) row.push_back(c);
    return row;
}

// ---------------------------------------------------------------------------
// Small exact linear algebra for the hull side.
// ---------------------------------------------------------------------------

using Matrix = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {x : m x = 0}, deterministic from the rref free columns.
Matrix null_space(Matrix m, std::size_t cols) {
    if (m.empty()) {
        Matrix basis;
        for (std::size_t i = 0; i < cols; ++i) {
            Vec e(cols, Rat(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(cols, Rat(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        make_primitive(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves the square system a x = b; the caller guarantees a is invertible.
Vec solve(Matrix a, Vec b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    rref(a);
    Vec x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i].back();
    return x;
}

std::vector<CoefficientPoint> dedupe_sorted(std::vector<CoefficientPoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

AffineForm form_from_row(const Vec& row) {
    AffineForm form;
    form.constant = row[0];
    form.coeffs.assign(row.begin() + 1, row.end());
    return form;
}

void append_subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& current,
                    std::size_t start, std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
        current.push_back(i);
        append_subsets(n, k, current, i + 1, out);
        current.pop_back();
    }
}

Polytope empty_polytope(std::size_t dim) {
    Polytope out;
    out.dim_ambient = dim;
    out.hrep.push_back(HalfSpace{constant_form(Rat(-1), dim)});
    return out;
}

}  // namespace

std::vector<CoefficientPoint> enumerate_vertices(const std::vector<HalfSpace>& halfspaces,
                                                 std::size_t dim) {
    DoubleDescription dd(dim);
    for (const auto& hs : halfspaces) {
        if (hs.form.arity() != dim)
            throw contract_violation("half-space arity does not match ambient dimension");
        if (is_zero_vec(hs.form.coeffs)) {
            if (hs.form.constant < 0) return {};  // infeasible constant constraint
            continue;                             // vacuous
        }
        dd.insert(homogeneous_row(hs.form));
    }
    return dd.extract();
}

Polytope polytope_from_halfspaces(std::vector<HalfSpace> halfspaces, std::size_t dim) {
    Polytope out;
    out.dim_ambient = dim;
    out.vertices = enumerate_vertices(halfspaces, dim);
    out.hrep = std::move(halfspaces);
    return out;
}

Polytope convex_hull(const std::vector<CoefficientPoint>& input, std::size_t dim) {
    for (const auto& p : input)
        if (p.size() != dim) throw contract_violation("hull point dimension mismatch");
    auto points = dedupe_sorted(input);
    if (points.empty()) return empty_polytope(dim);

    Polytope out;
    out.dim_ambient = dim;
    const CoefficientPoint& base = points.front();

    // Basis of the affine hull directions.
    Matrix directions;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vec d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = points[i][j] - base[j];
        directions.push_back(std::move(d));
    }
    Matrix basis;
    for (const auto& d : directions) {
        Matrix trial = basis;
        trial.push_back(d);
        if (rank(trial) > basis.size()) basis.push_back(d);
    }
    const std::size_t adim = basis.size();

    // Equality pairs pinning the affine hull.
    for (const auto& normal : null_space(basis, dim)) {
        AffineForm eq;
        eq.coeffs = normal;
        eq.constant = -dot(normal, base);
        out.hrep.push_back(HalfSpace{eq});
        out.hrep.push_back(HalfSpace{Rat(-1) * eq});
    }

    if (adim == 0) {
        out.vertices = {base};
        return out;
    }

    // Affine coordinates u with p = base + B u, via the normal equations.
    Matrix gram(adim, Vec(adim));
    for (std::size_t i = 0; i < adim; ++i)
        for (std::size_t j = 0; j < adim; ++j) gram[i][j] = dot(basis[i], basis[j]);
    // Rows of M = (B^T B)^{-1} B^T, so that u = M (p - base).
    Matrix mapping(adim, Vec(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        Vec rhs(adim);
        for (std::size_t i = 0; i < adim; ++i) rhs[i] = basis[i][col];
        Vec x = solve(gram, rhs);
        for (std::size_t i = 0; i < adim; ++i) mapping[i][col] = x[i];
    }
    Matrix ucoords;
    for (const auto& p : points) {
        Vec diff(dim);
        for (std::size_t j = 0; j < dim; ++j) diff[j] = p[j] - base[j];
        Vec u(adim);
        for (std::size_t i = 0; i < adim; ++i) u[i] = dot(mapping[i], diff);
        ucoords.push_back(std::move(u));
    }

    // Facets of the full-dimensional hull in u-space: every affinely
    // independent adim-subset spans a candidate hyperplane; keep it when all
    // points lie on one closed side.
    std::set<Vec> facet_rows;  // (beta, alpha) with alpha.u + beta >= 0
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> scratch;
    append_subsets(points.size(), adim, scratch, 0, subsets);
    for (const auto& subset : subsets) {
        Matrix system;
        for (auto idx : subset) {
            Vec row = ucoords[idx];
            row.push_back(Rat(1));
            system.push_back(std::move(row));
        }
        Matrix hyperplanes = null_space(system, adim + 1);
        if (hyperplanes.size() != 1) continue;  // affinely dependent subset
        Vec h = hyperplanes.front();            // alpha = h[0..adim), constant = h[adim]
        int side = 0;
        bool valid = true;
        for (const auto& u : ucoords) {
            Rat value = h[adim];
            for (std::size_t i = 0; i < adim; ++i) value += h[i] * u[i];
            if (value == 0) continue;
            int s = value > 0 ? 1 : -1;
            if (side == 0) side = s;
            if (s != side) {
                valid = false;
                break;
            }
        }
        if (!valid || side == 0) continue;
        if (side < 0)
            for (auto& x : h) x = -x;
        Vec key(adim + 1);
        key[0] = h[adim];
        for (std::size_t i = 0; i < adim; ++i) key[i + 1] = h[i];
        make_primitive(key);
        facet_rows.insert(std::move(key));
    }

    // Pull facets back to ambient coordinates: alpha . u(c) + beta with
    // u(c) = M (c - base).
    for (const auto& key : facet_rows) {
        AffineForm facet;
        facet.coeffs.assign(dim, Rat(0));
        for (std::size_t i = 0; i < adim; ++i)
            for (std::size_t j = 0; j < dim; ++j) facet.coeffs[j] += key[i + 1] * mapping[i][j];
        facet.constant = key[0] - dot(facet.coeffs, base);
        out.hrep.push_back(HalfSpace{facet});
    }

    // A point is a vertex iff its tight facet normals span u-space.
    for (std::size_t p = 0; p < points.size(); ++p) {
        Matrix tight_normals;
        for (const auto& key : facet_rows) {
            Rat value = key[0];
            for (std::size_t i = 0; i < adim; ++i) value += key[i + 1] * ucoords[p][i];
            if (value == 0) tight_normals.push_back(Vec(key.begin() + 1, key.end()));
        }
        if (rank(tight_normals) == adim) out.vertices.push_back(points[p]);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

bool contains(const Polytope& polytope, const CoefficientPoint& point) {
    if (point.size() != polytope.dim_ambient)
        throw contract_violation("point dimension does not match polytope");
    if (polytope.is_empty()) return false;
    for (const auto& hs : polytope.hrep)
        if (hs.form(point) < 0) return false;
    return true;
}

bool equal(const Polytope& a, const Polytope& b) {
    if (a.dim_ambient != b.dim_ambient)
        throw contract_violation("polytope dimension mismatch");
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    for (const auto& v : a.vertices)
        if (!contains(b, v)) return false;
    for (const auto& v : b.vertices)
        if (!contains(a, v)) return false;
    return true;
}

Rat linear_min(const Polytope& polytope, const AffineForm& objective) {
    if (polytope.is_empty()) throw contract_violation("linear_min over empty polytope");
    Rat best = objective(polytope.vertices.front());
    for (std::size_t i = 1; i < polytope.vertices.size(); ++i)
        best = std::min(best, objective(polytope.vertices[i]));
    return best;
}

}  // namespace kstab
