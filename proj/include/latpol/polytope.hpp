#ifndef LATPOL_POLYTOPE_HPP
#define LATPOL_POLYTOPE_HPP

// Lattice polytopes at desk scale: exact brute-force hull, lattice point
// enumeration of dilations, edges, unimodular maps and lattice projections.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "latpol/exact.hpp"

namespace latpol {

using LatticePoint = IntVec;

// Inward facet inequality: normal . x >= offset, normal primitive.
struct Facet {
    IntVec normal;
    Int offset;

    bool operator<(const Facet& o) const {
        return normal < o.normal || (normal == o.normal && offset < o.offset);
    }
};

// Affine unimodular lattice map x |-> linear x + translation.
struct AffineMap {
    IntMatrix linear;
    IntVec translation;

    LatticePoint operator()(const LatticePoint& x) const {
        return vec_add(linear.mul_vec(x), translation);
    }

    bool is_unimodular() const {
        if (linear.rows() != linear.cols()) return false;
        Int d = det(linear);
        return d == 1 || d == -1;
    }

    AffineMap inverse() const {
        IntMatrix inv = inverse_unimodular(linear);
        return {inv, vec_scale(-1, inv.mul_vec(translation))};
    }

    static AffineMap identity(std::size_t n) {
        return {IntMatrix::identity(n), IntVec(n, Int(0))};
    }
};

// Lattice isomorphism between the affine hull lattice of a polytope and
// Z^d: x = base + basis^T c with basis rows a saturated lattice basis.
struct AffineHullCoords {
    IntVec base;      // a lattice point of the polytope
    IntMatrix basis;  // d x n, rows span (affine hull - base) intersected with Z^n

    LatticePoint to_ambient(const IntVec& c) const {
        IntVec x = base;
        for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t j = 0; j < basis.cols(); ++j) x[j] += c[i] * basis.at(i, j);
        return x;
    }

    IntVec to_coords(const LatticePoint& x) const {
        IntVec w = vec_sub(x, base);
        RatVec b(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) b[j] = Rat(w[j]);
        auto sol = solve_rational(basis.transpose(), b);
        if (!sol) throw ConsistencyError("point outside affine hull lattice");
        IntVec c(basis.rows());
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if (boost::multiprecision::denominator((*sol)[i]) != 1)
                throw ConsistencyError("point not in affine hull lattice");
            c[i] = boost::multiprecision::numerator((*sol)[i]);
        }
        return c;
    }
};

namespace detail {

// A point is extreme iff it is not a convex combination of the others,
// decided exactly by Fourier-Motzkin on the combination system.
inline bool in_convex_hull(const LatticePoint& p, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    std::size_t n = p.size(), m = pts.size();
    std::vector<LinearConstraint> cs;
    for (std::size_t c = 0; c < n; ++c) {
        LinearConstraint lc;
        lc.coeffs.resize(m);
        for (std::size_t j = 0; j < m; ++j) lc.coeffs[j] = Rat(pts[j][c]);
        lc.offset = Rat(p[c]);
        lc.rel = Rel::Eq;
        cs.push_back(std::move(lc));
    }
    LinearConstraint sum;
    sum.coeffs.assign(m, Rat(1));
    sum.offset = 1;
    sum.rel = Rel::Eq;
    cs.push_back(std::move(sum));
    for (std::size_t j = 0; j < m; ++j) {
        LinearConstraint nn;
        nn.coeffs.assign(m, Rat(0));
        nn.coeffs[j] = 1;
        nn.offset = 0;
        nn.rel = Rel::Ge;
        cs.push_back(std::move(nn));
    }
    return fm_feasible(cs);
}

inline std::vector<LatticePoint> extreme_points(const std::vector<LatticePoint>& pts) {
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticePoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) out.push_back(pts[i]);
    }
    return out;
}

inline constexpr std::size_t kMaxHullVertices = 30;
inline constexpr std::size_t kMaxHullDim = 8;

// Every supporting hyperplane spanned by an affinely independent
// dim-subset of the given vertices, primitive inward normals, deduplicated.
inline std::vector<Facet> brute_force_facets(const std::vector<LatticePoint>& verts,
                                             std::size_t n) {
    if (n == 0) return {};
    if (verts.size() > kMaxHullVertices || n > kMaxHullDim)
        throw CapExceededError("hull caps exceeded (30 vertices / dim 8)");

    std::set<Facet> found;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    auto advance = [&]() {
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] <= verts.size() - n + k) {
                for (std::size_t j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    if (verts.size() < n) return {};
    do {
        std::vector<IntVec> diffs;
        for (std::size_t i = 1; i < n; ++i)
            diffs.push_back(vec_sub(verts[idx[i]], verts[idx[0]]));
        IntMatrix d = IntMatrix::from_rows(diffs);
        if (n > 1 && rank(d) != n - 1) continue;
        auto ker = kernel_lattice(n > 1 ? d : IntMatrix(0, 1));
        if (ker.size() != 1) continue;
        IntVec normal = primitive(ker.front());
        Int offset = dot(normal, verts[idx[0]]);
        bool above = false, below = false;
        for (const auto& v : verts) {
            Int s = dot(normal, v) - offset;
            if (s > 0) above = true;
            else if (s < 0) below = true;
            if (above && below) break;
        }
        if (above && below) continue; // not supporting
        if (below) {
            for (auto& x : normal) x = -x;
            offset = -offset;
        }
        found.insert({normal, offset});
    } while (advance());
    return {found.begin(), found.end()};
}

// LLL row reduction of a full-row-rank integer matrix; returns the
// unimodular U with U * rows short. Used to shrink coordinate spread
// before box/scan enumeration.
inline IntMatrix lll_unimodular(std::vector<IntVec> w) {
    std::size_t d = w.size();
    IntMatrix u = IntMatrix::identity(d);
    if (d <= 1) return u;

    std::vector<RatVec> mu(d, RatVec(d, Rat(0)));
    RatVec bnorm(d, Rat(0));
    std::vector<RatVec> star(d);

    auto gso = [&]() {
        std::size_t m = w[0].size();
        for (std::size_t i = 0; i < d; ++i) {
            RatVec s(m);
            for (std::size_t j = 0; j < m; ++j) s[j] = Rat(w[i][j]);
            for (std::size_t j = 0; j < i; ++j) {
                Rat num = 0;
                for (std::size_t t = 0; t < m; ++t) num += Rat(w[i][t]) * star[j][t];
                mu[i][j] = (bnorm[j] == 0) ? Rat(0) : num / bnorm[j];
                for (std::size_t t = 0; t < m; ++t) s[t] -= mu[i][j] * star[j][t];
            }
            star[i] = s;
            Rat nn = 0;
            for (std::size_t t = 0; t < m; ++t) nn += s[t] * s[t];
            bnorm[i] = nn;
        }
    };

    auto nearest = [](const Rat& q) {
        // round to nearest integer, ties toward zero
        Int two_n = 2 * boost::multiprecision::numerator(q);
        Int two_d = 2 * boost::multiprecision::denominator(q);
        Rat shifted = q >= 0 ? Rat(two_n + two_d / 2, two_d) : Rat(two_n - two_d / 2, two_d);
        return q >= 0 ? floor_rat(shifted) : ceil_rat(shifted);
    };

    gso();
    std::size_t k = 1;
    std::size_t guard = 0;
    while (k < d && guard++ < 10000) {
        for (std::size_t j = k; j-- > 0;) {
            Int q = nearest(mu[k][j]);
            if (q != 0) {
                for (std::size_t t = 0; t < w[k].size(); ++t) w[k][t] -= q * w[j][t];
                for (std::size_t t = 0; t < d; ++t) u.at(k, t) -= q * u.at(j, t);
                gso();
            }
        }
        Rat lhs = bnorm[k];
        Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(w[k], w[k - 1]);
            for (std::size_t t = 0; t < d; ++t) std::swap(u.at(k, t), u.at(k - 1, t));
            gso();
            k = std::max<std::size_t>(1, k - 1);
        }
    }
    return u;
}

// One level of the dilation-scan cascade. Rows read
//   coeffs . (x_1..x_j) >= koff * k + coff * c
// with k the dilation factor and c = 1 for interior counts.
struct ScanRow {
    IntVec coeffs;
    Int koff;
    Int coff;
};

struct ScanCascade {
    std::vector<std::vector<ScanRow>> levels; // levels[j] lives in j+1 variables
};

inline ScanCascade build_cascade(const std::vector<Facet>& facets, std::size_t dim) {
    ScanCascade cas;
    cas.levels.resize(dim);
    std::vector<ScanRow> cur;
    for (const auto& f : facets) cur.push_back({f.normal, f.offset, Int(1)});

    auto normalize_level = [](std::vector<ScanRow>& rows) {
        // primitive scaling + pareto filter per normal
        std::map<IntVec, std::vector<std::pair<Int, Int>>> by_normal;
        for (auto& r : rows) {
            IntVec full = r.coeffs;
            full.push_back(r.koff);
            full.push_back(r.coff);
            Int g = vec_gcd(full);
            if (g > 1) {
                for (auto& x : r.coeffs) x /= g;
                r.koff /= g;
                r.coff /= g;
            }
            auto& lst = by_normal[r.coeffs];
            bool dominated = false;
            for (auto& [ko, co] : lst)
                if (ko >= r.koff && co >= r.coff) { dominated = true; break; }
            if (!dominated) {
                std::erase_if(lst, [&](const std::pair<Int, Int>& p) {
                    return p.first <= r.koff && p.second <= r.coff;
                });
                lst.emplace_back(r.koff, r.coff);
            }
        }
        rows.clear();
        for (auto& [normal, offs] : by_normal)
            for (auto& [ko, co] : offs) rows.push_back({normal, ko, co});
    };

    for (std::size_t j = dim; j-- > 0;) {
        normalize_level(cur);
        cas.levels[j] = cur;
        if (j == 0) break;
        // eliminate variable x_{j+1} (index j)
        std::vector<ScanRow> lows, highs, next;
        for (const auto& r : cur) {
            if (r.coeffs[j] > 0) lows.push_back(r);
            else if (r.coeffs[j] < 0) highs.push_back(r);
            else {
                ScanRow t = r;
                t.coeffs.resize(j);
                next.push_back(std::move(t));
            }
        }
        for (const auto& lo : lows)
            for (const auto& hi : highs) {
                Int a = lo.coeffs[j], b = -hi.coeffs[j];
                ScanRow t;
                t.coeffs.resize(j);
                for (std::size_t s = 0; s < j; ++s)
                    t.coeffs[s] = b * lo.coeffs[s] + a * hi.coeffs[s];
                t.koff = b * lo.koff + a * hi.koff;
                t.coff = b * lo.coff + a * hi.coff;
                next.push_back(std::move(t));
            }
        cur = std::move(next);
    }
    return cas;
}

// Enumerates integer points of the dilated body described by the cascade.
inline void scan_points(const ScanCascade& cas, const Int& k, bool interior,
                        std::vector<IntVec>& out) {
    std::size_t dim = cas.levels.size();
    Int cval = interior ? 1 : 0;
    IntVec prefix(dim);

    auto rec = [&](auto&& self, std::size_t level) -> void {
        bool have_lo = false, have_hi = false;
        Int lo = 0, hi = 0;
        for (const auto& r : cas.levels[level]) {
            const Int& a = r.coeffs[level];
            Int rhs = r.koff * k + r.coff * cval;
            for (std::size_t j = 0; j < level; ++j) rhs -= r.coeffs[j] * prefix[j];
            if (a == 0) {
                // constant rows surface at level 0 only; deeper copies are
                // re-checked where their last coordinate is nonzero
                if (level == 0 && rhs > 0) return;
                continue;
            }
            if (a > 0) {
                Int b = ceil_rat(Rat(rhs, a));
                if (!have_lo || b > lo) { lo = b; have_lo = true; }
            } else {
                Int b = floor_rat(Rat(-rhs, -a)); // Rat denominators must be positive
                if (!have_hi || b < hi) { hi = b; have_hi = true; }
            }
        }
        if (!have_lo || !have_hi) throw ConsistencyError("unbounded scan level");
        for (Int x = lo; x <= hi; ++x) {
            prefix[level] = x;
            if (level + 1 == dim) out.push_back(prefix);
            else self(self, level + 1);
        }
    };
    if (dim == 0) {
        out.push_back({});
        return;
    }
    rec(rec, 0);
}

} // namespace detail

class LatticePolytope {
public:
    LatticePolytope(std::size_t ambient_dim, std::vector<LatticePoint> generators)
        : ambient_dim_(ambient_dim) {
        if (generators.empty()) throw DimensionError("polytope needs at least one generator");
        for (const auto& g : generators)
            if (g.size() != ambient_dim_) throw DimensionError("generator dimension mismatch");
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        generators_ = std::move(generators);

        std::vector<IntVec> diffs;
        for (std::size_t i = 1; i < generators_.size(); ++i)
            diffs.push_back(vec_sub(generators_[i], generators_.front()));
        dim_ = diffs.empty() ? 0 : rank(IntMatrix::from_rows(diffs));

        vertices_ = detail::extreme_points(generators_);
        std::sort(vertices_.begin(), vertices_.end());

        if (full_dimensional() && dim_ > 0) {
            facets_ = detail::brute_force_facets(vertices_, dim_);
            build_scan_kernel();
        } else if (dim_ < ambient_dim_) {
            build_restriction();
        }
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dimension() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }

    const std::vector<LatticePoint>& generators() const { return generators_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }

    const std::vector<Facet>& facets() const {
        if (!full_dimensional())
            throw DimensionError("facets: polytope is not full-dimensional");
        return facets_;
    }

    // Full-dimensional copy in the affine hull lattice, plus the isomorphism.
    std::pair<const LatticePolytope&, const AffineHullCoords&> restrict_to_affine_hull() const {
        if (full_dimensional())
            throw DimensionError("restrict_to_affine_hull: already full-dimensional");
        return {*restricted_, hull_coords_};
    }

    bool contains(const LatticePoint& x) const {
        if (full_dimensional()) {
            for (const auto& f : facets_)
                if (dot(f.normal, x) < f.offset) return false;
            return true;
        }
        // membership through the affine hull, if the point lies on it
        IntVec w = vec_sub(x, hull_coords_.base);
        RatVec b(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) b[j] = Rat(w[j]);
        auto sol = solve_rational(hull_coords_.basis.transpose(), b);
        if (!sol) return false;
        IntVec c(hull_coords_.basis.rows());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (boost::multiprecision::denominator((*sol)[i]) != 1) return false;
            c[i] = boost::multiprecision::numerator((*sol)[i]);
        }
        return restricted_->contains(c);
    }

    // Lattice points of the k-th dilation (k = 0 yields the origin).
    std::vector<LatticePoint> lattice_points(const Int& k) const {
        return dilation_points(k, false);
    }

    std::vector<LatticePoint> interior_lattice_points(const Int& k) const {
        return dilation_points(k, true);
    }

    Int lattice_point_count(const Int& k) const {
        return Int(lattice_points(k).size());
    }

    Int interior_lattice_point_count(const Int& k) const {
        return Int(interior_lattice_points(k).size());
    }

    struct Edge {
        LatticePoint a, b;
        std::vector<LatticePoint> points; // all lattice points on the closed segment
    };

    // Edges via the rank of the facet normals active at both endpoints.
    std::vector<Edge> edges() const {
        if (!full_dimensional()) {
            auto [r, iso] = restrict_to_affine_hull();
            std::vector<Edge> out;
            for (auto& e : r.edges()) {
                Edge m;
                m.a = iso.to_ambient(e.a);
                m.b = iso.to_ambient(e.b);
                for (auto& p : e.points) m.points.push_back(iso.to_ambient(p));
                out.push_back(std::move(m));
            }
            return out;
        }
        std::vector<Edge> out;
        if (dim_ <= 0) return out;
        if (dim_ == 1) {
            if (vertices_.size() == 2)
                out.push_back(make_edge(vertices_[0], vertices_[1]));
            return out;
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
                std::vector<IntVec> normals;
                for (const auto& f : facets_)
                    if (dot(f.normal, vertices_[i]) == f.offset &&
                        dot(f.normal, vertices_[j]) == f.offset)
                        normals.push_back(f.normal);
                if (normals.empty()) continue;
                if (rank(IntMatrix::from_rows(normals)) == dim_ - 1)
                    out.push_back(make_edge(vertices_[i], vertices_[j]));
            }
        return out;
    }

    LatticePolytope apply(const AffineMap& map) const {
        if (!map.is_unimodular()) throw DimensionError("apply: map not unimodular");
        std::vector<LatticePoint> gs;
        for (const auto& g : generators_) gs.push_back(map(g));
        return LatticePolytope(ambient_dim_, std::move(gs));
    }

    // Image under a surjective lattice homomorphism given by its matrix.
    LatticePolytope project(const IntMatrix& surjection) const {
        std::size_t r = surjection.rows();
        if (surjection.cols() != ambient_dim_)
            throw DimensionError("project: matrix shape mismatch");
        if (rank(surjection) != r)
            throw DimensionError("project: matrix does not have full row rank");
        // lattice surjectivity: the column HNF must be [I | 0]
        HnfResult res = hnf(surjection.transpose());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (res.h.at(i, j) != Int(i == j ? 1 : 0))
                    throw DimensionError("project: matrix is not a lattice surjection");
        std::vector<LatticePoint> gs;
        for (const auto& g : generators_) gs.push_back(surjection.mul_vec(g));
        return LatticePolytope(r, std::move(gs));
    }

    bool operator==(const LatticePolytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
    }

private:
    Edge make_edge(const LatticePoint& a, const LatticePoint& b) const {
        Edge e{a, b, {}};
        IntVec d = vec_sub(b, a);
        Int g = vec_gcd(d);
        if (g == 0) g = 1;
        IntVec step(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) step[i] = d[i] / g;
        IntVec p = a;
        for (Int t = 0; t <= g; ++t) {
            e.points.push_back(p);
            p = vec_add(p, step);
        }
        return e;
    }

    void build_restriction() {
        const LatticePoint& v0 = generators_.front();
        std::vector<IntVec> diffs;
        for (std::size_t i = 1; i < generators_.size(); ++i)
            diffs.push_back(vec_sub(generators_[i], v0));
        if (diffs.empty()) diffs.push_back(IntVec(ambient_dim_, Int(0)));
        // saturated basis of span(diffs) over Z: double kernel
        auto relations = kernel_lattice(IntMatrix::from_rows(diffs));
        std::vector<IntVec> basis_rows;
        if (relations.empty()) {
            // spans everything; cannot happen for dim < ambient
            throw ConsistencyError("restriction of a full-dimensional polytope");
        }
        basis_rows = kernel_lattice(IntMatrix::from_rows(relations));
        hull_coords_.base = v0;
        hull_coords_.basis = basis_rows.empty() ? IntMatrix(0, ambient_dim_)
                                                : IntMatrix::from_rows(basis_rows);
        std::vector<IntVec> coords;
        for (const auto& g : generators_) coords.push_back(hull_coords_.to_coords(g));
        restricted_ = std::make_unique<LatticePolytope>(dim_, std::move(coords));
    }

    void build_scan_kernel() {
        // reduce coordinates first so scan boxes stay small after shearing
        std::vector<IntVec> rows;
        for (std::size_t c = 0; c < ambient_dim_; ++c) {
            IntVec row;
            for (std::size_t i = 1; i < vertices_.size(); ++i)
                row.push_back(vertices_[i][c] - vertices_[0][c]);
            rows.push_back(std::move(row));
        }
        scan_u_ = detail::lll_unimodular(rows);
        scan_u_inv_ = inverse_unimodular(scan_u_);
        std::vector<LatticePoint> red_verts;
        for (const auto& v : vertices_) red_verts.push_back(scan_u_.mul_vec(v));
        auto red_facets = detail::brute_force_facets(detail::extreme_points(red_verts), dim_);
        cascade_ = detail::build_cascade(red_facets, dim_);
    }

    std::vector<LatticePoint> dilation_points(const Int& k, bool interior) const {
        if (k < 0) throw DimensionError("dilation factor must be non-negative");
        if (k == 0) {
            if (interior) return {};
            return {LatticePoint(ambient_dim_, Int(0))};
        }
        if (dim_ == 0) {
            // point polytope: closed and relative interior are the point itself
            return {vec_scale(k, generators_.front())};
        }
        if (!full_dimensional()) {
            std::vector<LatticePoint> out;
            auto pts = restricted_->dilation_points(k, interior);
            // x = k*base + basis^T c
            for (const auto& c : pts) {
                IntVec x = vec_scale(k, hull_coords_.base);
                for (std::size_t i = 0; i < hull_coords_.basis.rows(); ++i)
                    for (std::size_t j = 0; j < ambient_dim_; ++j)
                        x[j] += c[i] * hull_coords_.basis.at(i, j);
                out.push_back(std::move(x));
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        std::vector<IntVec> reduced;
        detail::scan_points(cascade_, k, interior, reduced);
        std::vector<LatticePoint> out;
        out.reserve(reduced.size());
        for (const auto& z : reduced) out.push_back(scan_u_inv_.mul_vec(z));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t ambient_dim_;
    std::size_t dim_ = 0;
    std::vector<LatticePoint> generators_;
    std::vector<LatticePoint> vertices_;
    std::vector<Facet> facets_;

    // full-dimensional: reduced-coordinate scan state
    IntMatrix scan_u_, scan_u_inv_;
    detail::ScanCascade cascade_;

    // lower-dimensional: affine hull restriction
    AffineHullCoords hull_coords_;
    std::shared_ptr<LatticePolytope> restricted_;
};

} // namespace latpol

#endif
