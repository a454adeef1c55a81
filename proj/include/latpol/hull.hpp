#ifndef LATPOL_HULL_HPP
#define LATPOL_HULL_HPP

// Convex hull of a moderately large point set (hundreds of points, low
// dimension) by the double description method on the cone of valid
// inequalities. Used for secondary polytopes, where the brute-force
// facet search of the polytope module is out of reach.

#include <bitset>
#include <map>
#include <vector>

#include "latpol/exact.hpp"

namespace latpol {
namespace hull {

inline constexpr std::size_t kMaxIneqs = 512;
using TightSet = std::bitset<kMaxIneqs>;

struct HullResult {
    std::size_t dim = 0;                        // affine dimension of the hull
    std::vector<IntVec> facet_normals;          // inward: normal . x >= offset
    std::vector<Int> facet_offsets;             // in reduced coordinates
    std::vector<std::size_t> vertex_ids;        // input indices that are hull vertices
    std::vector<std::pair<std::size_t, std::size_t>> edges; // vertex index pairs
};

namespace detail {

struct Ray {
    IntVec v;       // in R^{r+1}, last coordinate is the offset part
    TightSet tight; // inequalities (by processing order) tight on this ray
};

// Extreme rays of { y : rows[i] . y >= 0 } assuming the first dim rows are
// linearly independent (the caller arranges this).
inline std::vector<Ray> dd_cone(const std::vector<IntVec>& rows, std::size_t dim) {
    if (rows.size() > kMaxIneqs) throw CapExceededError("dd: too many inequalities");
    // initial simplicial cone from the first dim rows: ray j has
    // rows[i] . ray_j = 0 for i != j and > 0 for i = j
    std::vector<Ray> rays;
    {
        IntMatrix m = IntMatrix::from_rows(
            std::vector<IntVec>(rows.begin(), rows.begin() + dim));
        for (std::size_t j = 0; j < dim; ++j) {
            RatVec e(dim, Rat(0));
            e[j] = 1;
            auto x = solve_rational(m, e);
            if (!x) throw ConsistencyError("dd: initial rows not independent");
            Int l = 1;
            for (const auto& q : *x)
                l = l / int_gcd(l, boost::multiprecision::denominator(q)) *
                    boost::multiprecision::denominator(q);
            IntVec v(dim);
            for (std::size_t t = 0; t < dim; ++t)
                v[t] = boost::multiprecision::numerator((*x)[t]) *
                       (l / boost::multiprecision::denominator((*x)[t]));
            Ray r;
            r.v = primitive(v);
            for (std::size_t i = 0; i < dim; ++i)
                if (i != j) r.tight.set(i);
            rays.push_back(std::move(r));
        }
    }

    auto tight_rank = [&](const TightSet& t, std::size_t upto) {
        std::vector<IntVec> sel;
        for (std::size_t i = 0; i < upto; ++i)
            if (t.test(i)) sel.push_back(rows[i]);
        if (sel.empty()) return std::size_t(0);
        return rank(IntMatrix::from_rows(sel));
    };

    for (std::size_t f = dim; f < rows.size(); ++f) {
        std::vector<Ray> pos, neg, zero;
        std::vector<Int> val_pos, val_neg;
        for (auto& r : rays) {
            Int s = dot(rows[f], r.v);
            if (s > 0) { pos.push_back(std::move(r)); val_pos.push_back(s); }
            else if (s < 0) { neg.push_back(std::move(r)); val_neg.push_back(s); }
            else { r.tight.set(f); zero.push_back(std::move(r)); }
        }
        std::vector<Ray> next = std::move(zero);
        for (auto& r : pos) next.push_back(r);
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = 0; b < neg.size(); ++b) {
                TightSet common = pos[a].tight & neg[b].tight;
                if (tight_rank(common, f) + 2 != dim) continue; // not adjacent
                Ray r;
                r.v.resize(dim);
                for (std::size_t t = 0; t < dim; ++t)
                    r.v[t] = val_pos[a] * neg[b].v[t] - val_neg[b] * pos[a].v[t];
                r.v = primitive(r.v);
                r.tight = common;
                r.tight.set(f);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    return rays;
}

} // namespace detail

// Hull of a point set given in ambient integer coordinates; points need not
// be distinct or full-dimensional. Facets are reported in the reduced
// (affine-span) coordinate system; vertices and edges by input index.
inline HullResult convex_hull(const std::vector<IntVec>& input) {
    if (input.empty()) throw DimensionError("convex_hull: no points");
    HullResult res;

    // reduce to a saturated lattice basis of the affine span
    const IntVec& base = input.front();
    std::vector<IntVec> diffs;
    for (const auto& p : input) diffs.push_back(vec_sub(p, base));
    auto relations = kernel_lattice(IntMatrix::from_rows(diffs));
    std::vector<IntVec> basis = relations.empty()
        ? std::vector<IntVec>{}
        : kernel_lattice(IntMatrix::from_rows(relations));
    if (relations.empty()) {
        // affine span is everything
        basis.clear();
        for (std::size_t i = 0; i < base.size(); ++i) {
            IntVec e(base.size(), Int(0));
            e[i] = 1;
            basis.push_back(e);
        }
    }
    std::size_t r = basis.size();
    res.dim = r;

    // coordinates of every input point in the reduced basis
    IntMatrix bt = basis.empty() ? IntMatrix(0, 0) : IntMatrix::from_rows(basis).transpose();
    std::vector<IntVec> pts;
    std::map<IntVec, std::size_t> uniq;
    std::vector<std::size_t> point_of_input(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        IntVec c(r, Int(0));
        if (r > 0) {
            RatVec b(diffs[i].size());
            for (std::size_t j = 0; j < diffs[i].size(); ++j) b[j] = Rat(diffs[i][j]);
            auto sol = solve_rational(bt, b);
            if (!sol) throw ConsistencyError("convex_hull: span reduction failed");
            for (std::size_t j = 0; j < r; ++j) {
                if (boost::multiprecision::denominator((*sol)[j]) != 1)
                    throw ConsistencyError("convex_hull: non-integral reduced point");
                c[j] = boost::multiprecision::numerator((*sol)[j]);
            }
        }
        auto [it, fresh] = uniq.try_emplace(c, pts.size());
        if (fresh) pts.push_back(c);
        point_of_input[i] = it->second;
    }

    if (r == 0) {
        res.vertex_ids.push_back(0);
        return res;
    }

    // valid-inequality cone: y = (a, b), a . p - b >= 0 for every point p.
    // Order rows so the first r+1 come from affinely independent points.
    std::vector<std::size_t> lead;
    {
        std::vector<IntVec> acc;
        for (std::size_t i = 0; i < pts.size() && lead.size() <= r; ++i) {
            std::vector<IntVec> trial = acc;
            if (!lead.empty()) trial.push_back(vec_sub(pts[i], pts[lead.front()]));
            if (lead.empty() || rank(IntMatrix::from_rows(trial)) == trial.size()) {
                acc = trial;
                lead.push_back(i);
            }
        }
        if (lead.size() != r + 1)
            throw ConsistencyError("convex_hull: span reduction inconsistent");
    }
    std::vector<IntVec> rows;
    std::vector<std::size_t> row_point;
    auto push_row = [&](std::size_t i) {
        IntVec row = pts[i];
        row.push_back(Int(-1));
        rows.push_back(std::move(row));
        row_point.push_back(i);
    };
    std::vector<bool> used(pts.size(), false);
    for (std::size_t i : lead) { push_row(i); used[i] = true; }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!used[i]) push_row(i);

    auto rays = detail::dd_cone(rows, r + 1);

    // rays with a != 0 are the facets; the single a = 0 ray is 0 >= b
    for (const auto& ray : rays) {
        IntVec a(ray.v.begin(), ray.v.end() - 1);
        bool nz = false;
        for (const auto& x : a) nz = nz || x != 0;
        if (!nz) continue;
        res.facet_normals.push_back(a);
        res.facet_offsets.push_back(ray.v.back());
    }

    // vertices: points whose active facet normals span rank r
    std::size_t nf = res.facet_normals.size();
    std::vector<std::vector<std::size_t>> active(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t f = 0; f < nf; ++f)
            if (dot(res.facet_normals[f], pts[i]) == res.facet_offsets[f])
                active[i].push_back(f);
    std::vector<std::size_t> vert_pts;
    std::vector<bool> is_vert(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (active[i].size() < r) continue;
        std::vector<IntVec> sel;
        for (std::size_t f : active[i]) sel.push_back(res.facet_normals[f]);
        if (rank(IntMatrix::from_rows(sel)) == r) {
            is_vert[i] = true;
            vert_pts.push_back(i);
        }
    }

    // edges: vertex pairs whose common active facets have rank r - 1
    for (std::size_t a = 0; a < vert_pts.size(); ++a)
        for (std::size_t b = a + 1; b < vert_pts.size(); ++b) {
            std::vector<IntVec> sel;
            for (std::size_t f : active[vert_pts[a]])
                if (std::find(active[vert_pts[b]].begin(), active[vert_pts[b]].end(), f) !=
                    active[vert_pts[b]].end())
                    sel.push_back(res.facet_normals[f]);
            if (sel.size() < r - 1) continue;
            if (rank(IntMatrix::from_rows(sel)) == r - 1)
                res.edges.emplace_back(vert_pts[a], vert_pts[b]);
        }

    // report in input indices (first input index per reduced point)
    std::vector<std::size_t> first_input(pts.size(), input.size());
    for (std::size_t i = input.size(); i-- > 0;) first_input[point_of_input[i]] = i;
    for (std::size_t i : vert_pts) res.vertex_ids.push_back(first_input[i]);
    for (auto& [a, b] : res.edges) {
        a = first_input[a];
        b = first_input[b];
    }

    // vertex_ids in input order
    std::sort(res.vertex_ids.begin(), res.vertex_ids.end());
    return res;
}

} // namespace hull
} // namespace latpol

#endif
