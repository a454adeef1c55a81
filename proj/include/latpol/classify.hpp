#ifndef LATPOL_CLASSIFY_HPP
#define LATPOL_CLASSIFY_HPP

// Decision procedure for degree <= 1: every such polytope is a basic
// simplex, an exceptional simplex or a Lawrence prism, and we produce the
// witnessing unimodular map. Inputs that are not full-dimensional are
// classified inside their affine hull lattice; the witness then refers to
// hull coordinates.

#include <optional>
#include <set>
#include <vector>

#include "latpol/construct.hpp"
#include "latpol/ehrhart.hpp"

namespace latpol {

enum class ClassTag { BasicSimplex, LawrencePrism, Exceptional, NotDegreeLeOne };

struct Classification {
    ClassTag tag = ClassTag::NotDegreeLeOne;
    Heights heights;                  // LawrencePrism only, sorted descending
    std::size_t n = 0;                // Exceptional only
    std::optional<AffineMap> witness; // absent iff NotDegreeLeOne
};

inline const char* to_string(ClassTag t) {
    switch (t) {
        case ClassTag::BasicSimplex: return "BasicSimplex";
        case ClassTag::LawrencePrism: return "LawrencePrism";
        case ClassTag::Exceptional: return "Exceptional";
        default: return "NotDegreeLeOne";
    }
}

// Edges carrying at least three lattice points.
inline std::vector<LatticePolytope::Edge> long_edges(const LatticePolytope& p) {
    std::vector<LatticePolytope::Edge> out;
    for (auto& e : p.edges())
        if (e.points.size() >= 3) out.push_back(std::move(e));
    return out;
}

// True iff the only lattice points are the vertices. Also cross-checks the
// two equivalent betweenness characterizations, which agree for degree <= 1.
inline bool is_narrow(const LatticePolytope& p) {
    if (degree(p) >= 2) throw DimensionError("is_narrow: defined for degree <= 1 only");
    auto pts = p.lattice_points(1);
    const auto& verts = p.vertices();
    bool only_vertices = pts == verts; // both sorted

    auto no_between = [](const std::vector<LatticePoint>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (vec_gcd(vec_sub(xs[j], xs[i])) > 1) return false;
        return true;
    };
    bool between_points = no_between(pts);
    bool between_vertices = no_between(verts) && pts.size() == verts.size();
    if (only_vertices != between_points || only_vertices != between_vertices)
        throw ConsistencyError("is_narrow: betweenness characterizations disagree");
    return only_vertices;
}

namespace detail {

inline std::set<LatticePoint> vertex_set(const LatticePolytope& p) {
    return {p.vertices().begin(), p.vertices().end()};
}

inline std::set<LatticePoint> image_vertex_set(const LatticePolytope& p,
                                               const AffineMap& w) {
    std::set<LatticePoint> s;
    for (const auto& v : p.vertices()) s.insert(w(v));
    return s;
}

// Witness sending the vertices of a volume-1 simplex onto conv(0, e_1..e_n).
inline std::optional<AffineMap> basic_witness(const LatticePolytope& p) {
    std::size_t n = p.dimension();
    const auto& v = p.vertices();
    if (v.size() != n + 1) return std::nullopt;
    std::vector<IntVec> cols;
    for (std::size_t i = 1; i <= n; ++i) cols.push_back(vec_sub(v[i], v[0]));
    IntMatrix m = IntMatrix::from_cols(cols);
    Int d = det(m);
    if (d != 1 && d != -1) return std::nullopt;
    IntMatrix w = inverse_unimodular(m);
    return AffineMap{w, vec_scale(-1, w.mul_vec(v[0]))};
}

inline std::optional<AffineMap> exceptional_witness(const LatticePolytope& p) {
    std::size_t n = p.dimension();
    if (n < 2) return std::nullopt;
    const auto& v = p.vertices();
    if (v.size() != n + 1) return std::nullopt;                 // must be a simplex
    if (p.lattice_point_count(1) != Int(n) + 4) return std::nullopt;
    auto longs = long_edges(p);
    if (longs.size() != 3) return std::nullopt;
    // the three long edges must form a triangle with 3 points each
    std::set<LatticePoint> tri;
    for (const auto& e : longs) {
        if (e.points.size() != 3) return std::nullopt;
        tri.insert(e.a);
        tri.insert(e.b);
    }
    if (tri.size() != 3) return std::nullopt;
    std::vector<LatticePoint> t(tri.begin(), tri.end());
    // frame: half-edges of the triangle from one corner, plus the apexes
    for (std::size_t corner = 0; corner < 3; ++corner) {
        const auto& a = t[corner];
        const auto& b = t[(corner + 1) % 3];
        const auto& c = t[(corner + 2) % 3];
        IntVec u1 = vec_sub(b, a), u2 = vec_sub(c, a);
        bool even = true;
        for (const auto& x : u1) even = even && x % 2 == 0;
        for (const auto& x : u2) even = even && x % 2 == 0;
        if (!even) continue;
        std::vector<IntVec> cols;
        auto halve = [](IntVec w) {
            for (auto& x : w) x /= 2;
            return w;
        };
        cols.push_back(halve(u1));
        cols.push_back(halve(u2));
        for (const auto& w : v)
            if (!tri.count(w)) cols.push_back(vec_sub(w, a));
        if (cols.size() != n) continue;
        IntMatrix m = IntMatrix::from_cols(cols);
        Int d = det(m);
        if (d != 1 && d != -1) continue;
        IntMatrix wm = inverse_unimodular(m);
        AffineMap map{wm, vec_scale(-1, wm.mul_vec(a))};
        if (image_vertex_set(p, map) == vertex_set(exceptional_simplex(n))) return map;
    }
    return std::nullopt;
}

struct PrismMatch {
    Heights heights;
    AffineMap witness;
};

// One prism attempt in a fixed direction u (primitive): project along u,
// demand a basic simplex image with segment fibers, and build the witness.
inline std::optional<PrismMatch> prism_in_direction(const LatticePolytope& p,
                                                    const IntVec& u,
                                                    const std::vector<LatticePoint>& pts) {
    std::size_t n = p.dimension();
    // unimodular w with w u = e_1 via euclidean row reduction of u;
    // its rows 2..n give the quotient map along u
    IntMatrix w = IntMatrix::identity(n);
    IntVec cur = u;
    // euclidean elimination to (1, 0, .., 0)^T
    while (true) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (cur[i] != 0 && (piv == n || boost::multiprecision::abs(cur[i]) <
                                                boost::multiprecision::abs(cur[piv])))
                piv = i;
        if (piv == n) return std::nullopt; // u = 0, caller filtered
        bool done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv || cur[i] == 0) continue;
            Int q = cur[i] / cur[piv];
            cur[i] -= q * cur[piv];
            for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= q * w.at(piv, j);
            if (cur[i] != 0) done = false;
        }
        if (done) {
            if (piv != 0) {
                std::swap(cur[0], cur[piv]);
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(0, j), w.at(piv, j));
            }
            if (cur[0] < 0) {
                cur[0] = -cur[0];
                for (std::size_t j = 0; j < n; ++j) w.at(0, j) = -w.at(0, j);
            }
            break;
        }
    }
    if (cur[0] != 1) return std::nullopt; // u not primitive, caller filtered

    IntMatrix psi(n - 1, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi.at(i - 1, j) = w.at(i, j);

    // group the lattice points by quotient image; position along u from row 1
    std::map<IntVec, std::vector<std::pair<Int, LatticePoint>>> fibers;
    for (const auto& x : pts) {
        IntVec img = psi.mul_vec(x);
        Int t = dot(w.row(0), x);
        fibers[img].emplace_back(t, x);
    }
    if (fibers.size() != n) return std::nullopt;

    // quotient polytope must be a basic (n-1)-simplex with the fiber images
    // as its vertices
    std::vector<LatticePoint> imgs;
    for (const auto& [img, fib] : fibers) imgs.push_back(img);
    LatticePolytope q(n - 1, imgs);
    if (q.dimension() != n - 1 || q.vertices().size() != n) return std::nullopt;
    if (normalized_volume(q) != 1) return std::nullopt;

    struct Fiber {
        Int height;
        LatticePoint bottom;
    };
    std::vector<Fiber> fs;
    for (auto& [img, fib] : fibers) {
        std::sort(fib.begin(), fib.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // consecutive t-values: a lattice segment in direction u
        for (std::size_t i = 1; i < fib.size(); ++i)
            if (fib[i].first != fib[i - 1].first + 1) return std::nullopt;
        fs.push_back({Int(fib.size()) - 1, fib.front().second});
    }
    std::sort(fs.begin(), fs.end(), [](const Fiber& a, const Fiber& b) {
        return a.height > b.height || (a.height == b.height && a.bottom < b.bottom);
    });
    if (fs.front().height == 0) return std::nullopt; // a prism needs Sum h >= 1

    std::vector<IntVec> cols;
    for (std::size_t i = 1; i < n; ++i) cols.push_back(vec_sub(fs[i].bottom, fs[0].bottom));
    cols.push_back(u);
    IntMatrix m = IntMatrix::from_cols(cols);
    Int d = det(m);
    if (d != 1 && d != -1) return std::nullopt;
    IntMatrix wi = inverse_unimodular(m);
    AffineMap map{wi, vec_scale(-1, wi.mul_vec(fs[0].bottom))};
    Heights hs;
    for (const auto& f : fs) hs.push_back(f.height);
    if (image_vertex_set(p, map) != vertex_set(lawrence_prism(hs))) return std::nullopt;
    return PrismMatch{hs, map};
}

inline Classification classify_full_dim(const LatticePolytope& p) {
    std::size_t n = p.dimension();
    HStarVector h = hstar(p);
    if (h.degree() >= 2) return {ClassTag::NotDegreeLeOne, {}, 0, std::nullopt};
    if (h.volume() == 1) {
        auto w = basic_witness(p);
        if (!w) throw ConsistencyError("volume-1 polytope without a basic witness");
        return {ClassTag::BasicSimplex, {}, 0, w};
    }
    if (auto w = exceptional_witness(p))
        return {ClassTag::Exceptional, {}, n, w};

    // prism search over primitive lattice-point differences, both signs,
    // in a fixed lexicographic order for determinism
    auto pts = p.lattice_points(1);
    std::set<IntVec> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            IntVec d = primitive(vec_sub(pts[j], pts[i]));
            dirs.insert(d);
        }
    for (const auto& u : dirs)
        if (auto m = prism_in_direction(p, u, pts))
            return {ClassTag::LawrencePrism, m->heights, 0, m->witness};
    throw ConsistencyError("degree <= 1 polytope escaped the classification");
}

} // namespace detail

inline Classification classify(const LatticePolytope& p) {
    if (p.dimension() == 0)
        return {ClassTag::BasicSimplex, {}, 0, AffineMap::identity(p.ambient_dim())};
    if (!p.full_dimensional()) {
        auto [r, iso] = p.restrict_to_affine_hull();
        return detail::classify_full_dim(r);
    }
    return detail::classify_full_dim(p);
}

// Canonical polytope for a classification outcome (in dim(p) coordinates).
inline std::optional<LatticePolytope> canonical_polytope(const Classification& c,
                                                         std::size_t dim) {
    switch (c.tag) {
        case ClassTag::BasicSimplex: return basic_simplex(dim);
        case ClassTag::Exceptional: return exceptional_simplex(c.n);
        case ClassTag::LawrencePrism: return lawrence_prism(c.heights);
        default: return std::nullopt;
    }
}

inline bool verify_main_theorem(const LatticePolytope& p) {
    Classification c;
    try {
        c = classify(p);
    } catch (const ConsistencyError&) {
        return false;
    }
    bool low_degree = degree(p) <= 1;
    if (low_degree != (c.tag != ClassTag::NotDegreeLeOne)) return false;
    if (c.tag == ClassTag::NotDegreeLeOne) return true;
    if (p.dimension() == 0) return true;
    if (!c.witness || !c.witness->is_unimodular()) return false;
    const LatticePolytope& q =
        p.full_dimensional() ? p : p.restrict_to_affine_hull().first;
    auto canon = canonical_polytope(c, q.dimension());
    return canon && detail::image_vertex_set(q, *c.witness) == detail::vertex_set(*canon);
}

} // namespace latpol

#endif
