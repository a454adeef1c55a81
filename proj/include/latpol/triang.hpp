#ifndef LATPOL_TRIANG_HPP
#define LATPOL_TRIANG_HPP

// Lattice triangulations of small point configurations: exhaustive
// wall-matching enumeration, circuits and flips, GKZ vectors, and
// secondary-polytope structure via the double description hull.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "latpol/construct.hpp"
#include "latpol/ehrhart.hpp"
#include "latpol/hull.hpp"
#include "latpol/polytope.hpp"

namespace latpol {

// A = lattice points of the polytope, in lexicographic order. Configurations
// of lower-dimensional polytopes work in affine hull coordinates.
struct PointConfig {
    LatticePolytope polytope;
    std::vector<LatticePoint> points;

    explicit PointConfig(const LatticePolytope& p)
        : polytope(p.full_dimensional() || p.dimension() == 0
                       ? p
                       : p.restrict_to_affine_hull().first) {
        if (polytope.dimension() == 0)
            throw DimensionError("PointConfig: zero-dimensional polytope");
        points = polytope.lattice_points(1); // sorted lexicographically
    }

    std::size_t dim() const { return polytope.dimension(); }
};

struct Triangulation {
    std::vector<std::vector<std::size_t>> simplices; // canonical: sorted, sorted

    void canonicalize() {
        for (auto& s : simplices) std::sort(s.begin(), s.end());
        std::sort(simplices.begin(), simplices.end());
    }

    bool operator==(const Triangulation& o) const { return simplices == o.simplices; }
    bool operator<(const Triangulation& o) const { return simplices < o.simplices; }
};

// Unique minimal affine dependence of a point set, split by sign.
struct Circuit {
    std::vector<std::pair<std::size_t, Int>> positive, negative; // (index, coefficient)
};

// The points are indexed 0..m-1 in the order given; at most dim+2 of them.
inline std::optional<Circuit> circuit(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return std::nullopt;
    std::size_t m = pts.size();
    // homogenized columns (p, 1); affine dependences = kernel
    std::vector<IntVec> cols;
    for (const auto& p : pts) {
        IntVec c = p;
        c.push_back(Int(1));
        cols.push_back(std::move(c));
    }
    auto ker = kernel_lattice(IntMatrix::from_cols(cols));
    if (ker.empty()) return std::nullopt;
    if (ker.size() > 1) return std::nullopt; // not a circuit: dependence not unique
    IntVec v = primitive(ker.front());
    // orient so the first nonzero coefficient is positive
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    Circuit c;
    for (std::size_t i = 0; i < m; ++i) {
        if (v[i] > 0) c.positive.emplace_back(i, v[i]);
        else if (v[i] < 0) c.negative.emplace_back(i, -v[i]);
    }
    if (c.positive.empty() || c.negative.empty())
        throw ConsistencyError("circuit: one-sided affine dependence");
    return c;
}

inline bool is_parallelogram(const Circuit& c) {
    auto ones = [](const std::vector<std::pair<std::size_t, Int>>& side) {
        if (side.size() != 2) return false;
        return side[0].second == 1 && side[1].second == 1;
    };
    return ones(c.positive) && ones(c.negative);
}

namespace detail {

inline Int simplex_volume(const PointConfig& cfg, const std::vector<std::size_t>& s) {
    std::size_t d = cfg.dim();
    if (s.size() != d + 1) throw DimensionError("simplex index count mismatch");
    std::vector<IntVec> rows;
    for (std::size_t i = 1; i <= d; ++i)
        rows.push_back(vec_sub(cfg.points[s[i]], cfg.points[s[0]]));
    return boost::multiprecision::abs(det(IntMatrix::from_rows(rows)));
}

// Inward facet inequalities of a full-dimensional simplex of the config.
inline std::vector<Facet> simplex_facets(const PointConfig& cfg,
                                         const std::vector<std::size_t>& s) {
    std::size_t d = cfg.dim();
    std::vector<Facet> out;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<IntVec> rows;
        std::size_t base = (skip == 0) ? 1 : 0;
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == skip || i == base) continue;
            rows.push_back(vec_sub(cfg.points[s[i]], cfg.points[s[base]]));
        }
        auto ker = kernel_lattice(rows.empty() ? IntMatrix(0, d) : IntMatrix::from_rows(rows));
        if (ker.size() != 1) throw ConsistencyError("degenerate simplex facet");
        IntVec normal = primitive(ker.front());
        Int offset = dot(normal, cfg.points[s[base]]);
        if (dot(normal, cfg.points[s[skip]]) < offset) {
            for (auto& x : normal) x = -x;
            offset = -offset;
        }
        out.push_back({normal, offset});
    }
    return out;
}

// Do the open interiors of two full-dimensional simplices meet? Decided by
// feasibility of the joint strict facet system.
inline bool interiors_meet(const std::vector<Facet>& a, const std::vector<Facet>& b) {
    std::vector<LinearConstraint> cs;
    auto add = [&](const Facet& f) {
        LinearConstraint lc;
        for (const auto& x : f.normal) lc.coeffs.push_back(Rat(x));
        lc.offset = Rat(f.offset);
        lc.rel = Rel::Gt;
        cs.push_back(std::move(lc));
    };
    for (const auto& f : a) add(f);
    for (const auto& f : b) add(f);
    return fm_feasible(cs);
}

// Joint open-barycentric system: a common interior point written in both
// simplices' barycentric coordinates with all weights strictly positive.
inline bool interiors_meet_barycentric(const PointConfig& cfg,
                                       const std::vector<std::size_t>& a,
                                       const std::vector<std::size_t>& b) {
    std::size_t d = cfg.dim();
    std::size_t na = a.size(), nb = b.size();
    std::vector<LinearConstraint> cs;
    for (std::size_t c = 0; c < d; ++c) {
        LinearConstraint lc;
        lc.coeffs.resize(na + nb, Rat(0));
        for (std::size_t i = 0; i < na; ++i) lc.coeffs[i] = Rat(cfg.points[a[i]][c]);
        for (std::size_t j = 0; j < nb; ++j) lc.coeffs[na + j] = -Rat(cfg.points[b[j]][c]);
        lc.offset = 0;
        lc.rel = Rel::Eq;
        cs.push_back(std::move(lc));
    }
    for (int side = 0; side < 2; ++side) {
        LinearConstraint sum;
        sum.coeffs.resize(na + nb, Rat(0));
        for (std::size_t i = 0; i < (side == 0 ? na : nb); ++i)
            sum.coeffs[(side == 0 ? 0 : na) + i] = 1;
        sum.offset = 1;
        sum.rel = Rel::Eq;
        cs.push_back(std::move(sum));
    }
    for (std::size_t i = 0; i < na + nb; ++i) {
        LinearConstraint pos;
        pos.coeffs.resize(na + nb, Rat(0));
        pos.coeffs[i] = 1;
        pos.offset = 0;
        pos.rel = Rel::Gt;
        cs.push_back(std::move(pos));
    }
    return fm_feasible(cs);
}

struct Candidate {
    std::vector<std::size_t> idx; // sorted
    Int vol;
    std::vector<Facet> facets;
    std::vector<std::vector<std::size_t>> walls; // sorted d-subsets, facet order
};

// Shared state of one enumeration run.
struct EnumState {
    const PointConfig& cfg;
    std::vector<Candidate> cands;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> wall_cands;
    std::set<std::vector<std::size_t>> boundary_walls;
    mutable std::map<std::pair<std::size_t, std::size_t>, bool> compat;

    explicit EnumState(const PointConfig& c) : cfg(c) {}

    bool compatible(std::size_t a, std::size_t b) const {
        auto key = std::minmax(a, b);
        auto it = compat.find(key);
        if (it != compat.end()) return it->second;
        bool ok = !interiors_meet(cands[a].facets, cands[b].facets);
        compat[key] = ok;
        return ok;
    }
};

inline void build_candidates(EnumState& st) {
    const PointConfig& cfg = st.cfg;
    std::size_t m = cfg.points.size(), d = cfg.dim();
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == d + 1) {
            Candidate c;
            c.idx = pick;
            c.vol = simplex_volume(cfg, pick);
            if (c.vol == 0) return;
            c.facets = simplex_facets(cfg, pick);
            for (std::size_t skip = 0; skip <= d; ++skip) {
                std::vector<std::size_t> w;
                for (std::size_t i = 0; i <= d; ++i)
                    if (i != skip) w.push_back(pick[i]);
                c.walls.push_back(std::move(w));
            }
            std::size_t id = st.cands.size();
            for (const auto& w : c.walls) st.wall_cands[w].push_back(id);
            st.cands.push_back(std::move(c));
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    // a wall lies on the boundary iff all its points share a facet of the polytope
    for (const auto& [w, ids] : st.wall_cands) {
        for (const auto& f : cfg.polytope.facets()) {
            bool all = true;
            for (std::size_t i : w)
                if (dot(f.normal, cfg.points[i]) != f.offset) { all = false; break; }
            if (all) {
                st.boundary_walls.insert(w);
                break;
            }
        }
    }
}

// A rational interior point avoiding every hyperplane spanned by config
// points; pins down the unique starting simplex of each triangulation.
inline RatVec generic_witness(const EnumState& st) {
    const PointConfig& cfg = st.cfg;
    std::size_t d = cfg.dim();
    RatVec centroid(d, Rat(0));
    const auto& verts = cfg.polytope.vertices();
    for (const auto& v : verts)
        for (std::size_t j = 0; j < d; ++j) centroid[j] += Rat(v[j], verts.size());
    RatVec dir(d);
    Int pw = 1;
    for (std::size_t j = 0; j < d; ++j) {
        dir[j] = Rat(1, pw);
        pw *= 7;
    }
    // hyperplanes to dodge: every candidate facet
    for (Int t = 0; t < 100000; ++t) {
        RatVec w(d);
        for (std::size_t j = 0; j < d; ++j) w[j] = centroid[j] + Rat(t, 1009) * dir[j];
        bool ok = true;
        for (const auto& f : cfg.polytope.facets()) {
            Rat s = -Rat(f.offset);
            for (std::size_t j = 0; j < d; ++j) s += Rat(f.normal[j]) * w[j];
            if (!(s > 0)) { ok = false; break; }
        }
        for (std::size_t c = 0; ok && c < st.cands.size(); ++c)
            for (const auto& f : st.cands[c].facets) {
                Rat s = -Rat(f.offset);
                for (std::size_t j = 0; j < d; ++j) s += Rat(f.normal[j]) * w[j];
                if (s == 0) { ok = false; break; }
            }
        if (ok) return w;
    }
    throw ConsistencyError("no generic witness point found");
}

inline bool strictly_inside(const Candidate& c, const RatVec& w) {
    for (const auto& f : c.facets) {
        Rat s = -Rat(f.offset);
        for (std::size_t j = 0; j < w.size(); ++j) s += Rat(f.normal[j]) * w[j];
        if (!(s > 0)) return false;
    }
    return true;
}

} // namespace detail

inline bool is_valid_triangulation(const PointConfig& cfg, const Triangulation& t) {
    std::size_t d = cfg.dim(), m = cfg.points.size();
    if (t.simplices.empty()) return false;
    Int total = 0;
    for (const auto& s : t.simplices) {
        if (s.size() != d + 1) return false;
        for (std::size_t i : s)
            if (i >= m) return false;
        Int v = detail::simplex_volume(cfg, s);
        if (v == 0) return false;
        total += v;
    }
    if (total != normalized_volume(cfg.polytope)) return false;
    for (std::size_t a = 0; a < t.simplices.size(); ++a)
        for (std::size_t b = a + 1; b < t.simplices.size(); ++b)
            if (detail::interiors_meet_barycentric(cfg, t.simplices[a], t.simplices[b]))
                return false;
    return true;
}

inline constexpr std::size_t kMaxConfigPoints = 9;

inline std::vector<Triangulation> enumerate_all(const PointConfig& cfg,
                                                std::size_t max_points = kMaxConfigPoints) {
    if (cfg.points.size() > max_points)
        throw CapExceededError("enumerate_all: too many lattice points");
    detail::EnumState st(cfg);
    detail::build_candidates(st);
    RatVec witness = detail::generic_witness(st);
    Int total_vol = normalized_volume(cfg.polytope);

    std::vector<Triangulation> out;
    std::vector<std::size_t> placed;
    std::set<std::vector<std::size_t>> open_walls;
    Int used_vol = 0;

    auto place = [&](auto&& self, std::size_t id) -> void {
        const auto& cand = st.cands[id];
        std::vector<std::vector<std::size_t>> opened, closed;
        for (const auto& w : cand.walls) {
            if (st.boundary_walls.count(w)) continue;
            auto it = open_walls.find(w);
            if (it != open_walls.end()) {
                open_walls.erase(it);
                closed.push_back(w);
            } else {
                open_walls.insert(w);
                opened.push_back(w);
            }
        }
        placed.push_back(id);
        used_vol += cand.vol;

        if (open_walls.empty()) {
            if (used_vol != total_vol)
                throw ConsistencyError("wall-closed complex misses volume");
            Triangulation t;
            for (std::size_t pid : placed) t.simplices.push_back(st.cands[pid].idx);
            t.canonicalize();
            out.push_back(std::move(t));
        } else {
            const auto wall = *open_walls.begin();
            for (std::size_t next : st.wall_cands.at(wall)) {
                bool ok = true;
                for (std::size_t pid : placed)
                    if (pid == next || !st.compatible(pid, next)) { ok = false; break; }
                if (ok) self(self, next);
            }
        }

        used_vol -= cand.vol;
        placed.pop_back();
        for (const auto& w : opened) open_walls.erase(w);
        for (const auto& w : closed) open_walls.insert(w);
    };

    for (std::size_t id = 0; id < st.cands.size(); ++id)
        if (detail::strictly_inside(st.cands[id], witness)) place(place, id);

    std::sort(out.begin(), out.end());
    return out;
}

// Staircase triangulation of a Lawrence prism from a word of parts (i, j),
// i in 1..n, with the j's of each i summing to h_i.
inline Triangulation prism_word_triangulation(
    const Heights& h, const std::vector<std::pair<std::size_t, Int>>& word) {
    std::size_t n = h.size();
    PointConfig cfg(lawrence_prism(h));
    std::map<LatticePoint, std::size_t> index_of;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) index_of[cfg.points[i]] = i;

    auto point_at = [&](std::size_t k, const Int& c) {
        // p_{k,c} = e_{k-1} + c u in the Def 2.1 coordinates (k is 1-based)
        LatticePoint p(n, Int(0));
        if (k > 1) p[k - 2] = 1;
        p[n - 1] += c;
        auto it = index_of.find(p);
        if (it == index_of.end())
            throw DimensionError("prism word: point outside the prism");
        return it->second;
    };

    std::vector<Int> consumed(n, Int(0));
    std::vector<Int> level(n, Int(0));
    Triangulation t;
    for (const auto& [i, j] : word) {
        if (i < 1 || i > n || j < 1) throw DimensionError("prism word: bad letter");
        std::vector<std::size_t> s;
        for (std::size_t k = 1; k <= n; ++k) s.push_back(point_at(k, level[k - 1]));
        s.push_back(point_at(i, level[i - 1] + j));
        t.simplices.push_back(std::move(s));
        level[i - 1] += j;
        consumed[i - 1] += j;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (consumed[i] != h[i]) throw DimensionError("prism word: heights not exhausted");
    t.canonicalize();
    return t;
}

// Closed-form count of the prism's triangulations.
inline Int count_formula(const Heights& h) {
    std::vector<Int> hs;
    for (const auto& x : h)
        if (x > 0) hs.push_back(x);
    if (hs.empty()) throw DimensionError("count_formula: all heights zero");
    std::size_t n = hs.size();
    Int total = 0;
    std::vector<Int> l(n, Int(1));
    auto term = [&]() {
        Int sum = 0;
        for (const auto& x : l) sum += x;
        Int t = 1;
        for (Int i = 1; i <= sum; ++i) t *= i;
        for (const auto& x : l)
            for (Int i = 1; i <= x; ++i) t /= i;
        for (std::size_t i = 0; i < n; ++i) t *= binomial(hs[i] - 1, l[i] - 1);
        return t;
    };
    while (true) {
        total += term();
        std::size_t i = 0;
        while (i < n && ++l[i] > hs[i]) l[i++] = 1;
        if (i == n) break;
    }
    return total;
}

inline IntVec gkz(const PointConfig& cfg, const Triangulation& t) {
    IntVec phi(cfg.points.size(), Int(0));
    for (const auto& s : t.simplices) {
        Int v = detail::simplex_volume(cfg, s);
        for (std::size_t i : s) phi[i] += v;
    }
    return phi;
}

// Modification of t along circuit c (indices into cfg.points): if one of the
// two triangulations of the circuit's hull sits inside t with equal links,
// swap it for the other.
inline std::optional<Triangulation> flip(const PointConfig& cfg, const Triangulation& t,
                                         const Circuit& c) {
    std::vector<std::size_t> z;
    for (const auto& [i, co] : c.positive) z.push_back(i);
    for (const auto& [i, co] : c.negative) z.push_back(i);
    std::sort(z.begin(), z.end());

    auto side_faces = [&](const std::vector<std::pair<std::size_t, Int>>& side) {
        std::vector<std::vector<std::size_t>> faces;
        for (const auto& [drop, co] : side) {
            std::vector<std::size_t> f;
            for (std::size_t i : z)
                if (i != drop) f.push_back(i);
            faces.push_back(std::move(f));
        }
        return faces;
    };

    auto try_side = [&](const std::vector<std::pair<std::size_t, Int>>& from,
                        const std::vector<std::pair<std::size_t, Int>>& to)
        -> std::optional<Triangulation> {
        auto from_faces = side_faces(from);
        auto to_faces = side_faces(to);
        // links: extensions of each from-face to simplices of t; must agree
        std::set<std::vector<std::size_t>> links;
        bool first = true;
        for (const auto& f : from_faces) {
            std::set<std::vector<std::size_t>> mine;
            for (const auto& s : t.simplices) {
                if (!std::includes(s.begin(), s.end(), f.begin(), f.end())) continue;
                std::vector<std::size_t> link;
                std::set_difference(s.begin(), s.end(), f.begin(), f.end(),
                                    std::back_inserter(link));
                mine.insert(std::move(link));
            }
            if (mine.empty()) return std::nullopt;
            if (first) {
                links = std::move(mine);
                first = false;
            } else if (mine != links) {
                return std::nullopt;
            }
        }
        // links must be disjoint from the circuit support
        for (const auto& l : links)
            for (std::size_t i : l)
                if (std::binary_search(z.begin(), z.end(), i)) return std::nullopt;

        Triangulation res;
        std::set<std::vector<std::size_t>> removed;
        for (const auto& f : from_faces)
            for (const auto& l : links) {
                std::vector<std::size_t> s;
                std::merge(f.begin(), f.end(), l.begin(), l.end(), std::back_inserter(s));
                removed.insert(std::move(s));
            }
        for (const auto& s : t.simplices)
            if (!removed.count(s)) res.simplices.push_back(s);
        for (const auto& f : to_faces)
            for (const auto& l : links) {
                std::vector<std::size_t> s;
                std::merge(f.begin(), f.end(), l.begin(), l.end(), std::back_inserter(s));
                if (detail::simplex_volume(cfg, s) == 0) return std::nullopt;
                res.simplices.push_back(std::move(s));
            }
        res.canonicalize();
        if (res == t) return std::nullopt;
        return res;
    };

    if (auto r = try_side(c.positive, c.negative)) return r;
    return try_side(c.negative, c.positive);
}

// All flip neighbors of t among valid triangulations: every relevant circuit
// is the unique circuit of (simplex of t) + (one extra point).
inline std::vector<Triangulation> flip_neighbors(const PointConfig& cfg,
                                                 const Triangulation& t) {
    std::set<Triangulation> found;
    std::set<std::vector<std::size_t>> tried;
    for (const auto& s : t.simplices)
        for (std::size_t q = 0; q < cfg.points.size(); ++q) {
            if (std::binary_search(s.begin(), s.end(), q)) continue;
            std::vector<std::size_t> support = s;
            support.push_back(q);
            std::sort(support.begin(), support.end());
            if (!tried.insert(support).second) continue;
            std::vector<LatticePoint> pts;
            for (std::size_t i : support) pts.push_back(cfg.points[i]);
            auto local = circuit(pts);
            if (!local) continue;
            Circuit c;
            for (auto& [i, co] : local->positive) c.positive.emplace_back(support[i], co);
            for (auto& [i, co] : local->negative) c.negative.emplace_back(support[i], co);
            if (auto r = flip(cfg, t, c)) found.insert(std::move(*r));
        }
    return {found.begin(), found.end()};
}

struct SecondaryReport {
    std::size_t dimension = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t facet_count = 0;
    bool is_simple = false;
    bool all_coherent = false;
    std::vector<Triangulation> triangulations;
    std::vector<IntVec> gkz_vectors;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // triangulation index pairs
};

inline SecondaryReport secondary_polytope(const PointConfig& cfg,
                                          std::size_t max_points = kMaxConfigPoints) {
    SecondaryReport rep;
    rep.triangulations = enumerate_all(cfg, max_points);
    for (const auto& t : rep.triangulations) rep.gkz_vectors.push_back(gkz(cfg, t));
    auto h = hull::convex_hull(rep.gkz_vectors);
    rep.dimension = h.dim;
    rep.vertex_count = h.vertex_ids.size();
    rep.edge_count = h.edges.size();
    rep.facet_count = h.facet_normals.size();
    rep.all_coherent = h.vertex_ids.size() == rep.triangulations.size();
    rep.edges = h.edges;
    // simple: every vertex meets exactly dim edges
    std::map<std::size_t, std::size_t> deg;
    for (const auto& [a, b] : h.edges) {
        ++deg[a];
        ++deg[b];
    }
    rep.is_simple = true;
    for (std::size_t v : h.vertex_ids)
        if (deg[v] != rep.dimension) rep.is_simple = false;
    return rep;
}

} // namespace latpol

#endif
