#ifndef LATPOL_CHECKS_HPP
#define LATPOL_CHECKS_HPP

// The reproduction battery: every headline number and identity, bundled so
// the test suite and the `check paper-suite` subcommand run the same code.

#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <string>

#include "latpol/adet.hpp"
#include "latpol/classify.hpp"
#include "latpol/construct.hpp"
#include "latpol/ehrhart.hpp"
#include "latpol/triang.hpp"

namespace latpol {
namespace checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline Heights random_heights(std::mt19937_64& rng, std::size_t max_n, int max_sum,
                              bool allow_zero) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::size_t n = nd(rng);
    while (true) {
        Heights h;
        Int sum = 0;
        std::uniform_int_distribution<int> hd(allow_zero ? 0 : 1, max_sum);
        for (std::size_t i = 0; i < n; ++i) {
            Int x = hd(rng);
            h.push_back(x);
            sum += x;
        }
        if (sum >= 1 && sum <= max_sum) return h;
    }
}

// The shared evaluation corpus: every construction, scrambles, dilates.
inline std::vector<LatticePolytope> corpus() {
    std::vector<LatticePolytope> out;
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 5; ++n) out.push_back(basic_simplex(n));
    for (std::size_t n = 2; n <= 5; ++n) out.push_back(exceptional_simplex(n));
    for (int i = 0; i < 32; ++i) out.push_back(lawrence_prism(random_heights(rng, 4, 8, true)));
    // degree >= 2 members: dilated simplices and boxes
    for (std::size_t n = 2; n <= 3; ++n) {
        out.push_back(dilate(basic_simplex(n), 3));
        out.push_back(dilate(lawrence_prism(Heights(n, Int(1))), 2));
    }
    out.push_back(dilate(basic_simplex(4), 2));
    out.push_back(dilate(exceptional_simplex(2), 2));
    out.push_back(cayley({basic_simplex(2), basic_simplex(2)}));
    out.push_back(pyramid(lawrence_prism({Int(2), Int(2)}), 2));
    out.push_back(pyramid(exceptional_simplex(2), 1));
    std::size_t fixed = out.size();
    std::uniform_int_distribution<std::uint64_t> sd(1, 1u << 30);
    for (std::size_t i = 0; i < fixed; ++i)
        for (int rep = 0; rep < 3; ++rep)
            out.push_back(scramble(out[i], sd(rng)).first);
    return out;
}

inline bool prism_scope(const std::function<bool(const Heights&)>& f) {
    // every positive height vector with n <= 3 and sum <= 6, plus a few
    // zero-height (pyramid) cases
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<int> h(n, 1);
        while (true) {
            int s = 0;
            for (int x : h) s += x;
            if (s <= 6) {
                Heights hh;
                for (int x : h) hh.push_back(x);
                if (!f(hh)) return false;
            }
            std::size_t i = 0;
            while (i < n && ++h[i] > 6) h[i++] = 1;
            if (i == n) break;
        }
    }
    for (auto hh : {Heights{Int(2), Int(0)}, Heights{Int(2), Int(0), Int(1)},
                    Heights{Int(3), Int(0), Int(0)}})
        if (!f(hh)) return false;
    return true;
}

} // namespace detail

inline CheckResult check_hstar_families() {
    CheckResult r{"h*-vectors of prisms and exceptional simplices", true, ""};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Heights h = detail::random_heights(rng, 5, 12, true);
        Int sum = 0;
        for (const auto& x : h) sum += x;
        auto hs = hstar(lawrence_prism(h));
        IntVec expect(h.size() + 1, Int(0));
        expect[0] = 1;
        if (h.size() >= 1) expect[1] = sum - 1;
        if (hs.coeffs != expect) {
            r.pass = false;
            r.detail = "prism h* mismatch";
            return r;
        }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        auto hs = hstar(exceptional_simplex(n));
        IntVec expect(n + 1, Int(0));
        expect[0] = 1;
        expect[1] = 3;
        if (hs.coeffs != expect) {
            r.pass = false;
            r.detail = "exceptional h* mismatch";
            return r;
        }
    }
    return r;
}

inline CheckResult check_degree_equivalence() {
    auto corpus = detail::corpus();
    CheckResult r{"degree = degree_via_interior on the corpus", true, ""};
    std::size_t n = 0;
    for (const auto& p : corpus) {
        if (degree(p) != degree_via_interior(p)) {
            r.pass = false;
            r.detail = "mismatch at corpus item " + std::to_string(n);
            return r;
        }
        ++n;
    }
    r.detail = std::to_string(n) + " polytopes";
    return r;
}

inline CheckResult check_deg0_is_basic() {
    CheckResult r{"deg 0 <=> Vol 1 <=> BasicSimplex", true, ""};
    for (const auto& p : detail::corpus()) {
        bool d0 = degree(p) == 0;
        bool v1 = normalized_volume(p) == 1;
        bool basic = classify(p).tag == ClassTag::BasicSimplex;
        if (d0 != v1 || v1 != basic) {
            r.pass = false;
            return r;
        }
    }
    return r;
}

inline CheckResult check_count_identity() {
    CheckResult r{"deg <= 1 <=> |points| = Vol + dim", true, ""};
    for (const auto& p : detail::corpus()) {
        bool lhs = degree(p) <= 1;
        bool rhs = p.lattice_point_count(1) == normalized_volume(p) + Int(p.dimension());
        if (lhs != rhs) {
            r.pass = false;
            return r;
        }
    }
    return r;
}

inline CheckResult check_main_theorem_roundtrip() {
    CheckResult r{"Main Theorem roundtrip with witnesses", true, ""};
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint64_t> sd(1, 1u << 30);
    for (int i = 0; i < 50; ++i) {
        Heights h = detail::random_heights(rng, 5, 10, true);
        Int sum = 0;
        for (const auto& x : h) sum += x;
        auto p = lawrence_prism(h);
        auto [q, map] = scramble(p, sd(rng));
        auto c = classify(q);
        Heights sorted = h;
        std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
        bool tag_ok = (sum == 1) ? c.tag == ClassTag::BasicSimplex
                                 : c.tag == ClassTag::LawrencePrism && c.heights == sorted;
        if (!tag_ok || !verify_main_theorem(q)) {
            r.pass = false;
            r.detail = "prism roundtrip " + std::to_string(i);
            return r;
        }
    }
    for (int i = 0; i < 10; ++i) {
        std::size_t n = 2 + i % 4;
        auto [q, map] = scramble(exceptional_simplex(n), sd(rng));
        auto c = classify(q);
        if (c.tag != ClassTag::Exceptional || c.n != n || !verify_main_theorem(q)) {
            r.pass = false;
            r.detail = "exceptional roundtrip " + std::to_string(i);
            return r;
        }
    }
    int high = 0;
    for (const auto& p : detail::corpus()) {
        if (degree(p) < 2) continue;
        if (++high > 20) break;
        if (classify(p).tag != ClassTag::NotDegreeLeOne || !verify_main_theorem(p)) {
            r.pass = false;
            r.detail = "degree >= 2 case misclassified";
            return r;
        }
    }
    if (high < 20) {
        r.pass = false;
        r.detail = "corpus has too few degree >= 2 members";
    }
    return r;
}

inline CheckResult check_stanley_monotonicity() {
    CheckResult r{"Stanley monotonicity for subpolytopes", true, ""};
    auto corpus = detail::corpus();
    std::mt19937_64 rng(83);
    int done = 0;
    for (std::size_t pick = 0; done < 100; pick = (pick + 1) % corpus.size()) {
        const auto& big = corpus[pick % corpus.size()];
        auto pts = big.lattice_points(1);
        if (pts.size() < big.dimension() + 2) continue;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::uniform_int_distribution<std::size_t> kd(big.dimension() + 1, pts.size());
        std::vector<LatticePoint> sub(pts.begin(), pts.begin() + kd(rng));
        LatticePolytope small(big.ambient_dim(), sub);
        if (small.dimension() != big.dimension()) continue;
        auto hb = hstar(big), hs = hstar(small);
        for (std::size_t j = 0; j <= hb.dim; ++j)
            if (hs.coeffs[j] > hb.coeffs[j]) {
                r.pass = false;
                return r;
            }
        ++done;
    }
    return r;
}

inline CheckResult check_triangulation_counts() {
    CheckResult r{"triangulation counts", true, ""};
    for (int h = 1; h <= 6; ++h) {
        Int expect = 1;
        for (int i = 1; i < h; ++i) expect *= 2;
        if (Int(enumerate_all(PointConfig(lawrence_prism({Int(h)}))).size()) != expect) {
            r.pass = false;
            r.detail = "segment [0," + std::to_string(h) + "]";
            return r;
        }
    }
    if (enumerate_all(PointConfig(exceptional_simplex(2))).size() != 14 ||
        enumerate_all(PointConfig(exceptional_simplex(3))).size() != 14 ||
        enumerate_all(PointConfig(lawrence_prism({Int(1), Int(1), Int(1)}))).size() != 6) {
        r.pass = false;
        r.detail = "named instance count";
        return r;
    }
    bool ok = detail::prism_scope([&](const Heights& h) {
        return Int(enumerate_all(PointConfig(lawrence_prism(h))).size()) == count_formula(h);
    });
    if (!ok) {
        r.pass = false;
        r.detail = "enumerate_all != count_formula";
    }
    return r;
}

inline CheckResult check_secondary_polytopes() {
    CheckResult r{"secondary polytope structure", true, ""};
    bool ok = detail::prism_scope([&](const Heights& h) {
        PointConfig cfg(lawrence_prism(h));
        auto rep = secondary_polytope(cfg);
        return rep.dimension == cfg.points.size() - cfg.dim() - 1 && rep.all_coherent &&
               rep.is_simple;
    });
    if (!ok) {
        r.pass = false;
        r.detail = "prism scope";
        return r;
    }
    {
        PointConfig cfg(exceptional_simplex(2));
        auto rep = secondary_polytope(cfg);
        if (rep.dimension != 3 || rep.vertex_count != 14 || rep.edge_count != 21 ||
            rep.facet_count != 9 || !rep.is_simple || !rep.all_coherent) {
            r.pass = false;
            r.detail = "associahedron f-vector";
            return r;
        }
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        auto rep = secondary_polytope(PointConfig(lawrence_prism(Heights(n, Int(1)))));
        Int fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        if (Int(rep.vertex_count) != fact || !rep.all_coherent) {
            r.pass = false;
            r.detail = "permutahedron vertices n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

inline CheckResult check_flip_graph() {
    CheckResult r{"flip graph connectivity and hull-edge match", true, ""};
    bool ok = detail::prism_scope([&](const Heights& h) {
        PointConfig cfg(lawrence_prism(h));
        auto rep = secondary_polytope(cfg);
        std::map<Triangulation, std::size_t> id;
        for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
            id[rep.triangulations[i]] = i;
        std::set<std::pair<std::size_t, std::size_t>> hull_edges, flip_edges;
        for (auto [a, b] : rep.edges) hull_edges.insert(std::minmax(a, b));
        std::vector<bool> seen(rep.triangulations.size(), false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
            for (const auto& nb : flip_neighbors(cfg, rep.triangulations[i])) {
                auto it = id.find(nb);
                if (it == id.end()) return false;
                flip_edges.insert(std::minmax(i, it->second));
            }
        while (!q.empty()) {
            std::size_t cur = q.front();
            q.pop();
            for (const auto& [a, b] : flip_edges) {
                std::size_t other = (a == cur) ? b : (b == cur) ? a : cur;
                if (other != cur && !seen[other]) {
                    seen[other] = true;
                    ++reached;
                    q.push(other);
                }
            }
        }
        return reached == rep.triangulations.size() && flip_edges == hull_edges;
    });
    // the exceptional triangle, too
    if (ok) {
        PointConfig cfg(exceptional_simplex(2));
        auto rep = secondary_polytope(cfg);
        std::map<Triangulation, std::size_t> id;
        for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
            id[rep.triangulations[i]] = i;
        std::set<std::pair<std::size_t, std::size_t>> hull_edges, flip_edges;
        for (auto [a, b] : rep.edges) hull_edges.insert(std::minmax(a, b));
        for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
            for (const auto& nb : flip_neighbors(cfg, rep.triangulations[i]))
                flip_edges.insert(std::minmax(i, id.at(nb)));
        ok = flip_edges == hull_edges;
    }
    r.pass = ok;
    return r;
}

inline CheckResult check_adet() {
    CheckResult r{"principal A-determinant", true, ""};
    if (!verify_worked_example()) {
        r.pass = false;
        r.detail = "worked example";
        return r;
    }
    auto v = [](const char* n) { return MultiPoly::var(n); };
    UniPolySym f0{{v("a0"), v("c0"), v("b0")}};
    UniPolySym f1{{v("a1"), v("b1")}};
    UniPolySym f2{{v("a2"), v("b2")}};
    if (resultant(f1, f2) != v("a1") * v("b2") - v("a2") * v("b1") ||
        resultant(f0, f1) != v("a1") * v("a1") * v("b0") + v("b1") * v("b1") * v("a0") -
                                 v("a1") * v("b1") * v("c0") ||
        discriminant(f0) != MultiPoly::constant(4) * v("a0") * v("b0") - v("c0") * v("c0")) {
        r.pass = false;
        r.detail = "printed factors";
        return r;
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<int> h(n, 1);
        while (true) {
            Int sum = 0;
            for (int x : h) sum += x;
            if (sum <= 8) {
                Heights hh;
                for (int x : h) hh.push_back(x);
                if (Int(principal_adet_prism(hh).total_degree()) != Int(n + 1) * sum) {
                    r.pass = false;
                    r.detail = "degree formula";
                    return r;
                }
            }
            std::size_t i = 0;
            while (i < n && ++h[i] > 8) h[i++] = 1;
            if (i == n) break;
        }
    }
    return r;
}

inline CheckResult check_reciprocity_corpus() {
    CheckResult r{"Ehrhart reciprocity on the corpus", true, ""};
    for (const auto& p : detail::corpus())
        if (!check_reciprocity(p)) {
            r.pass = false;
            return r;
        }
    return r;
}

inline std::vector<CheckResult> run_paper_suite() {
    return {
        check_hstar_families(),     check_degree_equivalence(),
        check_deg0_is_basic(),      check_count_identity(),
        check_main_theorem_roundtrip(), check_stanley_monotonicity(),
        check_triangulation_counts(),   check_secondary_polytopes(),
        check_flip_graph(),         check_adet(),
        check_reciprocity_corpus(),
    };
}

} // namespace checks
} // namespace latpol

#endif
