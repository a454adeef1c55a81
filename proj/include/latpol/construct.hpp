#ifndef LATPOL_CONSTRUCT_HPP
#define LATPOL_CONSTRUCT_HPP

// Generators for the polytope families under study, plus deterministic
// unimodular scrambling for roundtrip tests.

#include <random>
#include <vector>

#include "latpol/polytope.hpp"

namespace latpol {

using Heights = std::vector<Int>; // non-negative, at least one positive

inline LatticePolytope basic_simplex(std::size_t n) {
    std::vector<LatticePoint> gs;
    gs.push_back(LatticePoint(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint e(n, Int(0));
        e[i] = 1;
        gs.push_back(e);
    }
    return LatticePolytope(n, std::move(gs));
}

// conv(e_0, e_0 + h_1 u, e_1, e_1 + h_2 u, ..., e_{n-1}, e_{n-1} + h_n u)
// in Z^n with e_0 = 0 and direction u = e_n.
inline LatticePolytope lawrence_prism(const Heights& h) {
    std::size_t n = h.size();
    if (n == 0) throw DimensionError("lawrence_prism: empty heights");
    bool positive = false;
    for (const auto& x : h) {
        if (x < 0) throw DimensionError("lawrence_prism: negative height");
        if (x > 0) positive = true;
    }
    if (!positive) throw DimensionError("lawrence_prism: all heights zero");
    std::vector<LatticePoint> gs;
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint base(n, Int(0));
        if (i > 0) base[i - 1] = 1;
        gs.push_back(base);
        LatticePoint top = base;
        top[n - 1] += h[i];
        gs.push_back(top);
    }
    return LatticePolytope(n, std::move(gs));
}

// conv(0, 2 e_1, 2 e_2, e_3, ..., e_n)
inline LatticePolytope exceptional_simplex(std::size_t n) {
    if (n < 2) throw DimensionError("exceptional_simplex: needs n >= 2");
    std::vector<LatticePoint> gs;
    gs.push_back(LatticePoint(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint e(n, Int(0));
        e[i] = (i < 2) ? 2 : 1;
        gs.push_back(e);
    }
    return LatticePolytope(n, std::move(gs));
}

// conv of (poly_i, e_i) in M' + Z^r with e_0 = 0.
inline LatticePolytope cayley(const std::vector<LatticePolytope>& polys) {
    if (polys.empty()) throw DimensionError("cayley: needs at least one polytope");
    std::size_t m = polys.front().ambient_dim();
    for (const auto& p : polys)
        if (p.ambient_dim() != m) throw DimensionError("cayley: mismatched ambient lattices");
    std::size_t r = polys.size() - 1;
    std::vector<LatticePoint> gs;
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& g : polys[i].generators()) {
            LatticePoint x = g;
            x.resize(m + r, Int(0));
            if (i > 0) x[m + i - 1] = 1;
            gs.push_back(std::move(x));
        }
    return LatticePolytope(m + r, std::move(gs));
}

inline LatticePolytope pyramid(const LatticePolytope& p, std::size_t r) {
    if (r < 1) throw DimensionError("pyramid: needs r >= 1");
    std::vector<LatticePolytope> polys;
    polys.push_back(p);
    LatticePolytope pt(p.ambient_dim(),
                       std::vector<LatticePoint>{LatticePoint(p.ambient_dim(), Int(0))});
    for (std::size_t i = 0; i < r; ++i) polys.push_back(pt);
    return cayley(polys);
}

inline LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
    if (k < 1) throw DimensionError("dilate: needs k >= 1");
    std::vector<LatticePoint> gs;
    for (const auto& g : p.generators()) gs.push_back(vec_scale(k, g));
    return LatticePolytope(p.ambient_dim(), std::move(gs));
}

// Pseudo-random affine unimodular map: a product of elementary shears
// (entries bounded by 5) and coordinate swaps, plus a translation in
// [-10,10]^n. A shear is skipped when it would push vertex coordinates
// past a spread bound, keeping later point scans cheap.
inline std::pair<LatticePolytope, AffineMap> scramble(const LatticePolytope& p,
                                                      std::uint64_t seed) {
    std::size_t n = p.ambient_dim();
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    IntMatrix u = IntMatrix::identity(n);

    auto max_coord = [&](const IntMatrix& m) {
        Int mx = 0;
        for (const auto& v : p.vertices())
            for (const auto& x : m.mul_vec(v))
                if (boost::multiprecision::abs(x) > mx) mx = boost::multiprecision::abs(x);
        return mx;
    };

    const Int spread_bound = 60;
    if (n >= 2) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
        std::uniform_int_distribution<int> shear(-5, 5);
        std::uniform_int_distribution<int> kind(0, 3);
        for (std::size_t step = 0; step < 4 * n; ++step) {
            if (kind(rng) == 0) {
                int i = pick(rng), j = pick(rng);
                if (i == j) continue;
                IntMatrix t = u;
                for (std::size_t c = 0; c < n; ++c)
                    std::swap(t.at(static_cast<std::size_t>(i), c),
                              t.at(static_cast<std::size_t>(j), c));
                u = t;
            } else {
                int i = pick(rng), j = pick(rng);
                int c = shear(rng);
                if (i == j || c == 0) continue;
                IntMatrix t = u;
                for (std::size_t col = 0; col < n; ++col)
                    t.at(static_cast<std::size_t>(i), col) +=
                        Int(c) * t.at(static_cast<std::size_t>(j), col);
                if (max_coord(t) > spread_bound) continue;
                u = t;
            }
        }
    } else if (n == 1) {
        if (rng() % 2 == 0) u.at(0, 0) = -1;
    }

    IntVec t(n);
    std::uniform_int_distribution<int> tr(-10, 10);
    for (std::size_t i = 0; i < n; ++i) t[i] = tr(rng);
    AffineMap map{u, t};
    return {p.apply(map), map};
}

} // namespace latpol

#endif
