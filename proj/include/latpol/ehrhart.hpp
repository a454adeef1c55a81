#ifndef LATPOL_EHRHART_HPP
#define LATPOL_EHRHART_HPP

// h*-vectors from dilation counts, normalized volume, the two equivalent
// degree computations and the reciprocity cross-checks.

#include <vector>

#include "latpol/polytope.hpp"

namespace latpol {

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Coefficients of (1-t)^{dim+1} P(t), always computed in affine hull
// coordinates so lower-dimensional polytopes follow the same convention.
struct HStarVector {
    IntVec coeffs; // index 0..dim
    std::size_t dim = 0;

    Int volume() const {
        Int s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) d = j;
        return d;
    }

    bool operator==(const HStarVector& o) const {
        return dim == o.dim && coeffs == o.coeffs;
    }
};

inline HStarVector hstar(const LatticePolytope& p) {
    std::size_t d = p.dimension();
    // binomial transform of the first d+1 dilation counts
    IntVec counts(d + 1);
    for (std::size_t k = 0; k <= d; ++k) counts[k] = p.lattice_point_count(Int(k));
    HStarVector h;
    h.dim = d;
    h.coeffs.resize(d + 1, Int(0));
    for (std::size_t j = 0; j <= d; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            Int term = binomial(Int(d + 1), Int(i)) * counts[j - i];
            if (i % 2 == 0) s += term;
            else s -= term;
        }
        h.coeffs[j] = s;
    }
    if (h.coeffs[0] != 1)
        throw ConsistencyError("h*: leading coefficient is not 1");
    for (const auto& c : h.coeffs)
        if (c < 0) throw ConsistencyError("h*: negative coefficient, counting bug");
    if (d >= 1 && h.coeffs[1] != counts[1] - Int(d) - 1)
        throw ConsistencyError("h*: h1 does not match the point-count identity");
    return h;
}

inline Int normalized_volume(const LatticePolytope& p) { return hstar(p).volume(); }

inline std::size_t degree(const LatticePolytope& p) { return hstar(p).degree(); }

// Smallest i >= 0 with int(k dilation) empty for all 1 <= k <= dim - i.
inline std::size_t degree_via_interior(const LatticePolytope& p) {
    std::size_t n = p.dimension();
    std::size_t empty_prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (p.interior_lattice_point_count(Int(k)) == 0) empty_prefix = k;
        else break;
    }
    return n - empty_prefix;
}

// Reciprocity: interior counts of low dilations must match the series
// (h*_n t + ... + h*_0 t^{n+1}) / (1-t)^{n+1}.
inline bool check_reciprocity(const LatticePolytope& p) {
    HStarVector h = hstar(p);
    std::size_t n = h.dim;
    std::size_t d = h.degree();

    for (std::size_t k = 1; k + d <= n; ++k)
        if (p.interior_lattice_point_count(Int(k)) != 0) return false;
    if (p.interior_lattice_point_count(Int(n - d + 1)) != h.coeffs[d]) return false;

    // series coefficients for k <= n+2; numerator coeff at t^j is h*_{n+1-j}
    for (std::size_t k = 1; k <= n + 2; ++k) {
        Int expect = 0;
        for (std::size_t j = 1; j <= std::min(k, n + 1); ++j)
            expect += h.coeffs[n + 1 - j] * binomial(Int(k - j + n), Int(n));
        if (p.interior_lattice_point_count(Int(k)) != expect) return false;
    }
    return true;
}

} // namespace latpol

#endif
