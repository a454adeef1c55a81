#ifndef LATPOL_EXACT_HPP
#define LATPOL_EXACT_HPP

// Exact integer / rational linear algebra: determinants, rank, Hermite
// normal form, saturated kernels, rational solving and Fourier-Motzkin
// feasibility. Everything here is a pure function on immutable values.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latpol/errors.hpp"

namespace latpol {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    return g;
}

// Divides v by the gcd of its entries; zero vector stays zero.
inline IntVec primitive(IntVec v) {
    Int g = vec_gcd(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// Rounds q down / up to the nearest integer.
inline Int floor_rat(const Rat& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

inline Int ceil_rat(const Rat& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);
    Int t = n / d;
    if (n % d != 0 && n > 0) ++t;
    return t;
}

// ---------------------------------------------------------------------------
// IntMatrix

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        IntMatrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DimensionError("ragged row list");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_cols(const std::vector<IntVec>& cols) {
        std::size_t r = cols.empty() ? 0 : cols.front().size();
        IntMatrix m(r, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != r) throw DimensionError("ragged column list");
            for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        IntVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    IntVec col(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix mul(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p.at(i, j) += at(i, k) * o.at(k, j);
            }
        return p;
    }

    IntVec mul_vec(const IntVec& v) const {
        if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
        IntVec r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Fraction-free Bareiss determinant.
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

// Rank over the rationals, by fraction-free elimination.
inline std::size_t rank(const IntMatrix& m) {
    IntMatrix w = m;
    std::size_t r = 0;
    std::size_t nr = w.rows(), nc = w.cols();
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && w.at(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(w.at(r, j), w.at(p, j));
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (w.at(i, c) == 0) continue;
            Int f1 = w.at(r, c), f2 = w.at(i, c);
            Int g = int_gcd(f1, f2);
            f1 /= g;
            f2 /= g;
            for (std::size_t j = c; j < nc; ++j)
                w.at(i, j) = f1 * w.at(i, j) - f2 * w.at(r, j);
        }
        ++r;
    }
    return r;
}

struct HnfResult {
    IntMatrix h; // row Hermite normal form
    IntMatrix u; // unimodular, u * input = h
};

// Row-style HNF: pivots positive, entries above a pivot reduced into
// [0, pivot), zero rows at the bottom.
inline HnfResult hnf(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(nr);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (std::size_t j = 0; j < nr; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto negate_row = [&](std::size_t a) {
        for (std::size_t j = 0; j < nc; ++j) h.at(a, j) = -h.at(a, j);
        for (std::size_t j = 0; j < nr; ++j) u.at(a, j) = -u.at(a, j);
    };
    // row a -= q * row b
    auto sub_rows = [&](std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < nc; ++j) h.at(a, j) -= q * h.at(b, j);
        for (std::size_t j = 0; j < nr; ++j) u.at(a, j) -= q * u.at(b, j);
    };

    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // gcd-reduce column c below row r via euclidean row ops
        while (true) {
            std::size_t p = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h.at(i, c) != 0 &&
                    (p == nr || boost::multiprecision::abs(h.at(i, c)) <
                                    boost::multiprecision::abs(h.at(p, c))))
                    p = i;
            }
            if (p == nr) break; // column all zero below r
            swap_rows(r, p);
            if (h.at(r, c) < 0) negate_row(r);
            bool clean = true;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                if (h.at(i, c) - q * h.at(r, c) < 0) --q; // floor division remainder >= 0
                sub_rows(i, r, q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < nr && h.at(r, c) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                Int q = h.at(i, c) / h.at(r, c);
                if (h.at(i, c) - q * h.at(r, c) < 0) --q;
                sub_rows(i, r, q);
            }
            pivot_col.push_back(c);
            ++r;
        }
    }
    return {h, u};
}

// Basis of the saturated integer kernel {x : m x = 0}, returned as rows.
inline std::vector<IntVec> kernel_lattice(const IntMatrix& m) {
    // Column operations on m = row operations on m^T. If u m^T = h with the
    // last rows of h zero, the matching rows of u span the kernel; a kernel
    // obtained this way is automatically saturated.
    HnfResult res = hnf(m.transpose());
    std::size_t rk = 0;
    for (std::size_t i = 0; i < res.h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < res.h.cols(); ++j)
            if (res.h.at(i, j) != 0) { nz = true; break; }
        if (nz) rk = i + 1;
    }
    std::vector<IntVec> out;
    for (std::size_t i = rk; i < res.u.rows(); ++i) out.push_back(res.u.row(i));
    return out;
}

// Some rational solution of m x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve_rational(const IntMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve_rational: shape mismatch");
    std::size_t nr = m.rows(), nc = m.cols();
    // augmented rational elimination
    std::vector<RatVec> w(nr, RatVec(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][nc] = b[i];
    }
    std::vector<std::ptrdiff_t> pivot_of_row(nr, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && w[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(w[p], w[r]);
        Rat pv = w[r][c];
        for (std::size_t j = c; j <= nc; ++j) w[r][j] /= pv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = c; j <= nc; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_of_row[r] = static_cast<std::ptrdiff_t>(c);
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (w[i][nc] != 0) return std::nullopt;
    RatVec x(nc, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[static_cast<std::size_t>(pivot_of_row[i])] = w[i][nc];
    return x;
}

// Inverse of a unimodular integer matrix (|det| = 1); integral by construction.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: not square");
    Int d = det(m);
    if (d != 1 && d != -1) throw DimensionError("inverse: matrix not unimodular");
    std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rat(0));
        e[j] = 1;
        auto x = solve_rational(m, e);
        if (!x) throw ConsistencyError("unimodular matrix failed to invert");
        for (std::size_t i = 0; i < n; ++i) {
            Rat v = (*x)[i];
            if (boost::multiprecision::denominator(v) != 1)
                throw ConsistencyError("unimodular inverse not integral");
            inv.at(i, j) = boost::multiprecision::numerator(v);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility

enum class Rel { Ge, Gt, Eq }; // coeffs . x  (>= | > | =)  offset

struct LinearConstraint {
    RatVec coeffs;
    Rat offset;
    Rel rel = Rel::Ge;
};

namespace detail {

struct FmRow {
    RatVec c;
    Rat b;
    bool strict;
};

// Scales so the coefficient vector is a primitive integer vector (offset
// scaled along); pure constants are left untouched.
inline void fm_normalize(FmRow& r) {
    Int l = 1;
    for (const auto& q : r.c) l = l / int_gcd(l, boost::multiprecision::denominator(q)) *
                                 boost::multiprecision::denominator(q);
    Int g = 0;
    for (const auto& q : r.c) g = int_gcd(g, boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
    if (g == 0) return;
    Rat f = Rat(l) / Rat(g);
    for (auto& q : r.c) q *= f;
    r.b *= f;
}

inline bool fm_constant_ok(const FmRow& r) {
    // all coefficients zero: 0 >= b or 0 > b
    return r.strict ? (r.b < 0) : (r.b <= 0);
}

} // namespace detail

// Exact feasibility of a (possibly strict) rational linear system.
// Equalities are eliminated by substitution first, then classic
// Fourier-Motzkin on the inequalities.
inline bool fm_feasible(const std::vector<LinearConstraint>& cs) {
    std::size_t n = 0;
    for (const auto& c : cs) n = std::max(n, c.coeffs.size());

    std::vector<detail::FmRow> eqs, ineqs;
    for (const auto& c : cs) {
        detail::FmRow r;
        r.c = c.coeffs;
        r.c.resize(n, Rat(0));
        r.b = c.offset;
        r.strict = (c.rel == Rel::Gt);
        if (c.rel == Rel::Eq)
            eqs.push_back(std::move(r));
        else
            ineqs.push_back(std::move(r));
    }

    // substitute equalities
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        auto& eq = eqs[e];
        std::size_t v = n;
        for (std::size_t j = 0; j < n; ++j)
            if (eq.c[j] != 0) { v = j; break; }
        if (v == n) {
            if (eq.b != 0) return false;
            continue;
        }
        // x_v = (b - sum_{j != v} c_j x_j) / c_v ; fold into every other row
        Rat cv = eq.c[v];
        auto fold = [&](detail::FmRow& r) {
            if (r.c[v] == 0) return;
            Rat f = r.c[v] / cv;
            for (std::size_t j = 0; j < n; ++j) r.c[j] -= f * eq.c[j];
            r.b -= f * eq.b;
        };
        for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) fold(eqs[e2]);
        for (auto& r : ineqs) fold(r);
    }

    // Fourier-Motzkin elimination
    while (true) {
        // drop satisfied constants, fail on violated ones, dedupe
        std::map<std::pair<std::vector<Rat>, bool>, Rat> best;
        std::vector<detail::FmRow> cur;
        for (auto& r : ineqs) {
            bool allz = true;
            for (const auto& q : r.c)
                if (q != 0) { allz = false; break; }
            if (allz) {
                if (!detail::fm_constant_ok(r)) return false;
                continue;
            }
            detail::fm_normalize(r);
            auto key = std::make_pair(r.c, r.strict);
            auto it = best.find(key);
            if (it == best.end() || it->second < r.b) best[key] = r.b;
        }
        for (auto& [key, b] : best) cur.push_back({key.first, b, key.second});
        ineqs = std::move(cur);
        if (ineqs.empty()) return true;

        // pick the variable with the cheapest lower*upper pairing
        std::size_t bestv = n;
        std::size_t bestcost = 0;
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t lo = 0, hi = 0;
            for (const auto& r : ineqs) {
                if (r.c[v] > 0) ++lo;
                else if (r.c[v] < 0) ++hi;
            }
            if (lo + hi == 0) continue;
            std::size_t cost = lo * hi;
            if (bestv == n || cost < bestcost) { bestv = v; bestcost = cost; }
        }
        if (bestv == n) continue; // no variables left; loop re-checks constants

        std::vector<detail::FmRow> lows, highs, rest;
        for (auto& r : ineqs) {
            if (r.c[bestv] > 0) lows.push_back(std::move(r));
            else if (r.c[bestv] < 0) highs.push_back(std::move(r));
            else rest.push_back(std::move(r));
        }
        for (const auto& lo : lows)
            for (const auto& hi : highs) {
                // lo: c_v x_v >= b - rest (c_v > 0); hi gives an upper bound
                detail::FmRow r;
                r.c.resize(n);
                Rat a = lo.c[bestv], bq = -hi.c[bestv];
                for (std::size_t j = 0; j < n; ++j) r.c[j] = bq * lo.c[j] + a * hi.c[j];
                r.b = bq * lo.b + a * hi.b;
                r.strict = lo.strict || hi.strict;
                rest.push_back(std::move(r));
            }
        ineqs = std::move(rest);
    }
}

} // namespace latpol

#endif
