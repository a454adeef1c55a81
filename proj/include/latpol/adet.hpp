#ifndef LATPOL_ADET_HPP
#define LATPOL_ADET_HPP

// Symbolic resultants and discriminants of univariate polynomials with
// symbol coefficients, and the principal A-determinant product formula for
// Lawrence prisms. Polynomials are tiny; everything is a sparse exponent
// map over a shared, sorted variable list.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "latpol/construct.hpp"

namespace latpol {

class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(const Int& c) {
        MultiPoly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }

    static MultiPoly var(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = 1;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<unsigned>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t total_degree() const {
        std::size_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::size_t s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [av, bv, vars] = align(a, b);
        MultiPoly r;
        r.vars_ = vars;
        for (const auto& [e, c] : av) r.terms_[e] += c;
        for (const auto& [e, c] : bv) r.terms_[e] += c;
        r.prune();
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [av, bv, vars] = align(a, b);
        MultiPoly r;
        r.vars_ = vars;
        for (const auto& [ea, ca] : av)
            for (const auto& [eb, cb] : bv) {
                std::vector<unsigned> e(vars.size());
                for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
                r.terms_[e] += ca * cb;
            }
        r.prune();
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        auto [av, bv, vars] = align(a, b);
        return av == bv;
    }

    // Exact division; throws when the division leaves a remainder.
    MultiPoly divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw DimensionError("divide_exact: zero divisor");
        auto [av, dv, vars] = align(*this, d);
        MultiPoly rem;
        rem.vars_ = vars;
        rem.terms_ = av;
        MultiPoly quot;
        quot.vars_ = vars;
        auto dlead = dv.rbegin(); // lex-largest term of the divisor
        while (!rem.terms_.empty()) {
            auto rlead = rem.terms_.rbegin();
            std::vector<unsigned> e(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (rlead->first[i] < dlead->first[i])
                    throw ConsistencyError("divide_exact: inexact division");
                e[i] = rlead->first[i] - dlead->first[i];
            }
            if (rlead->second % dlead->second != 0)
                throw ConsistencyError("divide_exact: inexact division");
            Int c = rlead->second / dlead->second;
            MultiPoly mono;
            mono.vars_ = vars;
            mono.terms_[e] = c;
            quot = quot + mono;
            rem = rem - mono * d;
        }
        return quot;
    }

    Int eval(const std::map<std::string, Int>& assignment) const {
        Int total = 0;
        for (const auto& [e, c] : terms_) {
            Int t = c;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                auto it = assignment.find(vars_[i]);
                if (it == assignment.end())
                    throw DimensionError("eval: unassigned variable " + vars_[i]);
                for (unsigned k = 0; k < e[i]; ++k) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    // "coef monomial" lines in graded-lex descending term order.
    std::vector<std::string> print_terms() const {
        std::vector<std::pair<std::vector<unsigned>, Int>> ts(terms_.begin(), terms_.end());
        auto grade = [](const std::vector<unsigned>& e) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            return s;
        };
        std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
            unsigned ga = grade(a.first), gb = grade(b.first);
            if (ga != gb) return ga > gb;
            return a.first > b.first;
        });
        std::vector<std::string> out;
        for (const auto& [e, c] : ts) {
            std::ostringstream os;
            os << c;
            bool any = false;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                os << (any ? "*" : " ") << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                any = true;
            }
            if (!any) os << " 1";
            out.push_back(os.str());
        }
        return out;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    static std::tuple<std::map<std::vector<unsigned>, Int>,
                      std::map<std::vector<unsigned>, Int>, std::vector<std::string>>
    align(const MultiPoly& a, const MultiPoly& b) {
        std::vector<std::string> vars;
        std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        auto remap = [&](const MultiPoly& p) {
            std::vector<std::size_t> pos(p.vars_.size());
            for (std::size_t i = 0; i < p.vars_.size(); ++i)
                pos[i] = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin();
            std::map<std::vector<unsigned>, Int> out;
            for (const auto& [e, c] : p.terms_) {
                std::vector<unsigned> ne(vars.size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
                out[ne] = c;
            }
            return out;
        };
        return {remap(a), remap(b), vars};
    }

    std::vector<std::string> vars_; // sorted
    std::map<std::vector<unsigned>, Int> terms_;
};

// f(x) = coeffs[0] + coeffs[1] x + ... + coeffs[h] x^h with symbol entries.
struct UniPolySym {
    std::vector<MultiPoly> coeffs;

    std::size_t degree() const {
        if (coeffs.empty() || coeffs.back().is_zero())
            throw DimensionError("UniPolySym: zero leading coefficient");
        return coeffs.size() - 1;
    }

    UniPolySym derivative() const {
        UniPolySym d;
        for (std::size_t j = 1; j < coeffs.size(); ++j)
            d.coeffs.push_back(coeffs[j] * MultiPoly::constant(Int(j)));
        return d;
    }

    // generic polynomial of degree h with coefficients named a{i}_{j}
    static UniPolySym generic(std::size_t i, const Int& h) {
        UniPolySym f;
        for (Int j = 0; j <= h; ++j) {
            std::ostringstream os;
            os << "a" << i << "_" << j;
            f.coeffs.push_back(MultiPoly::var(os.str()));
        }
        return f;
    }
};

namespace detail {

// Determinant of a small symbolic matrix by minor expansion along the first
// rows, memoized on the set of remaining columns.
inline MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m) {
    std::size_t n = m.size();
    std::map<unsigned long, MultiPoly> memo;
    auto rec = [&](auto&& self, unsigned long colmask, std::size_t row) -> MultiPoly {
        if (row == n) return MultiPoly::constant(1);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        MultiPoly acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(colmask & (1UL << c))) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly sub = self(self, colmask & ~(1UL << c), row + 1);
                MultiPoly term = m[row][c] * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo[colmask] = acc;
        return acc;
    };
    if (n == 0) return MultiPoly::constant(1);
    if (n > 20) throw CapExceededError("sym_det: matrix too large");
    return rec(rec, (1UL << n) - 1, 0);
}

} // namespace detail

// Sylvester-determinant resultant, signed so that for linear f, g it equals
// a_f b_g - a_g b_f (coefficients low to high).
inline MultiPoly resultant(const UniPolySym& f, const UniPolySym& g) {
    std::size_t m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw DimensionError("resultant: needs degree >= 1");
    std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f.coeffs[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g.coeffs[n - j];
    MultiPoly d = detail::sym_det(s);
    return (m * n) % 2 == 1 ? -d : d;
}

// Res(f, f') / lc(f); 1 for linear f. Matches 4 a0 b0 - c0^2 on the generic
// quadratic a0 + c0 x + b0 x^2.
inline MultiPoly discriminant(const UniPolySym& f) {
    std::size_t m = f.degree();
    if (m < 1) throw DimensionError("discriminant: needs degree >= 1");
    if (m == 1) return MultiPoly::constant(1);
    return resultant(f, f.derivative()).divide_exact(f.coeffs.back());
}

// E_A for the Lawrence prism with heights h (all >= 1), on the generic
// coefficient symbols a{i}_{j} of f_i, i = 0..n-1:
//   (prod a_{i,0} a_{i,h_i}) (prod Discr f_i) (prod_{i<j} Res(f_i, f_j))
inline MultiPoly principal_adet_prism(const Heights& h) {
    if (h.empty()) throw DimensionError("principal_adet_prism: empty heights");
    for (const auto& x : h)
        if (x < 1) throw DimensionError("principal_adet_prism: heights must be >= 1");
    std::vector<UniPolySym> fs;
    for (std::size_t i = 0; i < h.size(); ++i) fs.push_back(UniPolySym::generic(i, h[i]));
    MultiPoly e = MultiPoly::constant(1);
    for (const auto& f : fs) e = e * f.coeffs.front() * f.coeffs.back();
    for (const auto& f : fs) e = e * discriminant(f);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) e = e * resultant(fs[i], fs[j]);
    return e;
}

// The heights-(2,1,1) expansion with the quadratic's coefficients named
// (a0, c0, b0) and the linear ones (a1, b1), (a2, b2): product formula
// against the explicitly written factors, up to one global sign.
inline bool verify_worked_example() {
    auto v = [](const char* n) { return MultiPoly::var(n); };
    UniPolySym f0{{v("a0"), v("c0"), v("b0")}};
    UniPolySym f1{{v("a1"), v("b1")}};
    UniPolySym f2{{v("a2"), v("b2")}};

    MultiPoly lhs = f0.coeffs.front() * f0.coeffs.back() * f1.coeffs.front() *
                    f1.coeffs.back() * f2.coeffs.front() * f2.coeffs.back();
    lhs = lhs * discriminant(f0) * discriminant(f1) * discriminant(f2);
    lhs = lhs * resultant(f0, f1) * resultant(f0, f2) * resultant(f1, f2);

    MultiPoly boundary = v("a0") * v("a1") * v("a2") * v("b0") * v("b1") * v("b2");
    MultiPoly discr_q = MultiPoly::constant(4) * v("a0") * v("b0") - v("c0") * v("c0");
    MultiPoly res12 = v("a1") * v("b2") - v("a2") * v("b1");
    MultiPoly res01 =
        v("a1") * v("a1") * v("b0") + v("b1") * v("b1") * v("a0") - v("a1") * v("b1") * v("c0");
    MultiPoly res02 =
        v("a2") * v("a2") * v("b0") + v("b2") * v("b2") * v("a0") - v("a2") * v("b2") * v("c0");
    MultiPoly rhs = boundary * discr_q * res12 * res01 * res02;

    return lhs == rhs || lhs == -rhs;
}

} // namespace latpol

#endif
