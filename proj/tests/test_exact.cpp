#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latpol/exact.hpp"

using namespace latpol;

namespace {

IntMatrix rand_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

LinearConstraint con(std::vector<int> c, int b, Rel r) {
    LinearConstraint lc;
    for (int x : c) lc.coeffs.push_back(Rat(x));
    lc.offset = b;
    lc.rel = r;
    return lc;
}

} // namespace

TEST_CASE("determinant basics") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    IntMatrix d2 = IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}});
    CHECK(det(d2) == 4);
    // edge matrix of the doubled triangle from the origin corner
    CHECK(det(IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}})) == 4);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMatrix a = rand_matrix(rng, n, -4, 4);
        IntMatrix b = rand_matrix(rng, n, -4, 4);
        CHECK(det(a.mul(b)) == det(a) * det(b));
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix(3, 4)) == 0);
    CHECK(rank(IntMatrix::identity(5)) == 5);
    // difference vectors of a narrow parallelogram's four vertices
    IntMatrix p = IntMatrix::from_rows({
        {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    CHECK(rank(p) == 2);
}

TEST_CASE("hnf basics") {
    auto r = hnf(IntMatrix::identity(4));
    CHECK(r.h == IntMatrix::identity(4));
    CHECK(r.u == IntMatrix::identity(4));

    auto row = hnf(IntMatrix::from_rows({{Int(2), Int(4)}}));
    CHECK(row.h.at(0, 0) == 2);
    CHECK(row.h.at(0, 1) == 4);
    CHECK(boost::multiprecision::abs(row.u.at(0, 0)) == 1);

    auto sw = hnf(IntMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}}));
    CHECK(sw.h == IntMatrix::identity(2));
    CHECK(boost::multiprecision::abs(det(sw.u)) == 1);
}

TEST_CASE("hnf properties on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMatrix m = rand_matrix(rng, n, -6, 6);
        auto r = hnf(m);
        CHECK(boost::multiprecision::abs(det(r.u)) == 1);
        CHECK(r.u.mul(m) == r.h);
    }
}

TEST_CASE("kernel lattice is saturated") {
    // row span of (2,4): kernel must be the primitive (2,-1), not (4,-2)
    auto k = kernel_lattice(IntMatrix::from_rows({{Int(2), Int(4)}}));
    REQUIRE(k.size() == 1);
    CHECK(vec_gcd(k[0]) == 1);
    CHECK(Int(2) * k[0][0] + Int(4) * k[0][1] == 0);
}

TEST_CASE("solve_rational") {
    IntMatrix id = IntMatrix::identity(3);
    RatVec b{Rat(1), Rat(2, 3), Rat(-5)};
    auto x = solve_rational(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    IntMatrix bad = IntMatrix::from_rows({{Int(1), Int(1)}, {Int(1), Int(1)}});
    CHECK_FALSE(solve_rational(bad, {Rat(0), Rat(1)}));

    // affine relation of the unit square's vertices: kernel (1,-1,-1,1)
    IntMatrix sq = IntMatrix::from_rows({
        {Int(0), Int(1), Int(0), Int(1)},
        {Int(0), Int(0), Int(1), Int(1)},
        {Int(1), Int(1), Int(1), Int(1)}});
    auto ker = kernel_lattice(sq);
    REQUIRE(ker.size() == 1);
    IntVec rel = ker[0];
    if (rel[0] < 0) for (auto& v : rel) v = -v;
    CHECK(rel == IntVec{Int(1), Int(-1), Int(-1), Int(1)});
}

TEST_CASE("fm_feasible basics") {
    CHECK(fm_feasible({con({1}, 0, Rel::Gt), con({-1}, -1, Rel::Gt)}));
    CHECK_FALSE(fm_feasible({con({1}, 0, Rel::Gt), con({-1}, 0, Rel::Gt)}));
    CHECK(fm_feasible({}));
    CHECK_FALSE(fm_feasible({con({0, 0}, 1, Rel::Ge)}));
    CHECK(fm_feasible({con({1, 1}, 2, Rel::Eq), con({1, -1}, 0, Rel::Eq)}));
    CHECK_FALSE(fm_feasible({con({1, 1}, 2, Rel::Eq), con({1, 1}, 3, Rel::Eq)}));
}

TEST_CASE("open interiors of the two triangles of the unit square are disjoint") {
    // interior of conv((0,0),(1,0),(1,1)) meets interior of conv((0,0),(0,1),(1,1))?
    // barycentric variables l for the first, m for the second
    std::vector<LinearConstraint> cs;
    // x: l2 + l3 = m3, y: l3 = m2 + m3, sums = 1
    cs.push_back(con({0, 1, 1, 0, 0, -1}, 0, Rel::Eq));
    cs.push_back(con({0, 0, 1, 0, -1, -1}, 0, Rel::Eq));
    cs.push_back(con({1, 1, 1, 0, 0, 0}, 1, Rel::Eq));
    cs.push_back(con({0, 0, 0, 1, 1, 1}, 1, Rel::Eq));
    for (int i = 0; i < 6; ++i) {
        std::vector<int> c(6, 0);
        c[i] = 1;
        cs.push_back(con(c, 0, Rel::Gt));
    }
    CHECK_FALSE(fm_feasible(cs));
}

TEST_CASE("fm_feasible agrees with grid sampling") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> off(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t dim = 2 + trial % 2;
        std::vector<LinearConstraint> cs;
        for (int i = 0; i < 5; ++i) {
            LinearConstraint lc;
            for (std::size_t j = 0; j < dim; ++j) lc.coeffs.push_back(Rat(coef(rng)));
            lc.offset = off(rng);
            lc.rel = (i % 2 == 0) ? Rel::Ge : Rel::Gt;
            cs.push_back(lc);
        }
        // grid over [-2,2]^dim with step 1/8
        bool grid_hit = false;
        std::vector<int> g(dim, -16);
        while (true) {
            bool ok = true;
            for (const auto& c : cs) {
                Rat lhs = 0;
                for (std::size_t j = 0; j < dim; ++j) lhs += c.coeffs[j] * Rat(g[j], 8);
                if (c.rel == Rel::Gt ? !(lhs > c.offset) : !(lhs >= c.offset)) {
                    ok = false;
                    break;
                }
            }
            if (ok) { grid_hit = true; break; }
            std::size_t j = 0;
            while (j < dim && ++g[j] > 16) g[j++] = -16;
            if (j == dim) break;
        }
        if (grid_hit) CHECK(fm_feasible(cs));
    }
}
