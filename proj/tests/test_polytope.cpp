#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latpol/construct.hpp"
#include "latpol/polytope.hpp"

using namespace latpol;

namespace {

LatticePoint pt(std::vector<int> v) {
    LatticePoint p;
    for (int x : v) p.push_back(Int(x));
    return p;
}

LatticePolytope poly(std::size_t n, std::vector<std::vector<int>> pts) {
    std::vector<LatticePoint> gs;
    for (auto& v : pts) gs.push_back(pt(v));
    return LatticePolytope(n, std::move(gs));
}

const LatticePolytope unit_square = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const LatticePolytope big_triangle = poly(2, {{0, 0}, {2, 0}, {0, 2}});

} // namespace

TEST_CASE("dimension") {
    CHECK(poly(3, {{1, 2, 3}}).dimension() == 0);
    CHECK(unit_square.dimension() == 2);
    // Cayley polytope of the segments [0,3] and [0,2]
    auto c = cayley({poly(1, {{0}, {3}}), poly(1, {{0}, {2}})});
    CHECK(c.dimension() == 2);
}

TEST_CASE("vertices") {
    auto seg = poly(1, {{0}, {1}, {2}});
    CHECK(seg.vertices() == std::vector<LatticePoint>{pt({0}), pt({2})});
    CHECK(unit_square.vertices().size() == 4);
    auto prism = lawrence_prism({Int(3), Int(2)});
    auto vs = prism.vertices();
    std::vector<LatticePoint> expect{pt({0, 0}), pt({0, 3}), pt({1, 0}), pt({1, 2})};
    std::sort(expect.begin(), expect.end());
    CHECK(vs == expect);
}

TEST_CASE("facets") {
    auto fs = unit_square.facets();
    REQUIRE(fs.size() == 4);
    for (const auto& f : fs)
        for (const auto& v : unit_square.vertices())
            CHECK(dot(f.normal, v) >= f.offset);

    auto ts = big_triangle.facets();
    REQUIRE(ts.size() == 3);
    bool has_diag = false;
    for (const auto& f : ts)
        if (f.normal == pt({-1, -1}) && f.offset == -2) has_diag = true;
    CHECK(has_diag);

    CHECK(basic_simplex(3).facets().size() == 4);
    CHECK_THROWS_AS(poly(2, {{0, 0}, {1, 1}}).facets(), DimensionError);
}

TEST_CASE("lattice point counts") {
    CHECK(unit_square.lattice_point_count(1) == 4);
    CHECK(unit_square.lattice_point_count(2) == 9);
    CHECK(unit_square.interior_lattice_point_count(2) == 1);
    CHECK(big_triangle.lattice_point_count(1) == 6);
    CHECK(big_triangle.interior_lattice_point_count(1) == 0);
    CHECK(unit_square.lattice_point_count(0) == 1);
    CHECK(unit_square.interior_lattice_point_count(0) == 0);
}

TEST_CASE("restrict to affine hull preserves counts") {
    // segment (0,0)-(2,2): hull lattice is generated by (1,1), image has 3 points
    auto seg = poly(2, {{0, 0}, {2, 2}});
    REQUIRE(seg.dimension() == 1);
    auto [r, iso] = seg.restrict_to_affine_hull();
    CHECK(r.lattice_point_count(1) == 3);
    CHECK(seg.lattice_point_count(1) == 3);
    for (const auto& p : seg.lattice_points(1)) CHECK(p[0] == p[1]);

    // triangle embedded in Z^3
    auto tri = poly(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
    CHECK(tri.dimension() == 2);
    CHECK(tri.lattice_point_count(1) == 4);
}

TEST_CASE("edges") {
    auto es = unit_square.edges();
    CHECK(es.size() == 4);
    for (const auto& e : es) CHECK(e.points.size() == 2);

    auto tes = big_triangle.edges();
    CHECK(tes.size() == 3);
    for (const auto& e : tes) CHECK(e.points.size() == 3);

    auto prism = lawrence_prism({Int(3), Int(2)});
    bool found_long = false;
    for (const auto& e : prism.edges())
        if (e.points.size() == 4) found_long = true;
    CHECK(found_long);
}

TEST_CASE("apply unimodular maps") {
    auto id = AffineMap::identity(2);
    CHECK(unit_square.apply(id) == unit_square);

    AffineMap shear{IntMatrix::from_rows({{Int(1), Int(1)}, {Int(0), Int(1)}}),
                    IntVec(2, Int(0))};
    auto sheared = unit_square.apply(shear);
    CHECK(sheared.lattice_point_count(1) == 4);
    CHECK(sheared.lattice_point_count(2) == 9);

    AffineMap trans{IntMatrix::identity(2), pt({5, 7})};
    CHECK(unit_square.apply(trans).lattice_point_count(1) == 4);

    AffineMap bad{IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(1)}}),
                  IntVec(2, Int(0))};
    CHECK_THROWS_AS(unit_square.apply(bad), DimensionError);
}

TEST_CASE("project") {
    IntMatrix first = IntMatrix::from_rows({{Int(1), Int(0)}});
    auto img = unit_square.project(first);
    CHECK(img.vertices() == std::vector<LatticePoint>{pt({0}), pt({1})});

    // projecting a Cayley polytope onto its simplex factor
    auto c = cayley({poly(1, {{0}, {3}}), poly(1, {{0}, {2}}), poly(1, {{0}, {1}})});
    IntMatrix last2(2, 3);
    last2.at(0, 1) = 1;
    last2.at(1, 2) = 1;
    auto simplex = c.project(last2);
    CHECK(simplex == basic_simplex(2));

    IntMatrix notsurj = IntMatrix::from_rows({{Int(2), Int(0)}});
    CHECK_THROWS_AS(unit_square.project(notsurj), DimensionError);
}

TEST_CASE("point counts are unimodular invariants") {
    std::vector<LatticePolytope> samples{unit_square, big_triangle, basic_simplex(3),
                                         lawrence_prism({Int(2), Int(1), Int(1)})};
    for (const auto& p : samples)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            auto [q, map] = scramble(p, seed);
            CHECK(q.lattice_point_count(1) == p.lattice_point_count(1));
            CHECK(q.lattice_point_count(2) == p.lattice_point_count(2));
            CHECK(q.interior_lattice_point_count(2) == p.interior_lattice_point_count(2));
        }
}

TEST_CASE("generators stay inside the hull of the vertices") {
    auto p = poly(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}});
    for (const auto& g : p.generators()) CHECK(p.contains(g));
    CHECK(p.vertices().size() == 3);
}
