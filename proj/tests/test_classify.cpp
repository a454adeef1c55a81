#include <catch2/catch_amalgamated.hpp>

#include "latpol/classify.hpp"

using namespace latpol;

namespace {

LatticePolytope poly(std::size_t n, std::vector<std::vector<int>> pts) {
    std::vector<LatticePoint> gs;
    for (auto& v : pts) {
        LatticePoint p;
        for (int x : v) p.push_back(Int(x));
        gs.push_back(std::move(p));
    }
    return LatticePolytope(n, std::move(gs));
}

Heights hv(std::vector<int> v) {
    Heights h;
    for (int x : v) h.push_back(Int(x));
    return h;
}

} // namespace

TEST_CASE("is_narrow") {
    CHECK(is_narrow(basic_simplex(3)));
    CHECK_FALSE(is_narrow(exceptional_simplex(2)));
    CHECK(is_narrow(lawrence_prism(hv({1, 1}))));
    CHECK_THROWS_AS(is_narrow(poly(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}})),
                    DimensionError);
}

TEST_CASE("long edges") {
    CHECK(long_edges(exceptional_simplex(2)).size() == 3);

    auto le = long_edges(lawrence_prism(hv({3, 2})));
    REQUIRE(le.size() == 2);
    // the two long edges of a prism are parallel
    IntVec d0 = primitive(vec_sub(le[0].b, le[0].a));
    IntVec d1 = primitive(vec_sub(le[1].b, le[1].a));
    CHECK((d0 == d1 || d0 == vec_scale(-1, d1)));

    CHECK(long_edges(lawrence_prism(hv({1, 1, 1}))).empty());
}

TEST_CASE("classify the canonical representatives") {
    CHECK(classify(basic_simplex(4)).tag == ClassTag::BasicSimplex);
    auto e = classify(exceptional_simplex(3));
    CHECK(e.tag == ClassTag::Exceptional);
    CHECK(e.n == 3);
    auto l = classify(lawrence_prism(hv({3, 2})));
    CHECK(l.tag == ClassTag::LawrencePrism);
    CHECK(l.heights == hv({3, 2}));
    CHECK(classify(poly(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}})).tag ==
          ClassTag::NotDegreeLeOne);
}

TEST_CASE("classification roundtrips through scrambling") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto [q, m] = scramble(exceptional_simplex(3), seed);
        auto c = classify(q);
        CHECK(c.tag == ClassTag::Exceptional);
        CHECK(c.n == 3);
        CHECK(verify_main_theorem(q));
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto [q, m] = scramble(lawrence_prism(hv({3, 2})), seed);
        auto c = classify(q);
        CHECK(c.tag == ClassTag::LawrencePrism);
        CHECK(c.heights == hv({3, 2}));
        CHECK(verify_main_theorem(q));
    }
}

TEST_CASE("heights multiset is reported sorted descending") {
    auto c = classify(lawrence_prism(hv({1, 4, 2})));
    CHECK(c.heights == hv({4, 2, 1}));
}

TEST_CASE("pyramids over prisms pick up zero heights") {
    auto p = pyramid(lawrence_prism(hv({2, 2})), 2);
    auto c = classify(p);
    CHECK(c.tag == ClassTag::LawrencePrism);
    CHECK(c.heights == hv({2, 2, 0, 0}));
    CHECK(verify_main_theorem(p));
}

TEST_CASE("witness maps carry lattice points bijectively") {
    auto [q, m] = scramble(lawrence_prism(hv({2, 1, 1})), 9);
    auto c = classify(q);
    REQUIRE(c.witness);
    CHECK(c.witness->is_unimodular());
    auto canon = canonical_polytope(c, q.dimension());
    REQUIRE(canon);
    auto pts = q.lattice_points(1);
    auto canon_pts = canon->lattice_points(1);
    std::vector<LatticePoint> imgs;
    for (const auto& x : pts) imgs.push_back((*c.witness)(x));
    std::sort(imgs.begin(), imgs.end());
    CHECK(imgs == canon_pts);
}

TEST_CASE("lower-dimensional inputs classify inside their hull") {
    // a prism (3,2) embedded on a plane in Z^3
    auto p3 = poly(3, {{0, 0, 0}, {0, 3, 3}, {1, 0, 0}, {1, 2, 2}});
    auto c = classify(p3);
    CHECK(c.tag == ClassTag::LawrencePrism);
    CHECK(c.heights == hv({3, 2}));
    CHECK(verify_main_theorem(p3));
}

TEST_CASE("verify_main_theorem across mixed degrees") {
    std::vector<LatticePolytope> corpus{
        basic_simplex(2), basic_simplex(5), exceptional_simplex(2),
        exceptional_simplex(4), lawrence_prism(hv({4, 1})),
        lawrence_prism(hv({2, 2, 1})), poly(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}),
        poly(2, {{0, 0}, {3, 0}, {0, 3}}),
        poly(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}})};
    for (const auto& p : corpus) CHECK(verify_main_theorem(p));
}

TEST_CASE("exceptional and prism are mutually exclusive") {
    for (std::size_t n = 2; n <= 4; ++n) {
        auto c = classify(exceptional_simplex(n));
        CHECK(c.tag == ClassTag::Exceptional);
    }
}
