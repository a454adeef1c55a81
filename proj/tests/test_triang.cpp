#include <catch2/catch_amalgamated.hpp>

#include <queue>

#include "latpol/triang.hpp"

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

std::vector<LatticePoint> lp(std::vector<std::vector<int>> pts) {
    std::vector<LatticePoint> out;
    for (auto& v : pts) {
        LatticePoint p;
        for (int x : v) p.push_back(Int(x));
        out.push_back(std::move(p));
    }
    return out;
}

Heights hv(std::vector<int> v) {
    Heights h;
    for (int x : v) h.push_back(Int(x));
    return h;
}

const LatticePolytope unit_square = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

bool flip_connected(const PointConfig& cfg, const std::vector<Triangulation>& ts) {
    if (ts.empty()) return false;
    std::map<Triangulation, std::size_t> id;
    for (std::size_t i = 0; i < ts.size(); ++i) id[ts[i]] = i;
    std::vector<bool> seen(ts.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        std::size_t cur = q.front();
        q.pop();
        for (const auto& nb : flip_neighbors(cfg, ts[cur])) {
            auto it = id.find(nb);
            REQUIRE(it != id.end()); // flips stay within the enumerated set
            if (!seen[it->second]) {
                seen[it->second] = true;
                ++reached;
                q.push(it->second);
            }
        }
    }
    return reached == ts.size();
}

} // namespace

TEST_CASE("circuits") {
    auto sq = circuit(lp({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(sq);
    CHECK(is_parallelogram(*sq));
    CHECK(sq->positive.size() == 2);
    CHECK(sq->negative.size() == 2);

    CHECK_FALSE(circuit(lp({{0, 0}, {1, 0}, {0, 1}})));

    auto line = circuit(lp({{0}, {1}, {2}}));
    REQUIRE(line);
    CHECK_FALSE(is_parallelogram(*line));
    // 0 + 2 = 2 * 1
    Int doubled = 0;
    for (auto& [i, c] : line->positive)
        if (c == 2) doubled = 1;
    for (auto& [i, c] : line->negative)
        if (c == 2) doubled = 1;
    CHECK(doubled == 1);

    auto tri = circuit(lp({{0, 0}, {2, 0}, {1, 0}}));
    REQUIRE(tri);
    CHECK_FALSE(is_parallelogram(*tri));
}

TEST_CASE("is_valid_triangulation on the unit square") {
    PointConfig cfg(unit_square);
    // points in lex order: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
    Triangulation diag1{{{0, 2, 3}, {0, 1, 3}}};
    diag1.canonicalize();
    CHECK(is_valid_triangulation(cfg, diag1));
    Triangulation diag2{{{0, 1, 2}, {1, 2, 3}}};
    diag2.canonicalize();
    CHECK(is_valid_triangulation(cfg, diag2));
    Triangulation overlap{{{0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    overlap.canonicalize();
    CHECK_FALSE(is_valid_triangulation(cfg, overlap));
}

TEST_CASE("enumerate_all counts") {
    CHECK(enumerate_all(PointConfig(unit_square)).size() == 2);
    CHECK(enumerate_all(PointConfig(poly(1, {{0}, {3}}))).size() == 4);
    CHECK(enumerate_all(PointConfig(exceptional_simplex(2))).size() == 14);
    CHECK(enumerate_all(PointConfig(lawrence_prism(hv({1, 1, 1})))).size() == 6);
    CHECK(enumerate_all(PointConfig(lawrence_prism(hv({2, 1})))).size() == 5);
}

TEST_CASE("every enumerated triangulation is valid") {
    PointConfig cfg(exceptional_simplex(2));
    auto ts = enumerate_all(cfg);
    REQUIRE(ts.size() == 14);
    for (const auto& t : ts) CHECK(is_valid_triangulation(cfg, t));
    // canonical encodings are distinct
    std::set<Triangulation> uniq(ts.begin(), ts.end());
    CHECK(uniq.size() == ts.size());
}

TEST_CASE("count_formula") {
    for (int h = 1; h <= 6; ++h) {
        Int expect = 1;
        for (int i = 1; i < h; ++i) expect *= 2;
        CHECK(count_formula(hv({h})) == expect);
    }
    CHECK(count_formula(hv({1, 1})) == 2);
    CHECK(count_formula(hv({1, 1, 1})) == 6);
    CHECK(count_formula(hv({1, 1, 1, 1})) == 24);
    CHECK(count_formula(hv({2, 1})) == 5);
    CHECK(count_formula(hv({1, 1, 2})) == 18);
}

TEST_CASE("enumerate_all matches count_formula on prisms") {
    std::vector<std::vector<int>> heightsets{
        {1, 1}, {2, 1}, {3, 1}, {2, 2}, {4, 1}, {3, 2},
        {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1}};
    for (const auto& hs : heightsets) {
        auto h = hv(hs);
        CHECK(Int(enumerate_all(PointConfig(lawrence_prism(h))).size()) ==
              count_formula(h));
    }
}

TEST_CASE("prism words") {
    // h=(1,1): the two orders of raising give the two diagonals
    auto t1 = prism_word_triangulation(hv({1, 1}), {{1, Int(1)}, {2, Int(1)}});
    auto t2 = prism_word_triangulation(hv({1, 1}), {{2, Int(1)}, {1, Int(1)}});
    CHECK(t1 != t2);
    PointConfig cfg(lawrence_prism(hv({1, 1})));
    CHECK(is_valid_triangulation(cfg, t1));
    CHECK(is_valid_triangulation(cfg, t2));

    // h=(3): compositions of 3 give all four triangulations of [0,3]
    std::vector<std::vector<std::vector<int>>> comps{
        {{1, 3}}, {{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}, {{1, 1}, {1, 1}, {1, 1}}};
    std::set<Triangulation> seen;
    for (const auto& word : comps) {
        std::vector<std::pair<std::size_t, Int>> w;
        for (const auto& l : word) w.emplace_back(l[0], Int(l[1]));
        seen.insert(prism_word_triangulation(hv({3}), w));
    }
    CHECK(seen.size() == 4);
    auto all = enumerate_all(PointConfig(lawrence_prism(hv({3}))));
    CHECK(std::set<Triangulation>(all.begin(), all.end()) == seen);

    CHECK_THROWS_AS(prism_word_triangulation(hv({2}), {{1, Int(1)}}), DimensionError);
}

TEST_CASE("gkz vectors") {
    PointConfig cfg(unit_square);
    // lex order: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
    Triangulation diag_main{{{0, 2, 3}, {0, 1, 3}}}; // diagonal (0,0)-(1,1)
    diag_main.canonicalize();
    CHECK(gkz(cfg, diag_main) == IntVec{Int(2), Int(1), Int(1), Int(2)});
    Triangulation diag_anti{{{0, 1, 2}, {1, 2, 3}}};
    diag_anti.canonicalize();
    CHECK(gkz(cfg, diag_anti) == IntVec{Int(1), Int(2), Int(2), Int(1)});

    for (const auto& t : enumerate_all(PointConfig(exceptional_simplex(2)))) {
        IntVec phi = gkz(PointConfig(exceptional_simplex(2)), t);
        Int s = 0;
        for (const auto& x : phi) s += x;
        CHECK(s == 3 * 4); // (dim+1) * Vol
    }
}

TEST_CASE("flips on the square") {
    PointConfig cfg(unit_square);
    auto ts = enumerate_all(cfg);
    REQUIRE(ts.size() == 2);
    auto c = circuit(cfg.points);
    REQUIRE(c);
    Circuit ci;
    for (std::size_t i = 0; i < c->positive.size(); ++i) ci.positive.push_back(c->positive[i]);
    for (std::size_t i = 0; i < c->negative.size(); ++i) ci.negative.push_back(c->negative[i]);
    auto f = flip(cfg, ts[0], ci);
    REQUIRE(f);
    CHECK(*f == ts[1]);
    auto back = flip(cfg, *f, ci);
    REQUIRE(back);
    CHECK(*back == ts[0]);
}

TEST_CASE("flip graph connectivity") {
    {
        PointConfig cfg(exceptional_simplex(2));
        CHECK(flip_connected(cfg, enumerate_all(cfg)));
    }
    {
        PointConfig cfg(lawrence_prism(hv({2, 2})));
        CHECK(flip_connected(cfg, enumerate_all(cfg)));
    }
    {
        PointConfig cfg(poly(1, {{0}, {4}}));
        CHECK(flip_connected(cfg, enumerate_all(cfg)));
    }
}

TEST_CASE("secondary polytopes") {
    {
        auto rep = secondary_polytope(PointConfig(exceptional_simplex(2)));
        CHECK(rep.dimension == 3);
        CHECK(rep.vertex_count == 14);
        CHECK(rep.edge_count == 21);
        CHECK(rep.facet_count == 9);
        CHECK(rep.is_simple);
        CHECK(rep.all_coherent);
    }
    {
        auto rep = secondary_polytope(PointConfig(lawrence_prism(hv({1, 1, 1}))));
        CHECK(rep.dimension == 2);
        CHECK(rep.vertex_count == 6); // hexagonal permutahedron
        CHECK(rep.edge_count == 6);
        CHECK(rep.all_coherent);
        CHECK(rep.is_simple);
    }
    {
        auto rep = secondary_polytope(PointConfig(lawrence_prism(hv({2, 1}))));
        CHECK(rep.dimension == 2);
        CHECK(rep.vertex_count == 5); // pentagon
        CHECK(rep.edge_count == 5);
        CHECK(rep.all_coherent);
    }
}

TEST_CASE("flip graph equals the secondary polytope edge graph") {
    PointConfig cfg(lawrence_prism(hv({2, 2})));
    auto rep = secondary_polytope(cfg);
    REQUIRE(rep.all_coherent);
    std::set<std::pair<std::size_t, std::size_t>> hull_edges;
    for (auto [a, b] : rep.edges) hull_edges.insert(std::minmax(a, b));
    std::map<Triangulation, std::size_t> id;
    for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
        id[rep.triangulations[i]] = i;
    std::set<std::pair<std::size_t, std::size_t>> flip_edges;
    for (std::size_t i = 0; i < rep.triangulations.size(); ++i)
        for (const auto& nb : flip_neighbors(cfg, rep.triangulations[i]))
            flip_edges.insert(std::minmax(i, id.at(nb)));
    CHECK(flip_edges == hull_edges);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_all(PointConfig(lawrence_prism(hv({5, 5})))),
                    CapExceededError);
}
