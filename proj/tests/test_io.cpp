#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "latpol/construct.hpp"
#include "latpol/io.hpp"

using namespace latpol;

TEST_CASE("document roundtrip") {
    auto j = nlohmann::json::parse(
        R"({"name":"square","ambient_dim":2,"points":[[1,1],[0,0],[1,0],[0,1],[0,0]]})");
    auto doc = document_from_json(j);
    REQUIRE(doc.name);
    CHECK(*doc.name == "square");
    CHECK(doc.ambient_dim == 2);
    // canonicalized: sorted, duplicates dropped
    REQUIRE(doc.points.size() == 4);
    CHECK(doc.points.front() == LatticePoint{Int(0), Int(0)});
    CHECK(doc.points.back() == LatticePoint{Int(1), Int(1)});

    auto j2 = document_to_json(doc);
    CHECK(document_from_json(j2).points == doc.points);

    auto p = doc.to_polytope();
    CHECK(p.dimension() == 2);
    CHECK(p.lattice_point_count(1) == 4);
}

TEST_CASE("write_polytope emits the generating set") {
    auto j = write_polytope(exceptional_simplex(2), "exc2");
    auto doc = document_from_json(j);
    CHECK(doc.to_polytope() == exceptional_simplex(2));
    REQUIRE(doc.name);
    CHECK(*doc.name == "exc2");
}

TEST_CASE("schema violations") {
    auto parse = [](const char* s) { return document_from_json(nlohmann::json::parse(s)); };
    CHECK_THROWS_AS(parse(R"([1,2])"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"points":[[0]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"ambient_dim":-1,"points":[[0]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"ambient_dim":2,"points":[]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"ambient_dim":2,"points":[[0,0],[1]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"ambient_dim":2,"points":[[0,0],[1,0.5]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"ambient_dim":2,"points":[[0,"x"]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"name":7,"ambient_dim":1,"points":[[0]]})"), SchemaError);
}

TEST_CASE("read_polytope from a stream") {
    std::istringstream good(R"({"ambient_dim":1,"points":[[0],[2]]})");
    auto p = read_polytope(good);
    CHECK(p.dimension() == 1);
    CHECK(p.lattice_point_count(1) == 3);

    std::istringstream bad("{not json");
    CHECK_THROWS_AS(read_polytope(bad), SchemaError);
}
