#ifndef LATPOL_IO_HPP
#define LATPOL_IO_HPP

// JSON (de)serialization of polytope documents:
//   {"name": optional string, "ambient_dim": N, "points": [[...], ...]}

#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "latpol/polytope.hpp"

namespace latpol {

struct PolytopeDocument {
    std::optional<std::string> name;
    std::size_t ambient_dim = 0;
    std::vector<LatticePoint> points;

    LatticePolytope to_polytope() const { return LatticePolytope(ambient_dim, points); }
};

inline PolytopeDocument document_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("polytope document must be an object");
    PolytopeDocument doc;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw SchemaError("name must be a string");
        doc.name = j.at("name").get<std::string>();
    }
    if (!j.contains("ambient_dim") || !j.at("ambient_dim").is_number_integer() ||
        j.at("ambient_dim").get<long long>() < 0)
        throw SchemaError("ambient_dim must be a non-negative integer");
    doc.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    if (!j.contains("points") || !j.at("points").is_array() || j.at("points").empty())
        throw SchemaError("points must be a non-empty array");
    for (const auto& row : j.at("points")) {
        if (!row.is_array() || row.size() != doc.ambient_dim)
            throw SchemaError("each point must be a vector of length ambient_dim");
        LatticePoint p;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw SchemaError("point entries must be integers");
            p.push_back(Int(x.get<long long>()));
        }
        doc.points.push_back(std::move(p));
    }
    // canonicalize: sort lexicographically, drop duplicates
    std::sort(doc.points.begin(), doc.points.end());
    doc.points.erase(std::unique(doc.points.begin(), doc.points.end()), doc.points.end());
    return doc;
}

inline long long to_int64(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw SchemaError("coordinate out of 64-bit range");
    return static_cast<long long>(x);
}

inline nlohmann::json json_from_points(const std::vector<LatticePoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : p) row.push_back(to_int64(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

inline nlohmann::json document_to_json(const PolytopeDocument& doc) {
    nlohmann::json j;
    if (doc.name) j["name"] = *doc.name;
    j["ambient_dim"] = doc.ambient_dim;
    j["points"] = json_from_points(doc.points);
    return j;
}

inline LatticePolytope read_polytope(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j).to_polytope();
}

inline nlohmann::json write_polytope(const LatticePolytope& p,
                                     const std::optional<std::string>& name = std::nullopt) {
    PolytopeDocument doc;
    doc.name = name;
    doc.ambient_dim = p.ambient_dim();
    doc.points = p.generators(); // already sorted and deduplicated
    return document_to_json(doc);
}

} // namespace latpol

#endif
