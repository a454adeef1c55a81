// latpol: JSON-speaking command-line front end.
// Exit codes: 0 success, 1 computational cap exceeded, 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpol/adet.hpp"
#include "latpol/checks.hpp"
#include "latpol/classify.hpp"
#include "latpol/construct.hpp"
#include "latpol/ehrhart.hpp"
#include "latpol/io.hpp"
#include "latpol/triang.hpp"

using nlohmann::json;
using namespace latpol;

namespace {

Heights parse_heights(const std::string& s) {
    Heights h;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            h.push_back(Int(v));
        } catch (const std::exception&) {
            throw SchemaError("bad height entry: '" + tok + "'");
        }
    }
    if (h.empty()) throw SchemaError("--heights needs at least one entry");
    return h;
}

LatticePolytope load_input(const std::string& path) {
    if (path.empty() || path == "-") return read_polytope(std::cin);
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    return read_polytope(in);
}

json load_input_json(const std::string& path) {
    try {
        if (path.empty() || path == "-") {
            json j;
            std::cin >> j;
            return j;
        }
        std::ifstream in(path);
        if (!in) throw SchemaError("cannot open input file: " + path);
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

json vec_json(const IntVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_int64(x));
    return arr;
}

json hstar_json(const HStarVector& hs) {
    // report coefficients up to the degree (trailing zeros trimmed)
    json arr = json::array();
    for (std::size_t i = 0; i <= hs.degree(); ++i) arr.push_back(to_int64(hs.coeffs[i]));
    return arr;
}

json triangulation_json(const Triangulation& t) {
    json simps = json::array();
    for (const auto& s : t.simplices) {
        json row = json::array();
        for (std::size_t i : s) row.push_back(i);
        simps.push_back(std::move(row));
    }
    return json{{"simplices", std::move(simps)}};
}

json classification_json(const Classification& c) {
    json j;
    j["tag"] = to_string(c.tag);
    json hs = json::array();
    for (const auto& h : c.heights) hs.push_back(to_int64(h));
    j["heights"] = std::move(hs);
    j["n"] = c.n;
    if (c.witness) {
        json lin = json::array();
        for (std::size_t r = 0; r < c.witness->linear.rows(); ++r)
            lin.push_back(vec_json(c.witness->linear.row(r)));
        j["witness"] = json{{"linear", std::move(lin)},
                            {"translation", vec_json(c.witness->translation)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct Options {
    std::string heights;
    std::string input;
    std::size_t n = 0;
    std::size_t r = 1;
    long long k = 1;
    std::uint64_t seed = 0;
    std::size_t max_points = kMaxConfigPoints;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* c) { c->add_option("--input", opt.input, "polytope JSON file (default stdin)"); };

    auto* info = app.add_subcommand("info", "dimension, vertices, lattice points");
    add_input(info);
    auto* hst = app.add_subcommand("hstar", "h*-vector");
    add_input(hst);
    auto* deg = app.add_subcommand("degree", "degree via h* and via interior points");
    add_input(deg);
    auto* cls = app.add_subcommand("classify", "degree <= 1 classification with witness");
    add_input(cls);

    auto* tri = app.add_subcommand("triangulations", "full triangulations of all lattice points");
    tri->require_subcommand(1);
    auto* tri_count = tri->add_subcommand("count", "number of triangulations");
    auto* tri_list = tri->add_subcommand("list", "all triangulations");
    auto* tri_flip = tri->add_subcommand("flipgraph", "flip graph on the enumerated list");
    for (auto* c : {tri_count, tri_list, tri_flip}) {
        add_input(c);
        c->add_option("--max-points", opt.max_points, "enumeration cap override");
    }

    auto* sec = app.add_subcommand("secondary", "secondary polytope report");
    add_input(sec);
    sec->add_option("--max-points", opt.max_points, "enumeration cap override");

    auto* adet_cmd = app.add_subcommand("adet", "principal A-determinant of a Lawrence prism");
    adet_cmd->add_option("--heights", opt.heights, "comma-separated heights");
    bool verify_example = false;
    adet_cmd->add_flag("--verify-example", verify_example, "check the worked factorization");

    auto* gen = app.add_subcommand("generate", "construct named polytopes");
    gen->require_subcommand(1);
    auto* g_prism = gen->add_subcommand("prism", "Lawrence prism");
    g_prism->add_option("--heights", opt.heights, "comma-separated heights")->required();
    auto* g_exc = gen->add_subcommand("exceptional", "exceptional simplex");
    g_exc->add_option("--n", opt.n, "dimension")->required();
    auto* g_basic = gen->add_subcommand("basic", "basic simplex");
    g_basic->add_option("--n", opt.n, "dimension")->required();
    auto* g_cay = gen->add_subcommand("cayley", "Cayley polytope of a document array");
    add_input(g_cay);
    auto* g_pyr = gen->add_subcommand("pyramid", "r-fold pyramid");
    add_input(g_pyr);
    g_pyr->add_option("--r", opt.r, "pyramid steps");
    auto* g_dil = gen->add_subcommand("dilate", "k-th dilate");
    add_input(g_dil);
    g_dil->add_option("--k", opt.k, "dilation factor");
    auto* g_scr = gen->add_subcommand("scramble", "random unimodular image");
    add_input(g_scr);
    g_scr->add_option("--seed", opt.seed, "RNG seed");

    auto* chk = app.add_subcommand("check", "reproduction batteries");
    auto* chk_paper = chk->add_subcommand("paper-suite", "run the acceptance battery");
    chk->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        std::cout << "{}\n";
        return 2;
    }

    try {
        if (*info) {
            auto p = load_input(opt.input);
            auto pts = p.lattice_points(1);
            emit(json{{"ambient_dim", p.ambient_dim()},
                      {"dim", p.dimension()},
                      {"vertices", json_from_points(p.vertices())},
                      {"lattice_points", json_from_points(pts)},
                      {"lattice_point_count", pts.size()}});
        } else if (*hst) {
            auto hs = hstar(load_input(opt.input));
            emit(json{{"hstar", hstar_json(hs)}});
        } else if (*deg) {
            auto p = load_input(opt.input);
            std::size_t d1 = degree(p), d2 = degree_via_interior(p);
            emit(json{{"degree", d1}, {"degree_via_interior", d2}, {"agree", d1 == d2}});
        } else if (*cls) {
            emit(classification_json(classify(load_input(opt.input))));
        } else if (*tri) {
            PointConfig cfg(load_input(opt.input));
            auto ts = enumerate_all(cfg, opt.max_points);
            if (*tri_count) {
                emit(json{{"count", ts.size()}});
            } else if (*tri_list) {
                json arr = json::array();
                for (const auto& t : ts) arr.push_back(triangulation_json(t));
                emit(json{{"count", ts.size()}, {"triangulations", std::move(arr)}});
            } else {
                std::map<Triangulation, std::size_t> id;
                for (std::size_t i = 0; i < ts.size(); ++i) id[ts[i]] = i;
                std::set<std::pair<std::size_t, std::size_t>> edges;
                for (std::size_t i = 0; i < ts.size(); ++i)
                    for (const auto& nb : flip_neighbors(cfg, ts[i]))
                        edges.insert(std::minmax(i, id.at(nb)));
                json earr = json::array();
                for (const auto& [a, b] : edges) earr.push_back(json::array({a, b}));
                emit(json{{"count", ts.size()}, {"edges", std::move(earr)}});
            }
        } else if (*sec) {
            PointConfig cfg(load_input(opt.input));
            auto rep = secondary_polytope(cfg, opt.max_points);
            json gkzs = json::array();
            for (const auto& t : rep.triangulations) gkzs.push_back(vec_json(gkz(cfg, t)));
            json earr = json::array();
            for (const auto& [a, b] : rep.edges) earr.push_back(json::array({a, b}));
            emit(json{{"dimension", rep.dimension},
                      {"vertex_count", rep.vertex_count},
                      {"edge_count", rep.edge_count},
                      {"facet_count", rep.facet_count},
                      {"is_simple", rep.is_simple},
                      {"all_coherent", rep.all_coherent},
                      {"gkz_vectors", std::move(gkzs)},
                      {"edges", std::move(earr)}});
        } else if (*adet_cmd) {
            if (verify_example) {
                bool ok = verify_worked_example();
                if (!ok) std::cerr << "worked example mismatch\n";
                emit(json{{"match", ok}});
            } else {
                if (opt.heights.empty()) throw SchemaError("adet needs --heights or --verify-example");
                auto poly = principal_adet_prism(parse_heights(opt.heights));
                json terms = json::array();
                for (const auto& line : poly.print_terms()) terms.push_back(line);
                emit(json{{"total_degree", poly.total_degree()}, {"terms", std::move(terms)}});
            }
        } else if (*gen) {
            LatticePolytope out = basic_simplex(1);
            std::string name;
            if (*g_prism) {
                out = lawrence_prism(parse_heights(opt.heights));
                name = "prism";
            } else if (*g_exc) {
                out = exceptional_simplex(opt.n);
                name = "exceptional";
            } else if (*g_basic) {
                out = basic_simplex(opt.n);
                name = "basic";
            } else if (*g_cay) {
                json arr = load_input_json(opt.input);
                if (!arr.is_array() || arr.empty())
                    throw SchemaError("cayley expects a JSON array of polytope documents");
                std::vector<LatticePolytope> polys;
                for (const auto& j : arr) polys.push_back(document_from_json(j).to_polytope());
                out = cayley(polys);
                name = "cayley";
            } else if (*g_pyr) {
                out = pyramid(load_input(opt.input), opt.r);
                name = "pyramid";
            } else if (*g_dil) {
                if (opt.k < 1) throw SchemaError("--k must be positive");
                out = dilate(load_input(opt.input), Int(opt.k));
                name = "dilate";
            } else {
                out = scramble(load_input(opt.input), opt.seed).first;
                name = "scramble";
            }
            emit(write_polytope(out, name));
        } else if (*chk_paper) {
            auto results = checks::run_paper_suite();
            bool all = true;
            json arr = json::array();
            for (const auto& r : results) {
                std::cerr << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
                          << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
                arr.push_back(json{{"name", r.name}, {"pass", r.pass}});
                all = all && r.pass;
            }
            emit(json{{"pass", all}, {"results", std::move(arr)}});
            return all ? 0 : 1;
        }
    } catch (const CapExceededError& e) {
        std::cerr << e.what() << "\n";
        std::cout << "{}\n";
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << e.what() << "\n";
        std::cout << "{}\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << e.what() << "\n";
        std::cout << "{}\n";
        return 2;
    }
    return 0;
}
