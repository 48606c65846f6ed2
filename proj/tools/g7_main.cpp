#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g7/classify.hpp"
#include "g7/families.hpp"
#include "g7/maps.hpp"
#include "g7/schemes.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) g7::fail(g7::errc::schema_violation, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) g7::fail(g7::errc::schema_violation, "cannot open " + out_path);
        out << payload;
        if (payload.empty() || payload.back() != '\n') out << "\n";
    }
}

long long budget_from_env() {
    const char* s = std::getenv("G7_BUDGET");
    if (!s) return 100000000LL;
    return std::atoll(s);
}

std::string signature_str(const g7::Signature& s) {
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")";
}

g7::SimpleGraph named_graph(const std::string& name) {
    if (name == "coxeter") return g7::coxeter();
    if (name == "pet13") return g7::gen_petersen(13, 5);
    if (name == "pet15") return g7::gen_petersen(15, 4);
    if (name == "pet17") return g7::gen_petersen(17, 4);
    if (name == "klein") return g7::klein_map().skeleton();
    if (name.rfind("a", 0) == 0 && name.size() > 1) return g7::a_graph(std::stoi(name.substr(1)));
    g7::fail(g7::errc::schema_violation, "unknown graph name: " + name);
}

// verify suites -------------------------------------------------------------

struct Verifier {
    json checks = json::array();
    bool all_ok = true;
    bool as_json = false;

    void check(const std::string& name, bool ok) {
        if (!as_json) std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
        checks.push_back({{"name", name}, {"pass", ok}});
        all_ok &= ok;
    }
};

void verify_lemma41(Verifier& v, int nmax) {
    for (int n = 8; n <= nmax; n++) {
        g7::SimpleGraph g = g7::a_graph(n);
        auto gth = g7::girth(g);
        v.check("A(" + std::to_string(n) + ") girth 7", gth && *gth == 7);
        auto sc = g7::is_girth_regular(g);
        v.check("A(" + std::to_string(n) + ") signature (4,4,6)",
                sc.common && *sc.common == g7::Signature{4, 4, 6});
        bool vt = g7::is_vertex_transitive(g);
        v.check("A(" + std::to_string(n) + ") vertex-transitive iff 3|n", vt == (n % 3 == 0));
        v.check("A(" + std::to_string(n) + ") shift is an automorphism",
                g7::preserves_edges(g, g7::a_shift(n)));
        if (n % 3 == 0)
            v.check("A(" + std::to_string(n) + ") tau is an automorphism",
                    g7::preserves_edges(g, g7::a_tau(n)));
    }
}

void verify_theorem44(Verifier& v, int only_i) {
    std::vector<int> is = only_i > 0 ? std::vector<int>{only_i} : std::vector<int>{3, 4, 5};
    for (int i : is) {
        g7::SimpleGraph cay = g7::cayley_446(i);
        auto iso = g7::are_isomorphic(cay, g7::a_graph(3 * i));
        v.check("Cay_446(" + std::to_string(i) + ") isomorphic to A(" + std::to_string(3 * i) + ")",
                iso.has_value());
        auto cycles = g7::girth_cycles(cay);
        v.check("Cay_446(" + std::to_string(i) + ") has 7 girth cycles through the identity",
                static_cast<int>(cycles.through_vertex(0).size()) == 7);
        auto sig = g7::vertex_signature(cay, cycles, 0);
        v.check("Cay_446(" + std::to_string(i) + ") identity edge counts (4,4,6)",
                sig == g7::Signature{4, 4, 6});
    }
}

void verify_prop52(Verifier& v) {
    g7::SimpleGraph g = g7::coxeter();
    auto gth = g7::girth(g);
    v.check("coxeter girth 7", gth && *gth == 7);
    auto sc = g7::is_girth_regular(g);
    v.check("coxeter signature (4,4,4)", sc.common && *sc.common == g7::Signature{4, 4, 4});
    v.check("coxeter arc-transitive", g7::is_arc_transitive(g));
    v.check("coxeter |Aut| = 336", g7::automorphism_group(g).order() == 336);
    v.check("coxeter classifies to its own case", g7::classify(g).tag == g7::CaseTag::coxeter);
}

void verify_lemma55(Verifier& v) {
    for (auto [n, k] : {std::pair{13, 5}, {15, 4}, {17, 4}}) {
        g7::SimpleGraph g = g7::gen_petersen(n, k);
        auto r = g7::classify(g);
        v.check("Pet(" + std::to_string(n) + "," + std::to_string(k) + ") classifies to the Petersen case",
                r.tag == g7::CaseTag::petersen && r.signature == g7::Signature{4, 5, 5});
    }
    for (int n = 9; n <= 20; n++) {
        if (n == 15 || n == 17) continue;
        bool is_case5 = false;
        try {
            is_case5 = g7::classify(g7::gen_petersen(n, 4)).tag == g7::CaseTag::petersen;
        } catch (const g7::Error&) {
        }
        v.check("Pet(" + std::to_string(n) + ",4) is not in the Petersen case", !is_case5);
    }
}

void verify_theorem32(Verifier& v) {
    g7::TrivalentMap dodeca = g7::map_from_girth_cycles(g7::gen_petersen(10, 2));
    v.check("dodecahedron map type {5,3}", g7::map_type(dodeca) == 5);
    v.check("dodecahedron chi = 2", g7::euler_characteristic(dodeca) == 2);
    v.check("dodecahedron chi formula", 2 * 2 * 5 == 20 * (6 - 5));
    v.check("dodecahedron regular", g7::is_regular_map(dodeca));
    v.check("dodecahedron rotary", g7::is_rotary(dodeca));

    g7::TrivalentMap klein = g7::klein_map();
    v.check("klein 56 vertices / 84 edges / 24 faces",
            klein.skeleton().vertex_count() == 56 && klein.skeleton().edge_count() == 84 &&
                klein.face_count() == 24);
    v.check("klein chi = -4", g7::euler_characteristic(klein) == -4);
    v.check("klein rotary", g7::is_rotary(klein));
    v.check("klein skeleton classifies to the rotary-map case",
            g7::classify(klein.skeleton()).tag == g7::CaseTag::rotary_map);
}

void verify_condition(Verifier& v) {
    std::vector<g7::Signature> expect_cand = {{0, 1, 1}, {2, 2, 2}, {4, 4, 4}, {4, 4, 6},
                                              {4, 5, 5}, {4, 6, 6}, {5, 5, 6}};
    v.check("candidate signatures = the 7-list", g7::candidate_signatures() == expect_cand);
    std::vector<g7::Signature> expect_real = {{0, 1, 1}, {2, 2, 2}, {4, 4, 4}, {4, 4, 6}, {4, 5, 5}};
    v.check("realizable signatures = the 5-list", g7::realizable_signatures() == expect_real);
    v.check("condition (7,6) -> {3^7}",
            g7::condition_satisfiable(7, 6) == std::vector<int>(7, 3));
    std::vector<int> w84{0, 2, 2, 2, 2, 2, 2, 2};
    v.check("condition (8,4) -> {0,2^7}", g7::condition_satisfiable(8, 4) == w84);
    std::vector<int> w86{0, 3, 3, 3, 3, 3, 3, 3};
    v.check("condition (8,6) -> {0,3^7}", g7::condition_satisfiable(8, 6) == w86);
    v.check("condition (4,2) unsatisfiable", !g7::condition_satisfiable(4, 2));
    v.check("condition (5,2) unsatisfiable", !g7::condition_satisfiable(5, 2));
    v.check("condition (6,2) unsatisfiable", !g7::condition_satisfiable(6, 2));
    v.check("condition (5,4) unsatisfiable", !g7::condition_satisfiable(5, 4));
}

void verify_cuts(Verifier& v, const std::string& name, int k, int threads) {
    g7::SimpleGraph g = named_graph(name);
    auto cut = g7::has_cycle_separating_cut_below(g, k, budget_from_env(), threads);
    v.check(name + " has no cycle-separating cut of size < " + std::to_string(k), !cut.has_value());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis and classification toolkit for cubic graphs of girth 7"};
    app.require_subcommand(1);
    app.fallthrough(); // let --threads / --out appear after the subcommand
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for enumeration kernels");

    std::string out_path;
    app.add_option("--out", out_path, "write stdout payload to this file");

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a named family member, as graph6");
    std::string family;
    int opt_n = 0, opt_k = 0, opt_i = 0;
    c_construct->add_option("--family", family, "a | petersen | coxeter | cayley446 | klein | k77trunc")
        ->required();
    c_construct->add_option("--n", opt_n, "order parameter");
    c_construct->add_option("--k", opt_k, "jump parameter (petersen)");
    c_construct->add_option("--i", opt_i, "index parameter (cayley446)");

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "invariants of a graph6 input");
    std::string in_path = "-";
    bool as_json = false;
    c_analyze->add_option("input", in_path, "graph6 file or - for stdin");
    c_analyze->add_flag("--json", as_json, "JSON output");

    // classify
    auto* c_classify = app.add_subcommand("classify", "five-way classification of a graph6 input");
    c_classify->add_option("input", in_path, "graph6 file or - for stdin");
    c_classify->add_flag("--json", as_json, "JSON output");

    // isomorphic
    auto* c_iso = app.add_subcommand("isomorphic", "test two graph6 inputs for isomorphism");
    std::string in_a, in_b;
    c_iso->add_option("first", in_a)->required();
    c_iso->add_option("second", in_b)->required();
    c_iso->add_flag("--json", as_json, "JSON output");

    // truncate
    auto* c_trunc = app.add_subcommand("truncate", "truncation of a multigraph+scheme JSON input");
    c_trunc->add_option("input", in_path, "JSON file or - for stdin");
    c_trunc->add_flag("--json", as_json, "JSON output with edge classes");

    // recover
    auto* c_recover = app.add_subcommand("recover", "recover the base multigraph of a (0,1,1) graph");
    c_recover->add_option("input", in_path, "graph6 file or - for stdin");
    c_recover->add_flag("--json", as_json, "wrap output with the arc-to-vertex bijection");

    // map
    auto* c_map = app.add_subcommand("map", "trivalent map operations");
    c_map->require_subcommand(1);
    auto* m_build = c_map->add_subcommand("build-from-girth-cycles", "map whose faces are the girth cycles");
    m_build->add_option("input", in_path, "graph6 file or - for stdin");
    auto* m_rotary = c_map->add_subcommand("check-rotary", "rotary test for a map JSON input");
    m_rotary->add_option("input", in_path, "map JSON file or - for stdin");
    m_rotary->add_flag("--json", as_json, "JSON output");
    auto* m_euler = c_map->add_subcommand("euler", "Euler characteristic of a map JSON input");
    m_euler->add_option("input", in_path, "map JSON file or - for stdin");
    m_euler->add_flag("--json", as_json, "JSON output");

    // signatures
    auto* c_sigs = app.add_subcommand("signatures", "signature lists of the classification");
    bool want_cand = false, want_real = false;
    c_sigs->add_flag("--candidates", want_cand, "the seven filter survivors");
    c_sigs->add_flag("--realizable", want_real, "the five realizable signatures");
    c_sigs->add_flag("--json", as_json, "JSON output");

    // verify
    auto* c_verify = app.add_subcommand("verify", "run one verification suite");
    std::string suite, cut_graph = "coxeter";
    int cut_k = 6, v_i = 0, v_nmax = 24;
    c_verify->add_option("suite", suite, "lemma41 | theorem44 | prop52 | lemma55 | theorem32 | condition | cuts")
        ->required();
    c_verify->add_option("--i", v_i, "restrict theorem44 to one index");
    c_verify->add_option("--nmax", v_nmax, "upper n for lemma41");
    c_verify->add_option("--graph", cut_graph, "graph for the cuts suite");
    c_verify->add_option("--k", cut_k, "cut size bound for the cuts suite");
    c_verify->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);

        if (*c_construct) {
            g7::SimpleGraph g;
            if (family == "a") g = g7::a_graph(opt_n);
            else if (family == "petersen") g = g7::gen_petersen(opt_n, opt_k);
            else if (family == "coxeter") g = g7::coxeter();
            else if (family == "cayley446") g = g7::cayley_446(opt_i);
            else if (family == "klein") g = g7::klein_map().skeleton();
            else if (family == "k77trunc") {
                auto [base, scheme] = g7::k77_with_cyclic_scheme();
                g = g7::truncate(base, scheme).first;
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return 2;
            }
            emit(g7::write_graph6(g), out_path);
        } else if (*c_analyze) {
            g7::SimpleGraph g = g7::parse_graph6(read_input(in_path));
            json j;
            j["vertices"] = g.vertex_count();
            j["edges"] = g.edge_count();
            j["cubic"] = g7::is_regular(g, 3);
            j["connected"] = g7::is_connected(g);
            auto gth = g7::girth(g);
            if (gth) j["girth"] = *gth;
            else j["girth"] = nullptr;
            if (gth) {
                auto cycles = g7::girth_cycles(g);
                j["girth_cycles"] = cycles.size();
                if (g7::is_regular(g, 3)) {
                    auto sc = g7::is_girth_regular(g);
                    if (sc.common)
                        j["signature"] = {(*sc.common)[0], (*sc.common)[1], (*sc.common)[2]};
                    else
                        j["signature"] = nullptr;
                }
            }
            auto aut = g7::automorphism_group(g);
            j["aut_order"] = aut.order();
            j["vertex_transitive"] = aut.orbit_count() <= 1;
            j["edge_transitive"] = g7::edge_orbits(aut, g).size() <= 1;
            j["arc_transitive"] = g7::arc_orbits(aut, g).size() <= 1;
            if (as_json) {
                emit(j.dump(), out_path);
            } else {
                std::string text;
                for (auto& [key, val] : j.items()) text += key + ": " + val.dump() + "\n";
                emit(text, out_path);
            }
        } else if (*c_classify) {
            g7::SimpleGraph g = g7::parse_graph6(read_input(in_path));
            g7::ClassificationReport r = g7::classify(g);
            if (as_json) {
                emit(g7::report_json(r), out_path);
            } else {
                emit("case: " + std::string(g7::case_name(r.tag)) +
                         "  signature: " + signature_str(r.signature), out_path);
            }
        } else if (*c_iso) {
            g7::SimpleGraph a = g7::parse_graph6(read_input(in_a));
            g7::SimpleGraph b = g7::parse_graph6(read_input(in_b));
            auto iso = g7::are_isomorphic(a, b);
            if (as_json) {
                json j;
                j["isomorphic"] = iso.has_value();
                if (iso) j["mapping"] = iso->img;
                emit(j.dump(), out_path);
            } else {
                emit(iso ? "isomorphic" : "non-isomorphic", out_path);
            }
        } else if (*c_trunc) {
            auto [mg, scheme] = g7::parse_multigraph_json(read_input(in_path));
            if (!scheme) g7::fail(g7::errc::invalid_scheme, "input JSON carries no scheme");
            auto [trunc, w] = g7::truncate(mg, *scheme);
            if (as_json) {
                json j;
                j["graph6"] = g7::write_graph6(trunc);
                j["edge_classes"] = g7::truncation_edge_classes(trunc, w);
                j["arc_to_vertex"] = w.arc_to_vertex;
                emit(j.dump(), out_path);
            } else {
                emit(g7::write_graph6(trunc), out_path);
            }
        } else if (*c_recover) {
            g7::SimpleGraph g = g7::parse_graph6(read_input(in_path));
            g7::TruncationWitness w = g7::recover_truncation(g);
            std::string base_json = g7::write_multigraph_json(w.base, w.scheme);
            if (as_json) {
                json j;
                j["multigraph"] = json::parse(base_json);
                j["arc_to_vertex"] = w.arc_to_vertex;
                emit(j.dump(), out_path);
            } else {
                emit(base_json, out_path);
            }
        } else if (*c_map) {
            if (*m_build) {
                g7::SimpleGraph g = g7::parse_graph6(read_input(in_path));
                emit(g7::write_map_json(g7::map_from_girth_cycles(g)), out_path);
            } else if (*m_rotary) {
                g7::TrivalentMap m = g7::parse_map_json(read_input(in_path));
                bool rot = g7::is_rotary(m);
                if (as_json) emit(json{{"rotary", rot}}.dump(), out_path);
                else emit(rot ? "rotary: true" : "rotary: false", out_path);
            } else if (*m_euler) {
                g7::TrivalentMap m = g7::parse_map_json(read_input(in_path));
                int chi = g7::euler_characteristic(m);
                if (as_json) emit(json{{"euler_characteristic", chi}}.dump(), out_path);
                else emit("chi: " + std::to_string(chi), out_path);
            }
        } else if (*c_sigs) {
            if (want_cand == want_real) {
                std::cerr << "choose exactly one of --candidates / --realizable\n";
                return 2;
            }
            auto list = want_cand ? g7::candidate_signatures() : g7::realizable_signatures();
            if (as_json) {
                json j = json::array();
                for (auto& s : list) j.push_back({s[0], s[1], s[2]});
                emit(j.dump(), out_path);
            } else {
                std::string text;
                for (auto& s : list) text += signature_str(s) + "\n";
                emit(text, out_path);
            }
        } else if (*c_verify) {
            Verifier v;
            v.as_json = as_json;
            if (suite == "lemma41") verify_lemma41(v, v_nmax);
            else if (suite == "theorem44") verify_theorem44(v, v_i);
            else if (suite == "prop52") verify_prop52(v);
            else if (suite == "lemma55") verify_lemma55(v);
            else if (suite == "theorem32") verify_theorem32(v);
            else if (suite == "condition") verify_condition(v);
            else if (suite == "cuts") verify_cuts(v, cut_graph, cut_k, threads);
            else g7::fail(g7::errc::unknown_suite, suite);
            if (as_json)
                emit(json{{"suite", suite}, {"pass", v.all_ok}, {"checks", v.checks}}.dump(), out_path);
            if (!v.all_ok) return 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const g7::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
