#include "g7/classify.hpp"

#include <algorithm>

#include <json.hpp>

#include "g7/families.hpp"

namespace g7 {

bool lemma_p1_filter(int a, int b, int c) {
    if (!(0 <= a && a <= b && b <= c)) fail(errc::unsorted, "signature triple must be sorted");
    if ((a + b + c) % 2 != 0) return false;
    if (a == 0) return b == 1 && c == 1;
    if (a + b <= c) return false;
    if (a + 4 < c) return false;
    if (a + 8 < b + c) return false;
    return true;
}

bool prop_sum_bound(int a, int b, int c) { return a + b + c <= 17; }

bool odd_twice_rule(int a, int b, int c) {
    for (int v : {a, b, c}) {
        if (v % 2 == 0) continue;
        int mult = (a == v) + (b == v) + (c == v);
        if (mult != 2) return false;
    }
    return true;
}

std::optional<std::vector<int>> condition_satisfiable(int ell, int eps_o) {
    if (ell < 1) return std::nullopt;
    if ((7 * eps_o) % 2 != 0) return std::nullopt;
    int target = 7 * eps_o / 2;
    // count vectors: one optional zero, then counts of 1,2,3 each 0 or >= 4
    for (int c0 = 1; c0 >= 0; c0--) {
        for (int c1 = ell; c1 >= 0; c1--) {
            if (c1 != 0 && c1 < 4) continue;
            for (int c2 = ell; c2 >= 0; c2--) {
                if (c2 != 0 && c2 < 4) continue;
                int c3 = ell - c0 - c1 - c2;
                if (c3 < 0 || (c3 != 0 && c3 < 4)) continue;
                if (c1 + 2 * c2 + 3 * c3 != target) continue;
                std::vector<int> out;
                out.insert(out.end(), c0, 0);
                out.insert(out.end(), c1, 1);
                out.insert(out.end(), c2, 2);
                out.insert(out.end(), c3, 3);
                return out;
            }
        }
    }
    return std::nullopt;
}

std::vector<Signature> candidate_signatures() {
    std::vector<Signature> out;
    for (int a = 0; a <= 17; a++)
        for (int b = a; a + b <= 17; b++)
            for (int c = b; a + b + c <= 17; c++) {
                if (!lemma_p1_filter(a, b, c)) continue;
                if (!prop_sum_bound(a, b, c)) continue;
                if (!odd_twice_rule(a, b, c)) continue;
                bool ok = true;
                for (int v : {a, b, c}) {
                    int mult = (a == v) + (b == v) + (c == v);
                    if (mult != 1) continue;
                    if (!condition_satisfiable((a + b + c) / 2, v)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out.push_back({a, b, c});
            }
    return out;
}

std::vector<Signature> realizable_signatures() {
    std::vector<Signature> out;
    for (Signature s : candidate_signatures())
        if (s != Signature{4, 6, 6} && s != Signature{5, 5, 6}) out.push_back(s);
    return out;
}

const char* case_name(CaseTag t) {
    switch (t) {
    case CaseTag::truncation: return "truncation";
    case CaseTag::rotary_map: return "rotary-map";
    case CaseTag::coxeter: return "coxeter";
    case CaseTag::a_family: return "a-family";
    case CaseTag::petersen: return "petersen";
    }
    return "?";
}

ClassificationReport classify(const SimpleGraph& g) {
    if (!is_regular(g, 3)) fail(errc::not_cubic, "graph is not 3-regular");
    if (!is_connected(g)) fail(errc::not_connected, "graph is not connected");
    auto gth = girth(g);
    if (!gth || *gth != 7)
        fail(errc::girth_not_7,
             "girth is " + (gth ? std::to_string(*gth) : std::string("undefined")));

    PermutationGroup aut = automorphism_group(g);
    if (aut.orbit_count() != 1)
        fail(errc::not_vertex_transitive,
             std::to_string(aut.orbit_count()) + " vertex orbits");

    SignatureCheck sc = is_girth_regular(g);
    if (!sc.common)
        fail(errc::not_girth_regular, "vertices " + std::to_string(sc.witness_u) + " and " +
                                          std::to_string(sc.witness_v) + " differ");
    Signature sig = *sc.common;

    auto realizable = realizable_signatures();
    if (std::find(realizable.begin(), realizable.end(), sig) == realizable.end())
        fail(errc::theorem_violation,
             "signature (" + std::to_string(sig[0]) + "," + std::to_string(sig[1]) + "," +
                 std::to_string(sig[2]) + ") should not occur in a cubic vertex-transitive graph of girth 7");

    ClassificationReport r;
    r.signature = sig;
    r.vertices = g.vertex_count();
    r.aut_order = aut.order();
    r.girth_cycle_count = girth_cycles(g).size();
    r.edge_orbit_count = static_cast<int>(edge_orbits(aut, g).size());

    if (sig == Signature{0, 1, 1}) {
        r.tag = CaseTag::truncation;
        r.truncation = recover_truncation(g);
        r.scheme_arc_transitive = is_arc_transitive_scheme(r.truncation->base, r.truncation->scheme);
        if (!r.scheme_arc_transitive)
            fail(errc::theorem_violation, "recovered dihedral scheme is not arc-transitive");
    } else if (sig == Signature{2, 2, 2}) {
        r.tag = CaseTag::rotary_map;
        r.map = map_from_girth_cycles(g);
        if (!is_rotary(*r.map)) fail(errc::theorem_violation, "girth-cycle map is not rotary");
        r.euler = euler_characteristic(*r.map);
        if (*r.euler * 14 != g.vertex_count() * (6 - 7))
            fail(errc::theorem_violation, "Euler characteristic mismatch");
    } else if (sig == Signature{4, 4, 4}) {
        r.tag = CaseTag::coxeter;
        r.iso = are_isomorphic(g, coxeter());
        if (!r.iso) fail(errc::theorem_violation, "(4,4,4) graph is not the Coxeter graph");
    } else if (sig == Signature{4, 4, 6}) {
        r.tag = CaseTag::a_family;
        if (g.vertex_count() % 12 != 0)
            fail(errc::theorem_violation, "(4,4,6) order must be divisible by 12");
        r.a_param = g.vertex_count() / 4;
        r.iso = are_isomorphic(g, a_graph(*r.a_param));
        if (!r.iso)
            fail(errc::theorem_violation, "(4,4,6) graph is not A(" + std::to_string(*r.a_param) + ")");
    } else if (sig == Signature{4, 5, 5}) {
        r.tag = CaseTag::petersen;
        int n = g.vertex_count();
        std::pair<int, int> params;
        if (n == 26) params = {13, 5};
        else if (n == 30) params = {15, 4};
        else if (n == 34) params = {17, 4};
        else fail(errc::theorem_violation, "(4,5,5) order must be 26, 30 or 34");
        r.iso = are_isomorphic(g, gen_petersen(params.first, params.second));
        if (!r.iso)
            fail(errc::theorem_violation, "(4,5,5) graph is not Pet(" + std::to_string(params.first) +
                                              "," + std::to_string(params.second) + ")");
        r.petersen = params;
    } else {
        fail(errc::theorem_violation, "unhandled realizable signature");
    }
    return r;
}

std::string report_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["case"] = case_name(r.tag);
    j["signature"] = {r.signature[0], r.signature[1], r.signature[2]};
    j["girth"] = r.girth;
    nlohmann::json w = nlohmann::json::object();
    if (r.truncation) {
        w["base"] = nlohmann::json::parse(write_multigraph_json(r.truncation->base, r.truncation->scheme));
        w["arc_to_vertex"] = r.truncation->arc_to_vertex;
        w["scheme_arc_transitive"] = r.scheme_arc_transitive;
    }
    if (r.map) {
        w["map"] = nlohmann::json::parse(write_map_json(*r.map));
        w["euler_characteristic"] = *r.euler;
    }
    if (r.iso) w["isomorphism"] = r.iso->img;
    if (r.a_param) w["a_n"] = *r.a_param;
    if (r.petersen) w["petersen"] = {r.petersen->first, r.petersen->second};
    j["witness"] = std::move(w);
    j["diagnostics"] = {{"vertices", r.vertices},
                        {"aut_order", r.aut_order},
                        {"girth_cycles", r.girth_cycle_count},
                        {"edge_orbits", r.edge_orbit_count}};
    return j.dump();
}

EgrCheck edge_girth_regular_implies_arc_transitive(const SimpleGraph& g) {
    if (!is_regular(g, 3)) fail(errc::not_cubic, "graph is not 3-regular");
    auto gth = girth(g);
    if (!gth || *gth != 7)
        fail(errc::girth_not_7,
             "girth is " + (gth ? std::to_string(*gth) : std::string("undefined")));
    if (!is_vertex_transitive(g)) fail(errc::not_vertex_transitive, "input must be vertex-transitive");
    SignatureCheck sc = is_girth_regular(g);
    if (!sc.common) fail(errc::not_girth_regular, "input must be girth-regular");
    Signature sig = *sc.common;
    if (sig[0] != sig[2]) return EgrCheck{true, true};
    return EgrCheck{is_arc_transitive(g), false};
}

} // namespace g7
