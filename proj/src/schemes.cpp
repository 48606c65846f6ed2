#include "g7/schemes.hpp"

#include <algorithm>

#include <json.hpp>

#include "g7/cycles.hpp"
#include "g7/symmetry.hpp"

namespace g7 {

DihedralScheme make_scheme(const MultiGraph& base, std::vector<std::vector<int>> at) {
    if (static_cast<int>(at.size()) != base.vertex_count())
        fail(errc::invalid_scheme, "scheme must list every vertex");
    std::vector<char> seen(base.arc_count(), 0);
    for (int v = 0; v < base.vertex_count(); v++) {
        if (at[v].size() != static_cast<std::size_t>(base.degree(v)))
            fail(errc::invalid_scheme, "cycle length at vertex " + std::to_string(v) +
                                           " differs from its degree");
        for (int a : at[v]) {
            if (a < 0 || a >= base.arc_count())
                fail(errc::dangling_arc_reference, "arc " + std::to_string(a) + " does not exist");
            if (base.arc_begin(a) != v)
                fail(errc::dangling_arc_reference,
                     "arc " + std::to_string(a) + " does not begin at vertex " + std::to_string(v));
            if (seen[a]) fail(errc::invalid_scheme, "arc " + std::to_string(a) + " listed twice");
            seen[a] = 1;
        }
    }
    return DihedralScheme{std::move(at)};
}

DihedralScheme sorted_scheme(const MultiGraph& base) {
    std::vector<std::vector<int>> at(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); v++) at[v] = base.arcs_at(v);
    return DihedralScheme{std::move(at)};
}

std::pair<SimpleGraph, TruncationWitness> truncate(const MultiGraph& base,
                                                   const DihedralScheme& scheme) {
    if (static_cast<int>(scheme.at.size()) != base.vertex_count())
        fail(errc::invalid_scheme, "scheme size mismatch");
    make_scheme(base, scheme.at); // full validation
    for (int v = 0; v < base.vertex_count(); v++)
        if (base.degree(v) < 3)
            fail(errc::degenerate_degree,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(base.degree(v)));

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < base.vertex_count(); v++) {
        const auto& cyc = scheme.at[v];
        int d = static_cast<int>(cyc.size());
        for (int i = 0; i < d; i++) edges.emplace_back(cyc[i], cyc[(i + 1) % d]);
    }
    for (int e = 0; e < base.edge_count(); e++) edges.emplace_back(2 * e, 2 * e + 1);

    SimpleGraph trunc(base.arc_count(), edges);
    if (trunc.edge_count() != static_cast<int>(edges.size()))
        fail(errc::invalid_scheme, "truncation is not simple");

    TruncationWitness w;
    w.base = base;
    w.scheme = scheme;
    w.arc_to_vertex.resize(base.arc_count());
    for (int a = 0; a < base.arc_count(); a++) w.arc_to_vertex[a] = a;
    return {std::move(trunc), std::move(w)};
}

std::vector<int> truncation_edge_classes(const SimpleGraph& trunc, const TruncationWitness& w) {
    std::vector<int> vertex_to_arc(trunc.vertex_count(), -1);
    for (int a = 0; a < static_cast<int>(w.arc_to_vertex.size()); a++)
        vertex_to_arc[w.arc_to_vertex[a]] = a;
    std::vector<int> classes(trunc.edge_count());
    for (int e = 0; e < trunc.edge_count(); e++) {
        auto [x, y] = trunc.edges()[e];
        int a = vertex_to_arc[x], b = vertex_to_arc[y];
        classes[e] = (a >> 1) == (b >> 1) ? 1 : 0;
    }
    return classes;
}

TruncationWitness recover_truncation(const SimpleGraph& g) {
    if (!is_regular(g, 3)) fail(errc::wrong_signature, "graph is not cubic");
    SignatureCheck sc = is_girth_regular(g);
    if (!sc.common || *sc.common != Signature{0, 1, 1})
        fail(errc::wrong_signature, "signature is not (0,1,1)");

    CycleSet cycles = girth_cycles(g);
    int n = g.vertex_count();
    std::vector<int> cycle_of(n, -1);
    for (int v = 0; v < n; v++) {
        const auto& through = cycles.through_vertex(v);
        if (through.size() != 1)
            fail(errc::coverage_failure, "vertex " + std::to_string(v) + " lies on " +
                                             std::to_string(through.size()) + " girth cycles");
        cycle_of[v] = through[0];
    }

    // Base vertices are the girth cycles; base edges come from the epsilon=0
    // edges of g in edge-id order.
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::pair<int, int>> edge_ends; // the g-endpoints, aligned with base_edges
    for (int e = 0; e < g.edge_count(); e++) {
        if (!cycles.through_edge(e).empty()) continue;
        auto [u, w] = g.edges()[e];
        if (cycle_of[u] == cycle_of[w])
            fail(errc::coverage_failure, "contraction would create a loop");
        base_edges.emplace_back(cycle_of[u], cycle_of[w]);
        edge_ends.emplace_back(u, w);
    }
    MultiGraph base(cycles.size(), base_edges);

    // Base arc 2e+0 begins at cycle_of[u]; its truncation vertex is u itself.
    std::vector<int> arc_to_vertex(base.arc_count());
    std::vector<int> arc_at_g_vertex(n, -1);
    for (int e = 0; e < base.edge_count(); e++) {
        auto [u, w] = edge_ends[e];
        arc_to_vertex[2 * e] = u;
        arc_to_vertex[2 * e + 1] = w;
        arc_at_g_vertex[u] = 2 * e;
        arc_at_g_vertex[w] = 2 * e + 1;
    }

    // Scheme: the cyclic order each girth cycle induces on its outgoing arcs.
    std::vector<std::vector<int>> at(base.vertex_count());
    for (int c = 0; c < cycles.size(); c++)
        for (int v : cycles.cycle(c).verts) {
            if (arc_at_g_vertex[v] < 0)
                fail(errc::coverage_failure, "vertex without an epsilon-0 edge");
            at[c].push_back(arc_at_g_vertex[v]);
        }
    TruncationWitness w;
    w.base = std::move(base);
    w.scheme = make_scheme(w.base, std::move(at));
    w.arc_to_vertex = std::move(arc_to_vertex);

    // The witness bijection must carry the re-truncation onto g exactly.
    auto [check, cw] = truncate(w.base, w.scheme);
    if (check.edge_count() != g.edge_count()) fail(errc::coverage_failure, "edge count mismatch");
    for (auto [x, y] : check.edges())
        if (!g.adjacent(w.arc_to_vertex[x], w.arc_to_vertex[y]))
            fail(errc::coverage_failure, "recovered base does not truncate back onto the graph");
    return w;
}

bool is_arc_transitive_scheme(const MultiGraph& base, const DihedralScheme& scheme) {
    auto [trunc, w] = truncate(base, scheme);
    std::vector<int> classes = truncation_edge_classes(trunc, w);
    PermutationGroup aut = automorphism_group(trunc, {}, classes);
    return aut.orbit_count() == 1;
}

std::pair<MultiGraph, DihedralScheme> k77_with_cyclic_scheme() {
    // left vertices 0..6, right vertices 7..13; edge (i, 7+j) has id 7i+j
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; i++)
        for (int j = 0; j < 7; j++) edges.emplace_back(i, 7 + j);
    MultiGraph base(14, std::move(edges));
    std::vector<std::vector<int>> at(14);
    for (int i = 0; i < 7; i++)
        for (int t = 0; t < 7; t++) at[i].push_back(2 * (7 * i + (i + t) % 7));
    for (int j = 0; j < 7; j++)
        for (int t = 0; t < 7; t++) at[7 + j].push_back(2 * (7 * ((j + t) % 7) + j) + 1);
    DihedralScheme scheme = make_scheme(base, std::move(at));
    return {std::move(base), std::move(scheme)};
}

std::pair<MultiGraph, std::optional<DihedralScheme>> parse_multigraph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::schema_violation, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        fail(errc::schema_violation, "expected {\"n\": int, \"edges\": [[u,v],...]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(errc::schema_violation, "edges must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    MultiGraph mg(n, std::move(edges));

    std::optional<DihedralScheme> scheme;
    if (j.contains("scheme")) {
        if (!j["scheme"].is_object()) fail(errc::schema_violation, "scheme must be an object");
        std::vector<std::vector<int>> at(n);
        std::vector<char> given(n, 0);
        for (const auto& [key, val] : j["scheme"].items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (...) {
                fail(errc::schema_violation, "scheme key is not a vertex id: " + key);
            }
            if (v < 0 || v >= n) fail(errc::schema_violation, "scheme key out of range: " + key);
            if (!val.is_array()) fail(errc::schema_violation, "scheme entry must be an array");
            for (const auto& a : val) {
                if (!a.is_number_integer()) fail(errc::schema_violation, "arc id must be an integer");
                at[v].push_back(a.get<int>());
            }
            given[v] = 1;
        }
        for (int v = 0; v < n; v++)
            if (!given[v]) fail(errc::schema_violation, "scheme misses vertex " + std::to_string(v));
        scheme = make_scheme(mg, std::move(at));
    }
    return {std::move(mg), std::move(scheme)};
}

std::string write_multigraph_json(const MultiGraph& mg, const std::optional<DihedralScheme>& scheme) {
    nlohmann::json j;
    j["n"] = mg.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : mg.edges()) j["edges"].push_back({u, v});
    if (scheme) {
        nlohmann::json s = nlohmann::json::object();
        for (int v = 0; v < mg.vertex_count(); v++) s[std::to_string(v)] = scheme->at[v];
        j["scheme"] = std::move(s);
    }
    return j.dump();
}

} // namespace g7
