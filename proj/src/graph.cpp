#include "g7/graph.hpp"

#include <algorithm>
#include <set>

namespace g7 {

const char* errc_name(errc c) {
    switch (c) {
    case errc::loop_rejected: return "LoopRejected";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::malformed_graph6: return "MalformedGraph6";
    case errc::schema_violation: return "SchemaViolation";
    case errc::dangling_arc_reference: return "DanglingArcReference";
    case errc::acyclic_graph: return "AcyclicGraph";
    case errc::edge_out_of_range: return "EdgeOutOfRange";
    case errc::non_cubic_vertex: return "NonCubicVertex";
    case errc::non_uniform_orbit: return "NonUniformOrbit";
    case errc::non_homogeneous: return "NonHomogeneous";
    case errc::girth_not_7: return "GirthNot7";
    case errc::too_small: return "TooSmall";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::n_too_small: return "NTooSmall";
    case errc::not_divisible_by_3: return "NotDivisibleBy3";
    case errc::bad_jump: return "BadJump";
    case errc::not_inverse_closed: return "NotInverseClosed";
    case errc::contains_identity: return "ContainsIdentity";
    case errc::i_too_small: return "ITooSmall";
    case errc::invalid_scheme: return "InvalidScheme";
    case errc::degenerate_degree: return "DegenerateDegree";
    case errc::wrong_signature: return "WrongSignature";
    case errc::coverage_failure: return "CoverageFailure";
    case errc::not_two_per_edge: return "NotTwoPerEdge";
    case errc::invalid_map: return "InvalidMap";
    case errc::search_failed: return "SearchFailed";
    case errc::unsorted: return "Unsorted";
    case errc::not_cubic: return "NotCubic";
    case errc::not_connected: return "NotConnected";
    case errc::not_vertex_transitive: return "NotVertexTransitive";
    case errc::not_girth_regular: return "NotGirthRegular";
    case errc::theorem_violation: return "TheoremViolation";
    case errc::unknown_suite: return "UnknownSuite";
    }
    return "UnknownError";
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_pairs) : n_(n) {
    if (n < 0) fail(errc::vertex_out_of_range, "negative vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::vertex_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) fail(errc::loop_rejected, "loop at vertex " + std::to_string(u));
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::pair<int, int> SimpleGraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) fail(errc::edge_out_of_range, "edge id " + std::to_string(e));
    return edges_[e];
}

int SimpleGraph::edge_id(int u, int v) const {
    if (!adjacent(u, v)) return -1;
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return static_cast<int>(it - edges_.begin());
}

int SimpleGraph::arc_begin(int a) const {
    if (a < 0 || a >= arc_count()) fail(errc::edge_out_of_range, "arc id " + std::to_string(a));
    auto [u, v] = edges_[a >> 1];
    return (a & 1) ? v : u;
}

int SimpleGraph::arc_end(int a) const { return arc_begin(a ^ 1); }

int SimpleGraph::arc_id(int u, int v) const {
    int e = edge_id(u, v);
    if (e < 0) return -1;
    return 2 * e + (edges_[e].first == u ? 0 : 1);
}

MultiGraph::MultiGraph(int n, std::vector<std::pair<int, int>> edge_list)
    : n_(n), edges_(std::move(edge_list)) {
    if (n < 0) fail(errc::vertex_out_of_range, "negative vertex count");
    arcs_at_.assign(n_, {});
    for (int e = 0; e < edge_count(); e++) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::vertex_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) fail(errc::loop_rejected, "loop at vertex " + std::to_string(u));
        arcs_at_[u].push_back(2 * e);
        arcs_at_[v].push_back(2 * e + 1);
    }
}

std::pair<int, int> MultiGraph::endpoints(int e) const {
    if (e < 0 || e >= edge_count()) fail(errc::edge_out_of_range, "edge id " + std::to_string(e));
    return edges_[e];
}

bool MultiGraph::is_regular(int k) const {
    for (int v = 0; v < n_; v++)
        if (degree(v) != k) return false;
    return true;
}

int MultiGraph::arc_begin(int a) const {
    if (a < 0 || a >= arc_count()) fail(errc::edge_out_of_range, "arc id " + std::to_string(a));
    auto [u, v] = edges_[a >> 1];
    return (a & 1) ? v : u;
}

int MultiGraph::arc_end(int a) const { return arc_begin(a ^ 1); }

std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); v++) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool is_regular(const SimpleGraph& g, int k) {
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_connected(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                count++;
                stack.push_back(w);
            }
    }
    return count == n;
}

} // namespace g7
