#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g7/graph.hpp"

namespace g7 {

// Per-vertex cyclic order of the arcs beginning there. Storage fixes one
// rotation; equality of schemes is up to rotation and reflection of each
// cycle (tested through colored truncation isomorphism).
struct DihedralScheme {
    std::vector<std::vector<int>> at; // at[v] lists arc ids beginning at v, in cyclic order
};

// Checks that `at` partitions the arc set with each arc listed under its
// beginning vertex. Throws InvalidScheme.
DihedralScheme make_scheme(const MultiGraph& base, std::vector<std::vector<int>> at);

// Arcs at each vertex in ascending id order.
DihedralScheme sorted_scheme(const MultiGraph& base);

struct TruncationWitness {
    MultiGraph base;
    DihedralScheme scheme;
    std::vector<int> arc_to_vertex; // base arc id -> vertex of the truncation
};

// Truncation: vertices are the arcs of the base; arcs consecutive in a vertex
// cycle are adjacent, as are the two arcs of each base edge. Requires every
// base degree >= 3.
std::pair<SimpleGraph, TruncationWitness> truncate(const MultiGraph& base,
                                                   const DihedralScheme& scheme);

// Edge classes of a truncation under a witness: 0 = scheme edge, 1 = edge
// joining the two arcs of one base edge.
std::vector<int> truncation_edge_classes(const SimpleGraph& trunc, const TruncationWitness& w);

// Inverse of truncate for cubic girth-regular graphs with signature (0,1,1):
// contracts the epsilon=1 girth cycles to base vertices. The returned witness
// maps base arcs onto the vertices of g and is verified to be an isomorphism
// before returning.
TruncationWitness recover_truncation(const SimpleGraph& g);

// Is Aut(base, scheme) transitive on the arcs of the base? Computed on the
// truncation with its two-class edge coloring.
bool is_arc_transitive_scheme(const MultiGraph& base, const DihedralScheme& scheme);

// K_{7,7} with the cyclic scheme: at vertex (i, side), arcs ordered by target
// index minus i mod 7.
std::pair<MultiGraph, DihedralScheme> k77_with_cyclic_scheme();

// Multigraph JSON: {"n": int, "edges": [[u,v],...], "scheme": {"v": [arc,...]}}
std::pair<MultiGraph, std::optional<DihedralScheme>> parse_multigraph_json(const std::string& text);
std::string write_multigraph_json(const MultiGraph& mg, const std::optional<DihedralScheme>& scheme);

} // namespace g7
