#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g7/error.hpp"

namespace g7 {

// Simple undirected graph with dense vertex ids 0..n-1. Immutable after
// construction. Edges get a canonical numbering: sorted list of (u,v) pairs
// with u < v, so edge ids are stable under copy and deterministic for a given
// input. Arcs are numbered 2e (low->high endpoint) and 2e+1 (reverse).
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Duplicate pairs collapse to a single edge; loops are rejected.
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return 2 * edge_count(); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const;
    int edge_id(int u, int v) const; // -1 when not adjacent

    int arc_begin(int a) const;
    int arc_end(int a) const;
    static int arc_reverse(int a) { return a ^ 1; }
    int arc_id(int u, int v) const; // arc beginning at u, ending at v; -1 if absent

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Multigraph: parallel edges allowed, loops rejected. Edge ids are dense and
// follow the order edges were supplied in (kept verbatim so file round-trips
// are lossless). Arc 2e begins at endpoints(e).first, 2e+1 at .second.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int arc_count() const { return 2 * edge_count(); }

    std::pair<int, int> endpoints(int e) const;
    int degree(int v) const { return static_cast<int>(arcs_at_[v].size()); }
    bool is_regular(int k) const;

    int arc_begin(int a) const;
    int arc_end(int a) const;
    static int arc_reverse(int a) { return a ^ 1; }

    // Arc ids beginning at v, ascending.
    const std::vector<int>& arcs_at(int v) const { return arcs_at_[v]; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> arcs_at_;
};

std::vector<int> degree_sequence(const SimpleGraph& g);
bool is_regular(const SimpleGraph& g, int k);
bool is_connected(const SimpleGraph& g); // traversal from vertex 0; empty graph counts as connected

// graph6 (header-free; an optional ">>graph6<<" prefix is tolerated on read).
SimpleGraph parse_graph6(const std::string& text);
std::string write_graph6(const SimpleGraph& g);

} // namespace g7
