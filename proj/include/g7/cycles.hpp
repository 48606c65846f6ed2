#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "g7/graph.hpp"

namespace g7 {

// A cycle stored in canonical form: the lexicographically least vertex
// sequence among all rotations and reflections. Two cycles on the same vertex
// subgraph compare equal.
struct Cycle {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& o) const { return verts < o.verts; }
};

Cycle canonical_cycle(const std::vector<int>& verts);

// The set of girth cycles of a graph, with vertex and edge incidence indexes.
class CycleSet {
public:
    CycleSet(const SimpleGraph& g, std::vector<Cycle> cycles);

    int size() const { return static_cast<int>(cycles_.size()); }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    const Cycle& cycle(int i) const { return cycles_[i]; }
    const std::vector<int>& through_vertex(int v) const { return by_vertex_[v]; }
    const std::vector<int>& through_edge(int e) const { return by_edge_[e]; }
    const std::vector<int>& cycle_edges(int i) const { return edge_lists_[i]; }

private:
    std::vector<Cycle> cycles_;
    std::vector<std::vector<int>> by_vertex_;
    std::vector<std::vector<int>> by_edge_;
    std::vector<std::vector<int>> edge_lists_;
};

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

// All cycles of length girth(g), canonicalized. Throws AcyclicGraph on forests.
CycleSet girth_cycles(const SimpleGraph& g);

// Number of girth cycles containing edge e.
int epsilon(const SimpleGraph& g, const CycleSet& cycles, int e);

using Signature = std::array<int, 3>;

// Sorted epsilon triple of the three edges at a cubic vertex.
Signature vertex_signature(const SimpleGraph& g, const CycleSet& cycles, int v);

struct SignatureCheck {
    std::optional<Signature> common; // engaged iff girth-regular
    int witness_u = -1, witness_v = -1; // a differing vertex pair otherwise
};
SignatureCheck is_girth_regular(const SimpleGraph& g);

// Multiset, over girth cycles through v, of how many edges of the subset each
// cycle uses. Returned sorted ascending.
std::vector<int> r_multiset(const SimpleGraph& g, const CycleSet& cycles,
                            const std::vector<int>& edge_subset, int v);

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
    bool operator==(long long v) const { return den == 1 && num == v; }
};

struct OrbitSum {
    long long lhs; // sum of the common r-multiset
    Rational rhs;  // |O| * eps(O) * g / |V|
};

// Both sides of the double-count identity for an edge orbit. Requires uniform
// epsilon on the orbit and the same r-multiset at every vertex (both checked).
OrbitSum orbit_sum_identity(const SimpleGraph& g, const CycleSet& cycles,
                            const std::vector<int>& orbit);

struct BallCut {
    int ball_size;             // |U|, vertices within distance 3
    int boundary_edges;        // |delta(U)|
    int sphere_internal_edges; // edges joining two vertices at distance exactly 3
};

// Radius-3 ball counts around v for a cubic girth-7 graph on >= 28 vertices.
BallCut ball_cut_identity(const SimpleGraph& g, int v);

// Searches all edge subsets of size < k for a cycle-separating cut, in colex
// order by size. Returns the first witness found or nullopt. If the subset
// space exceeds the budget the search refuses up front (BudgetExceeded) rather
// than truncating.
std::optional<std::vector<int>> has_cycle_separating_cut_below(
    const SimpleGraph& g, int k, long long budget = 100000000, int threads = 1);

} // namespace g7
