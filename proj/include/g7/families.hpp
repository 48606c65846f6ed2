#pragma once

#include <utility>
#include <vector>

#include "g7/graph.hpp"
#include "g7/symmetry.hpp"

namespace g7 {

// The graph A(n) on 4n vertices, n >= 8. Vertex numbering is fixed so the
// explicit automorphisms below transcribe directly:
//   x_i = i, y_i = n+i, a_i = 2n+i, b_i = 3n+i  (indices mod n)
// Edges: x_i x_{i+1}, x_i y_i, y_i a_i, a_i b_i, b_i y_{i+2}, a_i b_{i+1}.
SimpleGraph a_graph(int n);

// The rotation s_i -> s_{i+1} on every vertex class.
Permutation a_shift(int n);

// The order-mixing automorphism of A(n), defined when 3 | n.
Permutation a_tau(int n);

// Generalized Petersen graph on 2n vertices: outer cycle o_i o_{i+1}, spokes
// o_i in_i, inner edges in_i in_{i+k}. Requires n >= 3 and 1 <= k < n/2.
// Numbering: o_i = i, in_i = n+i.
SimpleGraph gen_petersen(int n, int k);

// The 28-vertex cubic graph built from seven hubs and three 7-rings with
// steps 1, 2, 3: h_i = i, r1_i = 7+i, r2_i = 14+i, r3_i = 21+i; edges
// r1_i r1_{i+1}, r2_i r2_{i+2}, r3_i r3_{i+3}, h_i r1_i, h_i r2_i, h_i r3_i.
SimpleGraph coxeter();

// Dense multiplication table for a finite group. Identity and inverses are
// located at construction; associativity is checked exhaustively for orders
// up to 200.
struct GroupTable {
    int order = 0;
    std::vector<int> table; // row-major: table[a*order+b] = a*b
    int identity = 0;
    std::vector<int> inverse;

    static GroupTable from_table(int order, std::vector<int> table);

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
    int element_order(int a) const;
};

struct ConnectionSet {
    std::vector<int> elements;
};

GroupTable cyclic_group(int n);

// Cay(G,S): vertices are group elements, g ~ g*s for s in S.
SimpleGraph cayley(const GroupTable& G, const ConnectionSet& S);

// (Z2 x Z2) semidirect Z_{3i}, the generator of Z_{3i} acting as the GF(2)
// matrix [[1,1],[1,0]], together with S = {(0,0,1), (0,0,-1), (1,1,0)}.
// Element ((u,v),t) has index 4t + 2u + v.
std::pair<GroupTable, ConnectionSet> group_446(int i);

SimpleGraph cayley_446(int i);

} // namespace g7
