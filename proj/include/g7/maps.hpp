#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g7/cycles.hpp"
#include "g7/graph.hpp"
#include "g7/symmetry.hpp"

namespace g7 {

struct Flag {
    int v, e, f;
    bool operator==(const Flag&) const = default;
};

// A trivalent map: a cubic skeleton plus a set of cycles covering every edge
// exactly twice. Faces are stored canonicalized and sorted.
class TrivalentMap {
public:
    TrivalentMap(SimpleGraph skeleton, std::vector<Cycle> faces);

    const SimpleGraph& skeleton() const { return skeleton_; }
    const std::vector<Cycle>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<int>& face_edges(int f) const { return face_edges_[f]; }

private:
    SimpleGraph skeleton_;
    std::vector<Cycle> faces_;
    std::vector<std::vector<int>> face_edges_;
};

// Faces = girth cycles; valid exactly when every edge lies on two of them.
TrivalentMap map_from_girth_cycles(const SimpleGraph& g);

std::vector<Flag> flags(const TrivalentMap& m);
int euler_characteristic(const TrivalentMap& m); // V - E + F
std::optional<int> map_type(const TrivalentMap& m); // k when all faces have length k

// Skeleton automorphisms that stabilize the face set.
PermutationGroup map_automorphisms(const TrivalentMap& m);

// Rotary: some automorphism fixes each vertex while 3-cycling its neighbors,
// and some automorphism rotates each face through a full cycle (checked per
// orbit of the map group).
bool is_rotary(const TrivalentMap& m);

// Regular: the map group is transitive on flags.
bool is_regular_map(const TrivalentMap& m);

// The orientably-regular map of type {7,3} on 56 vertices, constructed from
// the simple group of order 168 acting on 8 points: vertices, edges and faces
// are the cosets of <S>, <RS>, <R> for a generator pair R (order 7),
// S (order 3) with |RS| = 2, located by deterministic scan.
TrivalentMap klein_map();

// Map JSON: {"graph6": string, "faces": [[v,...],...]}
TrivalentMap parse_map_json(const std::string& text);
std::string write_map_json(const TrivalentMap& m);

} // namespace g7
