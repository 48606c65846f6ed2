#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "g7/graph.hpp"

namespace g7 {

struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }
    bool is_identity() const;

    // x -> other(this(x))
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img < o.img; }
};

// Does p map the edge set (and colors, when given) of g onto itself?
bool preserves_edges(const SimpleGraph& g, const Permutation& p);

class PermutationGroup {
public:
    PermutationGroup() = default;
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const std::vector<std::vector<int>>& orbits() const; // vertex orbits, each sorted
    int orbit_count() const { return static_cast<int>(orbits().size()); }

    // Exact order via a stabilizer chain on the generators.
    unsigned long long order() const;
    bool contains(const Permutation& p) const;

    // Full element list by closure; throws if the group exceeds cap.
    std::vector<Permutation> elements(std::size_t cap = 1 << 20) const;

private:
    struct Chain;
    void ensure_chain() const;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<Chain> chain_;
    mutable std::optional<std::vector<std::vector<int>>> orbits_;
};

// Full color-preserving automorphism group. Empty color vectors mean a single
// color class. Every returned generator is verified against the edge set.
PermutationGroup automorphism_group(const SimpleGraph& g,
                                    const std::vector<int>& vertex_colors = {},
                                    const std::vector<int>& edge_colors = {});

struct CanonicalForm {
    Permutation labeling;                  // old id -> canonical id
    std::vector<std::pair<int, int>> edges; // canonical edge list, sorted
    std::vector<std::uint8_t> cert;         // opaque certificate; equal iff isomorphic
};

CanonicalForm canonical_form(const SimpleGraph& g,
                             const std::vector<int>& vertex_colors = {},
                             const std::vector<int>& edge_colors = {});

// Explicit isomorphism (verified before returning) or nullopt.
std::optional<Permutation> are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
std::optional<Permutation> are_isomorphic(const SimpleGraph& a,
                                          const std::vector<int>& va, const std::vector<int>& ea,
                                          const SimpleGraph& b,
                                          const std::vector<int>& vb, const std::vector<int>& eb);

std::vector<std::vector<int>> vertex_orbits(const PermutationGroup& G);
std::vector<std::vector<int>> edge_orbits(const PermutationGroup& G, const SimpleGraph& g);
std::vector<std::vector<int>> arc_orbits(const PermutationGroup& G, const SimpleGraph& g);

// 2-arcs (u,v,w) with u,w distinct neighbors of v; orbits under the group.
std::vector<std::vector<std::array<int, 3>>> two_arc_orbits(const PermutationGroup& G,
                                                            const SimpleGraph& g);

bool is_vertex_transitive(const SimpleGraph& g);
bool is_edge_transitive(const SimpleGraph& g);
bool is_arc_transitive(const SimpleGraph& g);

} // namespace g7
