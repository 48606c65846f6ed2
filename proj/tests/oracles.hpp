#pragma once

// Test-only oracles and corpus generators. These stay independent of the
// library code paths they check: different traversal, different
// canonicalization, no partition refinement.

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "g7/graph.hpp"
#include "g7/schemes.hpp"

namespace oracle {

// Every simple cycle of length exactly len, keyed by its sorted vertex set.
// A valid cycle identifier whenever len <= girth (no chords can exist).
inline std::set<std::vector<int>> cycles_of_length(const g7::SimpleGraph& g, int len) {
    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(g.vertex_count(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (g.adjacent(v, path[0])) {
                std::vector<int> key = path;
                std::sort(key.begin(), key.end());
                out.insert(std::move(key));
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            used[w] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); s++) {
        used[s] = 1;
        path.assign(1, s);
        dfs(dfs, s);
        used[s] = 0;
    }
    return out;
}

inline std::optional<int> girth_upto(const g7::SimpleGraph& g, int cap) {
    for (int len = 3; len <= cap; len++)
        if (!cycles_of_length(g, len).empty()) return len;
    return std::nullopt;
}

// Refinement-free backtracking count of all adjacency-preserving bijections.
inline long long automorphism_count(const g7::SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; s++) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
    }
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> assigned;
    long long count = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            count++;
            return;
        }
        int v = order[k];
        // candidate images: neighbors of an assigned neighbor's image, else anything unused
        std::vector<int> cands;
        int anchor = -1;
        for (int w : g.neighbors(v))
            if (img[w] >= 0) {
                anchor = img[w];
                break;
            }
        if (anchor >= 0) cands = g.neighbors(anchor);
        else {
            for (int c = 0; c < n; c++) cands.push_back(c);
        }
        for (int c : cands) {
            if (used[c] || g.degree(c) != g.degree(v)) continue;
            bool ok = true;
            for (int u : assigned)
                if (g.adjacent(v, u) != g.adjacent(c, img[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[v] = c;
            used[c] = 1;
            assigned.push_back(v);
            self(self, k + 1);
            assigned.pop_back();
            used[c] = 0;
            img[v] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

inline g7::SimpleGraph random_relabel(const g7::SimpleGraph& g, std::mt19937& rng) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return g7::SimpleGraph(n, edges);
}

// d-regular multigraph as a union of d random perfect matchings (n even).
inline g7::MultiGraph random_regular_multigraph(int n, int d, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (int round = 0; round < d; round++) {
        std::shuffle(verts.begin(), verts.end(), rng);
        for (int i = 0; i < n; i += 2) edges.emplace_back(verts[i], verts[i + 1]);
    }
    return g7::MultiGraph(n, edges);
}

inline g7::DihedralScheme random_scheme(const g7::MultiGraph& mg, std::mt19937& rng) {
    std::vector<std::vector<int>> at(mg.vertex_count());
    for (int v = 0; v < mg.vertex_count(); v++) {
        at[v] = mg.arcs_at(v);
        std::shuffle(at[v].begin(), at[v].end(), rng);
    }
    return g7::make_scheme(mg, std::move(at));
}

// Simple cubic graph by matching union with rejection of repeated pairs.
inline g7::SimpleGraph random_cubic_graph(int n, std::mt19937& rng) {
    for (int attempt = 0; attempt < 1000; attempt++) {
        g7::MultiGraph mg = random_regular_multigraph(n, 3, rng);
        std::set<std::pair<int, int>> dedup;
        bool simple = true;
        for (auto [u, v] : mg.edges()) {
            auto key = std::minmax(u, v);
            if (!dedup.emplace(key.first, key.second).second) {
                simple = false;
                break;
            }
        }
        if (simple) return g7::SimpleGraph(n, mg.edges());
    }
    g7::fail(g7::errc::search_failed, "no simple cubic graph after 1000 draws");
}

} // namespace oracle
