#include "g7/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace g7 {

Cycle canonical_cycle(const std::vector<int>& verts) {
    int k = static_cast<int>(verts.size());
    std::vector<int> best;
    for (int dir : {1, -1}) {
        for (int s = 0; s < k; s++) {
            std::vector<int> cand(k);
            for (int i = 0; i < k; i++) cand[i] = verts[((s + dir * i) % k + k) % k];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return Cycle{std::move(best)};
}

CycleSet::CycleSet(const SimpleGraph& g, std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end());
    cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
    by_vertex_.assign(g.vertex_count(), {});
    by_edge_.assign(g.edge_count(), {});
    edge_lists_.resize(cycles_.size());
    for (int i = 0; i < size(); i++) {
        const auto& vs = cycles_[i].verts;
        int k = static_cast<int>(vs.size());
        for (int j = 0; j < k; j++) {
            by_vertex_[vs[j]].push_back(i);
            int e = g.edge_id(vs[j], vs[(j + 1) % k]);
            if (e < 0) fail(errc::edge_out_of_range, "cycle uses a non-edge");
            by_edge_[e].push_back(i);
            edge_lists_[i].push_back(e);
        }
        std::sort(edge_lists_[i].begin(), edge_lists_[i].end());
    }
}

std::optional<int> girth(const SimpleGraph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; root++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        for (auto [u, w] : g.edges()) {
            if (dist[u] < 0 || dist[w] < 0) continue;
            if (parent[u] == w || parent[w] == u) continue; // tree edge
            int len = dist[u] + dist[w] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

// Enumerate all cycles of length exactly len whose least vertex is root, each
// once (direction fixed by verts[1] < verts[len-1]). The emitted sequence is
// already the canonical form.
void cycles_from_root(const SimpleGraph& g, int root, int len, std::vector<Cycle>& out) {
    std::vector<int> path{root};
    std::vector<char> used(g.vertex_count(), 0);
    used[root] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (g.adjacent(v, root) && path[1] < path.back()) out.push_back(Cycle{path});
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= root || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    dfs(dfs, root);
}

} // namespace

CycleSet girth_cycles(const SimpleGraph& g) {
    auto gth = girth(g);
    if (!gth) fail(errc::acyclic_graph, "graph has no cycle");
    std::vector<Cycle> found;
    for (int root = 0; root < g.vertex_count(); root++) cycles_from_root(g, root, *gth, found);
    return CycleSet(g, std::move(found));
}

int epsilon(const SimpleGraph& g, const CycleSet& cycles, int e) {
    if (e < 0 || e >= g.edge_count()) fail(errc::edge_out_of_range, "edge id " + std::to_string(e));
    return static_cast<int>(cycles.through_edge(e).size());
}

Signature vertex_signature(const SimpleGraph& g, const CycleSet& cycles, int v) {
    if (g.degree(v) != 3)
        fail(errc::non_cubic_vertex, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    Signature sig;
    for (int i = 0; i < 3; i++) sig[i] = epsilon(g, cycles, g.edge_id(v, g.neighbors(v)[i]));
    std::sort(sig.begin(), sig.end());
    return sig;
}

SignatureCheck is_girth_regular(const SimpleGraph& g) {
    CycleSet cycles = girth_cycles(g);
    SignatureCheck result;
    Signature first{};
    for (int v = 0; v < g.vertex_count(); v++) {
        Signature sig = vertex_signature(g, cycles, v);
        if (v == 0) {
            first = sig;
        } else if (sig != first) {
            result.witness_u = 0;
            result.witness_v = v;
            return result;
        }
    }
    result.common = first;
    return result;
}

std::vector<int> r_multiset(const SimpleGraph& g, const CycleSet& cycles,
                            const std::vector<int>& edge_subset, int v) {
    std::vector<char> in_subset(g.edge_count(), 0);
    for (int e : edge_subset) {
        if (e < 0 || e >= g.edge_count()) fail(errc::edge_out_of_range, "edge id " + std::to_string(e));
        in_subset[e] = 1;
    }
    std::vector<int> out;
    for (int ci : cycles.through_vertex(v)) {
        int r = 0;
        for (int e : cycles.cycle_edges(ci)) r += in_subset[e];
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(errc::edge_out_of_range, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

OrbitSum orbit_sum_identity(const SimpleGraph& g, const CycleSet& cycles,
                            const std::vector<int>& orbit) {
    if (orbit.empty()) fail(errc::non_uniform_orbit, "empty orbit");
    int eps = epsilon(g, cycles, orbit[0]);
    for (int e : orbit)
        if (epsilon(g, cycles, e) != eps)
            fail(errc::non_uniform_orbit, "edge " + std::to_string(e) + " has a different epsilon");
    std::vector<int> common = r_multiset(g, cycles, orbit, 0);
    for (int v = 1; v < g.vertex_count(); v++)
        if (r_multiset(g, cycles, orbit, v) != common)
            fail(errc::non_homogeneous, "vertex " + std::to_string(v) + " has a different r-multiset");
    long long lhs = std::accumulate(common.begin(), common.end(), 0LL);
    int gth = cycles.size() ? cycles.cycle(0).length() : 0;
    Rational rhs(static_cast<long long>(orbit.size()) * eps * gth, g.vertex_count());
    return OrbitSum{lhs, rhs};
}

BallCut ball_cut_identity(const SimpleGraph& g, int v) {
    auto gth = girth(g);
    if (!gth || *gth != 7)
        fail(errc::girth_not_7, "girth is " + (gth ? std::to_string(*gth) : std::string("undefined")));
    if (g.vertex_count() < 28)
        fail(errc::too_small, "need at least 28 vertices, have " + std::to_string(g.vertex_count()));
    int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == 3) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    BallCut out{0, 0, 0};
    for (int u = 0; u < n; u++)
        if (dist[u] >= 0 && dist[u] <= 3) out.ball_size++;
    for (auto [a, b] : g.edges()) {
        bool ina = dist[a] >= 0 && dist[a] <= 3;
        bool inb = dist[b] >= 0 && dist[b] <= 3;
        if (ina != inb) out.boundary_edges++;
        if (dist[a] == 3 && dist[b] == 3) out.sphere_internal_edges++;
    }
    return out;
}

namespace {

long long binom_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// colex unranking: subset of given size with 0-based rank
std::vector<int> colex_unrank(long long rank, int size, int universe) {
    std::vector<int> out(size);
    for (int p = size - 1; p >= 0; p--) {
        int v = p;
        for (int c = universe - 1; c >= p; c--) {
            long long b = binom_capped(c, p + 1, rank + 1);
            if (b <= rank) {
                v = c;
                break;
            }
        }
        out[p] = v;
        rank -= binom_capped(v, p + 1, rank);
    }
    return out;
}

bool next_colex(std::vector<int>& a, int universe) {
    int j = static_cast<int>(a.size());
    for (int i = 0; i < j; i++) {
        int limit = (i + 1 < j) ? a[i + 1] : universe;
        if (a[i] + 1 < limit) {
            a[i]++;
            for (int t = 0; t < i; t++) a[t] = t;
            return true;
        }
    }
    return false;
}

// Does removing the edges in `cut` leave >= 2 components that contain cycles?
bool is_cycle_separating(const SimpleGraph& g, const std::vector<int>& cut,
                         std::vector<int>& uf, std::vector<char>& removed,
                         std::vector<int>& comp_verts, std::vector<int>& comp_edges) {
    int n = g.vertex_count();
    for (int e : cut) removed[e] = 1;
    for (int v = 0; v < n; v++) uf[v] = v;
    auto find = [&](int x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    for (int e = 0; e < g.edge_count(); e++) {
        if (removed[e]) continue;
        auto [u, w] = g.edges()[e];
        int ru = find(u), rw = find(w);
        if (ru != rw) uf[ru] = rw;
    }
    for (int e : cut) removed[e] = 0;

    std::fill(comp_verts.begin(), comp_verts.end(), 0);
    std::fill(comp_edges.begin(), comp_edges.end(), 0);
    int comps = 0;
    for (int v = 0; v < n; v++) {
        int r = find(v);
        if (comp_verts[r] == 0) comps++;
        comp_verts[r]++;
    }
    if (comps < 2) return false;
    for (int e = 0; e < g.edge_count(); e++) {
        bool in_cut = std::binary_search(cut.begin(), cut.end(), e);
        if (in_cut) continue;
        comp_edges[find(g.edges()[e].first)]++;
    }
    int cyclic = 0;
    for (int v = 0; v < n; v++)
        if (uf[v] == v && comp_edges[v] >= comp_verts[v]) cyclic++;
    return cyclic >= 2;
}

} // namespace

std::optional<std::vector<int>> has_cycle_separating_cut_below(const SimpleGraph& g, int k,
                                                               long long budget, int threads) {
    int m = g.edge_count();
    long long total = 0;
    for (int j = 1; j < k; j++) {
        total += binom_capped(m, j, budget + 1);
        if (total > budget)
            fail(errc::budget_exceeded, "subset space exceeds budget of " + std::to_string(budget));
    }
    if (threads < 1) threads = 1;

    {
        // the empty cut qualifies when the graph already has two cyclic parts
        std::vector<int> uf(g.vertex_count()), comp_verts(g.vertex_count()),
            comp_edges(g.vertex_count());
        std::vector<char> removed(m, 0);
        std::vector<int> empty;
        if (k >= 1 && is_cycle_separating(g, empty, uf, removed, comp_verts, comp_edges))
            return empty;
    }

    for (int j = 1; j < k && j <= m; j++) {
        long long count = binom_capped(m, j, budget + 1);
        long long found_rank = -1;
        std::vector<int> found_cut;

        if (threads == 1 || count < 64) {
            std::vector<int> uf(g.vertex_count()), comp_verts(g.vertex_count()),
                comp_edges(g.vertex_count());
            std::vector<char> removed(m, 0);
            std::vector<int> subset(j);
            for (int t = 0; t < j; t++) subset[t] = t;
            long long rank = 0;
            do {
                if (is_cycle_separating(g, subset, uf, removed, comp_verts, comp_edges)) {
                    found_rank = rank;
                    found_cut = subset;
                    break;
                }
                rank++;
            } while (next_colex(subset, m));
        } else {
            // Contiguous colex chunks per thread; the globally least rank wins,
            // so the result does not depend on the schedule.
            std::atomic<long long> best_rank{count};
            std::vector<long long> chunk_rank(threads, -1);
            std::vector<std::vector<int>> chunk_cut(threads);
            std::vector<std::thread> pool;
            long long per = (count + threads - 1) / threads;
            for (int t = 0; t < threads; t++) {
                pool.emplace_back([&, t] {
                    long long lo = t * per, hi = std::min(count, (t + 1) * per);
                    if (lo >= hi) return;
                    std::vector<int> uf(g.vertex_count()), comp_verts(g.vertex_count()),
                        comp_edges(g.vertex_count());
                    std::vector<char> removed(m, 0);
                    std::vector<int> subset = colex_unrank(lo, j, m);
                    for (long long rank = lo; rank < hi; rank++) {
                        if (best_rank.load(std::memory_order_relaxed) < lo) return;
                        if (is_cycle_separating(g, subset, uf, removed, comp_verts, comp_edges)) {
                            chunk_rank[t] = rank;
                            chunk_cut[t] = subset;
                            long long cur = best_rank.load();
                            while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
                            }
                            return;
                        }
                        if (!next_colex(subset, m)) return;
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < threads; t++)
                if (chunk_rank[t] >= 0 && (found_rank < 0 || chunk_rank[t] < found_rank)) {
                    found_rank = chunk_rank[t];
                    found_cut = chunk_cut[t];
                }
        }
        if (found_rank >= 0) return found_cut;
    }
    return std::nullopt;
}

} // namespace g7
