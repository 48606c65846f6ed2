#include "g7/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace g7 {

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); i++)
        if (img[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& other) const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); i++) out[i] = other.img[img[i]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); i++) out[img[i]] = i;
    return Permutation(std::move(out));
}

bool preserves_edges(const SimpleGraph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (!g.adjacent(p(u), p(v))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims with explicit transversals)

struct PermutationGroup::Chain {
    int n = 0;

    struct Level {
        int beta = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;          // discovery order
        std::vector<int> pos;            // point -> index into orbit, -1 absent
        std::vector<Permutation> transversal; // transversal[i] maps beta -> orbit[i]

        void rebuild(int n) {
            orbit.assign(1, beta);
            pos.assign(n, -1);
            pos[beta] = 0;
            transversal.assign(1, Permutation::identity(n));
            for (std::size_t head = 0; head < orbit.size(); head++) {
                int p = orbit[head];
                for (const auto& s : gens) {
                    int q = s(p);
                    if (pos[q] < 0) {
                        pos[q] = static_cast<int>(orbit.size());
                        orbit.push_back(q);
                        transversal.push_back(transversal[head].then(s));
                    }
                }
            }
        }
    };

    std::vector<Level> levels;

    // Reduce g through the chain starting at `from`. Returns true when g
    // reduces to the identity; otherwise rem holds the residue.
    bool sift(const Permutation& g, std::size_t from, Permutation& rem) const {
        Permutation h = g;
        for (std::size_t l = from; l < levels.size(); l++) {
            int x = h(levels[l].beta);
            if (levels[l].pos[x] < 0) {
                rem = std::move(h);
                return false;
            }
            h = h.then(levels[l].transversal[levels[l].pos[x]].inverse());
        }
        if (h.is_identity()) return true;
        rem = std::move(h);
        return false;
    }

    void build(const std::vector<Permutation>& gens) {
        std::vector<Permutation> nontrivial;
        for (const auto& g : gens)
            if (!g.is_identity()) nontrivial.push_back(g);
        if (nontrivial.empty()) return;
        append_level_for(nontrivial.front());
        levels[0].gens = std::move(nontrivial);
        schreier_sims(0);
    }

    void append_level_for(const Permutation& h) {
        Level level;
        for (int i = 0; i < n; i++)
            if (h(i) != i) {
                level.beta = i;
                break;
            }
        levels.push_back(std::move(level));
    }

    // On return, every level >= l satisfies the chain condition: the
    // stabilizer of base[l] in <S_l> equals <S_{l+1}>.
    void schreier_sims(std::size_t l) {
        levels[l].rebuild(n);
        for (std::size_t head = 0; head < levels[l].orbit.size(); head++) {
            for (std::size_t si = 0; si < levels[l].gens.size(); si++) {
                int p = levels[l].orbit[head];
                const Permutation& u = levels[l].transversal[head];
                const Permutation& s = levels[l].gens[si];
                int q = s(p);
                Permutation schreier = u.then(s).then(levels[l].transversal[levels[l].pos[q]].inverse());
                Permutation rem;
                if (sift(schreier, l + 1, rem)) continue;
                // rem is a product of level-l generators fixing base[l], so it
                // belongs at level l+1; upper orbits are unaffected.
                if (l + 1 == levels.size()) append_level_for(rem);
                levels[l + 1].gens.push_back(std::move(rem));
                schreier_sims(l + 1);
            }
        }
    }

    unsigned long long order() const {
        unsigned long long o = 1;
        for (const auto& lv : levels) o *= lv.orbit.size();
        return o;
    }
};

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (const auto& p : gens_)
        if (p.size() != degree_) fail(errc::vertex_out_of_range, "generator degree mismatch");
}

void PermutationGroup::ensure_chain() const {
    if (chain_) return;
    auto c = std::make_shared<Chain>();
    c->n = degree_;
    c->build(gens_);
    chain_ = std::move(c);
}

unsigned long long PermutationGroup::order() const {
    ensure_chain();
    return chain_->order();
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.size() != degree_) return false;
    ensure_chain();
    Permutation rem;
    return chain_->sift(p, 0, rem);
}

const std::vector<std::vector<int>>& PermutationGroup::orbits() const {
    if (orbits_) return *orbits_;
    std::vector<int> root(degree_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (const auto& p : gens_)
        for (int v = 0; v < degree_; v++) {
            int a = find(v), b = find(p(v));
            if (a != b) root[a] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < degree_; v++) groups[find(v)].push_back(v);
    orbits_ = std::vector<std::vector<int>>();
    for (auto& [_, members] : groups) orbits_->push_back(std::move(members));
    return *orbits_;
}

std::vector<Permutation> PermutationGroup::elements(std::size_t cap) const {
    std::vector<Permutation> all{Permutation::identity(degree_)};
    std::map<std::vector<int>, int> seen{{all[0].img, 0}};
    for (std::size_t head = 0; head < all.size(); head++) {
        for (const auto& s : gens_) {
            Permutation q = all[head].then(s);
            if (seen.emplace(q.img, 0).second) {
                all.push_back(std::move(q));
                if (all.size() > cap) fail(errc::budget_exceeded, "group larger than element cap");
            }
        }
    }
    return all;
}

// ---------------------------------------------------------------------------
// Individualization-refinement search on a colored graph

namespace {

struct ColoredAdj {
    int n = 0;
    int ecolors = 1;
    std::vector<int> vcolor;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge color)
    std::vector<std::uint8_t> pair_code;               // n*n: 0 none, 1+color

    std::uint8_t code(int u, int v) const { return pair_code[static_cast<std::size_t>(u) * n + v]; }
};

ColoredAdj build_colored(const SimpleGraph& g, const std::vector<int>& vcolors,
                         const std::vector<int>& ecolors) {
    ColoredAdj c;
    c.n = g.vertex_count();
    c.vcolor = vcolors.empty() ? std::vector<int>(c.n, 0) : vcolors;
    if (static_cast<int>(c.vcolor.size()) != c.n)
        fail(errc::vertex_out_of_range, "vertex color vector size mismatch");
    std::vector<int> ec = ecolors.empty() ? std::vector<int>(g.edge_count(), 0) : ecolors;
    if (static_cast<int>(ec.size()) != g.edge_count())
        fail(errc::edge_out_of_range, "edge color vector size mismatch");
    c.ecolors = 1;
    for (int x : ec) {
        if (x < 0 || x > 7) fail(errc::edge_out_of_range, "edge colors must lie in 0..7");
        c.ecolors = std::max(c.ecolors, x + 1);
    }
    for (int v = 0; v < c.n; v++)
        if (g.degree(v) > 255)
            fail(errc::vertex_out_of_range, "refinement counters support degree <= 255");
    c.adj.assign(c.n, {});
    c.pair_code.assign(static_cast<std::size_t>(c.n) * c.n, 0);
    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges()[e];
        c.adj[u].emplace_back(v, ec[e]);
        c.adj[v].emplace_back(u, ec[e]);
        c.pair_code[static_cast<std::size_t>(u) * c.n + v] = static_cast<std::uint8_t>(1 + ec[e]);
        c.pair_code[static_cast<std::size_t>(v) * c.n + u] = static_cast<std::uint8_t>(1 + ec[e]);
    }
    return c;
}

// Ordered partition with stable cell ids. The `order` sequence is the
// partition; retired ids stay in `store` but leave `order`.
struct OrderedPartition {
    std::vector<std::vector<int>> store;
    std::vector<int> order;
    std::vector<char> active;

    int add_cell(std::vector<int> members) {
        store.push_back(std::move(members));
        active.push_back(1);
        return static_cast<int>(store.size()) - 1;
    }

    bool discrete() const {
        for (int id : order)
            if (store[id].size() > 1) return false;
        return true;
    }
};

// Refine to an equitable partition. Fragments of a split cell are ordered by
// ascending count key, which keeps the procedure label-invariant.
void refine(const ColoredAdj& G, OrderedPartition& P, std::deque<int> work) {
    std::vector<char> queued(P.store.size(), 0);
    for (int id : work) queued[id] = 1;
    std::vector<std::uint64_t> cnt(G.n, 0);
    std::vector<int> touched;

    while (!work.empty()) {
        int w = work.front();
        work.pop_front();
        if (static_cast<std::size_t>(w) < queued.size()) queued[w] = 0;
        if (!P.active[w]) continue;

        touched.clear();
        for (int u : P.store[w])
            for (auto [v, c] : G.adj[u]) {
                if (cnt[v] == 0) touched.push_back(v);
                cnt[v] += std::uint64_t(1) << (8 * c);
            }

        std::vector<int> snapshot = P.order;
        for (int x : snapshot) {
            if (!P.active[x] || P.store[x].size() <= 1) continue;
            auto& cell = P.store[x];
            bool uniform = true;
            for (std::size_t i = 1; i < cell.size(); i++)
                if (cnt[cell[i]] != cnt[cell[0]]) {
                    uniform = false;
                    break;
                }
            if (uniform) continue;

            std::vector<std::pair<std::uint64_t, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) keyed.emplace_back(cnt[v], v);
            std::sort(keyed.begin(), keyed.end());

            std::vector<int> new_ids;
            std::size_t i = 0;
            while (i < keyed.size()) {
                std::size_t j = i;
                std::vector<int> frag;
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    frag.push_back(keyed[j++].second);
                new_ids.push_back(P.add_cell(std::move(frag)));
                i = j;
            }
            P.active[x] = 0;
            auto it = std::find(P.order.begin(), P.order.end(), x);
            it = P.order.erase(it);
            P.order.insert(it, new_ids.begin(), new_ids.end());
            queued.resize(P.store.size(), 0);
            for (int id : new_ids)
                if (!queued[id]) {
                    queued[id] = 1;
                    work.push_back(id);
                }
        }
        for (int v : touched) cnt[v] = 0;
    }
}

struct SearchResult {
    std::vector<Permutation> generators;
    Permutation canon_labeling;
    std::vector<std::uint8_t> canon_cert;
};

class IRSearch {
public:
    IRSearch(const ColoredAdj& G) : G_(G) {}

    SearchResult run() {
        OrderedPartition P;
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < G_.n; v++) by_color[G_.vcolor[v]].push_back(v);
        for (auto& [_, members] : by_color) P.order.push_back(P.add_cell(std::move(members)));
        descend(P, true);

        SearchResult out;
        out.generators = std::move(gens_);
        out.canon_labeling = best_lab_;
        out.canon_cert = cert_with_colors(best_rep_, best_lab_);
        return out;
    }

private:
    const ColoredAdj& G_;
    std::vector<Permutation> gens_;
    std::vector<int> prefix_;
    bool have_first_ = false, have_best_ = false;
    std::vector<std::uint8_t> first_rep_, best_rep_;
    Permutation first_lab_, best_lab_;

    std::vector<std::uint8_t> leaf_rep(const std::vector<int>& pos_to_vertex) const {
        int n = G_.n;
        std::vector<std::uint8_t> rep(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                rep[static_cast<std::size_t>(i) * n + j] = G_.code(pos_to_vertex[i], pos_to_vertex[j]);
        return rep;
    }

    // The certificate also pins vertex colors by position so that two colored
    // graphs compare equal iff color-isomorphic.
    std::vector<std::uint8_t> cert_with_colors(const std::vector<std::uint8_t>& rep,
                                               const Permutation& lab) const {
        std::vector<std::uint8_t> cert;
        Permutation inv = lab.inverse();
        for (int i = 0; i < G_.n; i++) {
            int c = G_.vcolor[inv(i)];
            cert.push_back(static_cast<std::uint8_t>(c & 0xff));
            cert.push_back(static_cast<std::uint8_t>((c >> 8) & 0xff));
        }
        cert.insert(cert.end(), rep.begin(), rep.end());
        return cert;
    }

    void record_automorphism(const Permutation& cur_lab, const Permutation& other_lab) {
        Permutation sigma = cur_lab.then(other_lab.inverse());
        if (sigma.is_identity()) return;
        for (int v = 0; v < G_.n; v++)
            if (G_.vcolor[sigma(v)] != G_.vcolor[v])
                fail(errc::search_failed, "internal: color-breaking automorphism");
        for (int u = 0; u < G_.n; u++)
            for (auto [v, c] : G_.adj[u])
                if (G_.code(sigma(u), sigma(v)) != 1 + c)
                    fail(errc::search_failed, "internal: invalid automorphism");
        for (const auto& known : gens_)
            if (known == sigma) return;
        gens_.push_back(std::move(sigma));
    }

    void descend(OrderedPartition P, bool initial) {
        std::deque<int> work(P.order.begin(), P.order.end());
        (void)initial;
        refine(G_, P, std::move(work));

        if (P.discrete()) {
            std::vector<int> pos_to_vertex;
            pos_to_vertex.reserve(G_.n);
            for (int id : P.order) pos_to_vertex.push_back(P.store[id][0]);
            std::vector<int> lab_img(G_.n);
            for (int i = 0; i < G_.n; i++) lab_img[pos_to_vertex[i]] = i;
            Permutation lab(std::move(lab_img));
            auto rep = leaf_rep(pos_to_vertex);

            if (!have_first_) {
                have_first_ = true;
                first_rep_ = rep;
                first_lab_ = lab;
                have_best_ = true;
                best_rep_ = std::move(rep);
                best_lab_ = std::move(lab);
                return;
            }
            if (rep == first_rep_) record_automorphism(lab, first_lab_);
            else if (rep == best_rep_) record_automorphism(lab, best_lab_);
            if (rep < best_rep_) {
                best_rep_ = std::move(rep);
                best_lab_ = std::move(lab);
            }
            return;
        }

        // first largest cell
        int target = -1;
        std::size_t target_size = 0;
        for (int id : P.order)
            if (P.store[id].size() > target_size) {
                target_size = P.store[id].size();
                target = id;
            }
        std::vector<int> cand = P.store[target];
        std::sort(cand.begin(), cand.end());

        std::vector<int> tried;
        for (int v : cand) {
            if (equivalent_to_tried(v, tried)) continue;
            tried.push_back(v);

            OrderedPartition child = P;
            std::vector<int> rest;
            for (int u : child.store[target])
                if (u != v) rest.push_back(u);
            int id_v = child.add_cell({v});
            int id_rest = child.add_cell(std::move(rest));
            child.active[target] = 0;
            auto it = std::find(child.order.begin(), child.order.end(), target);
            it = child.order.erase(it);
            child.order.insert(it, {id_v, id_rest});

            prefix_.push_back(v);
            descend(std::move(child), false);
            prefix_.pop_back();
        }
    }

    // Is v in the orbit of an already-tried vertex under the subgroup
    // generated by found automorphisms that fix the individualized prefix?
    bool equivalent_to_tried(int v, const std::vector<int>& tried) {
        if (tried.empty()) return false;
        std::vector<int> root(G_.n);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) {
                root[x] = root[root[x]];
                x = root[x];
            }
            return x;
        };
        for (const auto& p : gens_) {
            bool fixes = true;
            for (int u : prefix_)
                if (p(u) != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < G_.n; u++) {
                int a = find(u), b = find(p(u));
                if (a != b) root[a] = b;
            }
        }
        int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }
};

} // namespace

PermutationGroup automorphism_group(const SimpleGraph& g, const std::vector<int>& vertex_colors,
                                    const std::vector<int>& edge_colors) {
    if (g.vertex_count() == 0) return PermutationGroup(0, {});
    ColoredAdj c = build_colored(g, vertex_colors, edge_colors);
    SearchResult r = IRSearch(c).run();
    for (const auto& p : r.generators)
        if (!preserves_edges(g, p)) fail(errc::search_failed, "internal: generator check failed");
    return PermutationGroup(g.vertex_count(), std::move(r.generators));
}

CanonicalForm canonical_form(const SimpleGraph& g, const std::vector<int>& vertex_colors,
                             const std::vector<int>& edge_colors) {
    CanonicalForm out;
    if (g.vertex_count() == 0) {
        out.labeling = Permutation::identity(0);
        return out;
    }
    ColoredAdj c = build_colored(g, vertex_colors, edge_colors);
    SearchResult r = IRSearch(c).run();
    out.labeling = r.canon_labeling;
    out.cert = std::move(r.canon_cert);
    for (auto [u, v] : g.edges()) {
        int a = out.labeling(u), b = out.labeling(v);
        out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::optional<Permutation> are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return are_isomorphic(a, {}, {}, b, {}, {});
}

std::optional<Permutation> are_isomorphic(const SimpleGraph& a, const std::vector<int>& va,
                                          const std::vector<int>& ea, const SimpleGraph& b,
                                          const std::vector<int>& vb, const std::vector<int>& eb) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
    if (a.vertex_count() == 0) return Permutation::identity(0);

    CanonicalForm ca = canonical_form(a, va, ea);
    CanonicalForm cb = canonical_form(b, vb, eb);
    if (ca.cert != cb.cert) return std::nullopt;

    Permutation iso = ca.labeling.then(cb.labeling.inverse());
    for (auto [u, v] : a.edges())
        if (!b.adjacent(iso(u), iso(v))) fail(errc::search_failed, "internal: isomorphism check failed");
    if (!ea.empty() || !eb.empty()) {
        for (int e = 0; e < a.edge_count(); e++) {
            auto [u, v] = a.edges()[e];
            int f = b.edge_id(iso(u), iso(v));
            int color_a = ea.empty() ? 0 : ea[e];
            int color_b = eb.empty() ? 0 : eb[f];
            if (color_a != color_b) fail(errc::search_failed, "internal: edge color check failed");
        }
    }
    return iso;
}

namespace {

template <typename Next>
std::vector<std::vector<int>> object_orbits(int count, const std::vector<Permutation>& gens,
                                            Next&& next) {
    std::vector<int> root(count);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (const auto& p : gens)
        for (int i = 0; i < count; i++) {
            int a = find(i), b = find(next(p, i));
            if (a != b) root[a] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < count; i++) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [_, members] : groups) out.push_back(std::move(members));
    return out;
}

} // namespace

std::vector<std::vector<int>> vertex_orbits(const PermutationGroup& G) { return G.orbits(); }

std::vector<std::vector<int>> edge_orbits(const PermutationGroup& G, const SimpleGraph& g) {
    return object_orbits(g.edge_count(), G.generators(), [&](const Permutation& p, int e) {
        auto [u, v] = g.edges()[e];
        int f = g.edge_id(p(u), p(v));
        if (f < 0) fail(errc::search_failed, "permutation is not an automorphism");
        return f;
    });
}

std::vector<std::vector<int>> arc_orbits(const PermutationGroup& G, const SimpleGraph& g) {
    return object_orbits(g.arc_count(), G.generators(), [&](const Permutation& p, int a) {
        int f = g.arc_id(p(g.arc_begin(a)), p(g.arc_end(a)));
        if (f < 0) fail(errc::search_failed, "permutation is not an automorphism");
        return f;
    });
}

std::vector<std::vector<std::array<int, 3>>> two_arc_orbits(const PermutationGroup& G,
                                                            const SimpleGraph& g) {
    std::vector<std::array<int, 3>> all;
    std::map<std::array<int, 3>, int> index;
    for (int v = 0; v < g.vertex_count(); v++)
        for (int u : g.neighbors(v))
            for (int w : g.neighbors(v))
                if (u != w) {
                    index.emplace(std::array<int, 3>{u, v, w}, static_cast<int>(all.size()));
                    all.push_back({u, v, w});
                }
    auto orbits = object_orbits(static_cast<int>(all.size()), G.generators(),
                                [&](const Permutation& p, int i) {
                                    auto it = index.find({p(all[i][0]), p(all[i][1]), p(all[i][2])});
                                    if (it == index.end())
                                        fail(errc::search_failed, "permutation is not an automorphism");
                                    return it->second;
                                });
    std::vector<std::vector<std::array<int, 3>>> out;
    for (const auto& orb : orbits) {
        std::vector<std::array<int, 3>> group;
        for (int i : orb) group.push_back(all[i]);
        out.push_back(std::move(group));
    }
    return out;
}

bool is_vertex_transitive(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return true;
    return automorphism_group(g).orbit_count() == 1;
}

bool is_edge_transitive(const SimpleGraph& g) {
    if (g.edge_count() == 0) return true;
    return edge_orbits(automorphism_group(g), g).size() == 1;
}

bool is_arc_transitive(const SimpleGraph& g) {
    if (g.edge_count() == 0) return true;
    return arc_orbits(automorphism_group(g), g).size() == 1;
}

} // namespace g7
