#include "g7/maps.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include <json.hpp>

namespace g7 {

TrivalentMap::TrivalentMap(SimpleGraph skeleton, std::vector<Cycle> faces)
    : skeleton_(std::move(skeleton)) {
    if (!is_regular(skeleton_, 3)) fail(errc::not_cubic, "map skeleton must be cubic");
    for (auto& f : faces) f = canonical_cycle(f.verts);
    std::sort(faces.begin(), faces.end());
    if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
        fail(errc::invalid_map, "duplicate face");
    faces_ = std::move(faces);

    std::vector<int> edge_cover(skeleton_.edge_count(), 0);
    face_edges_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); i++) {
        const auto& vs = faces_[i].verts;
        int k = static_cast<int>(vs.size());
        if (k < 3) fail(errc::invalid_map, "face shorter than 3");
        std::vector<char> seen(skeleton_.vertex_count(), 0);
        for (int j = 0; j < k; j++) {
            if (seen[vs[j]]) fail(errc::invalid_map, "face repeats a vertex");
            seen[vs[j]] = 1;
            int e = skeleton_.edge_id(vs[j], vs[(j + 1) % k]);
            if (e < 0) fail(errc::invalid_map, "face uses a non-edge");
            edge_cover[e]++;
            face_edges_[i].push_back(e);
        }
        std::sort(face_edges_[i].begin(), face_edges_[i].end());
    }
    for (int e = 0; e < skeleton_.edge_count(); e++)
        if (edge_cover[e] != 2)
            fail(errc::not_two_per_edge, "edge " + std::to_string(e) + " lies on " +
                                             std::to_string(edge_cover[e]) + " faces");
}

TrivalentMap map_from_girth_cycles(const SimpleGraph& g) {
    if (!is_regular(g, 3)) fail(errc::not_cubic, "graph is not cubic");
    CycleSet cycles = girth_cycles(g);
    for (int e = 0; e < g.edge_count(); e++)
        if (epsilon(g, cycles, e) != 2)
            fail(errc::not_two_per_edge, "edge " + std::to_string(e) + " has epsilon " +
                                             std::to_string(epsilon(g, cycles, e)));
    return TrivalentMap(g, cycles.cycles());
}

std::vector<Flag> flags(const TrivalentMap& m) {
    std::vector<Flag> out;
    for (int f = 0; f < m.face_count(); f++)
        for (int e : m.face_edges(f)) {
            auto [u, v] = m.skeleton().edges()[e];
            out.push_back({u, e, f});
            out.push_back({v, e, f});
        }
    return out;
}

int euler_characteristic(const TrivalentMap& m) {
    return m.skeleton().vertex_count() - m.skeleton().edge_count() + m.face_count();
}

std::optional<int> map_type(const TrivalentMap& m) {
    if (m.face_count() == 0) return std::nullopt;
    int k = m.faces()[0].length();
    for (const auto& f : m.faces())
        if (f.length() != k) return std::nullopt;
    return k;
}

PermutationGroup map_automorphisms(const TrivalentMap& m) {
    // Incidence graph: skeleton vertices, edge nodes, face nodes, with one
    // color per layer. Its color automorphisms restrict faithfully to the
    // skeleton automorphisms preserving the face set.
    const SimpleGraph& g = m.skeleton();
    int n = g.vertex_count(), me = g.edge_count(), mf = m.face_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> vcolor(n + me + mf);
    for (int e = 0; e < me; e++) {
        vcolor[n + e] = 1;
        edges.emplace_back(g.edges()[e].first, n + e);
        edges.emplace_back(g.edges()[e].second, n + e);
    }
    for (int f = 0; f < mf; f++) {
        vcolor[n + me + f] = 2;
        for (int e : m.face_edges(f)) edges.emplace_back(n + e, n + me + f);
    }
    SimpleGraph incidence(n + me + mf, edges);
    PermutationGroup big = automorphism_group(incidence, vcolor);

    std::vector<Permutation> gens;
    for (const auto& p : big.generators()) {
        std::vector<int> img(p.img.begin(), p.img.begin() + n);
        Permutation q(std::move(img));
        if (!preserves_edges(g, q)) fail(errc::search_failed, "internal: bad map automorphism");
        if (!q.is_identity()) gens.push_back(std::move(q));
    }
    return PermutationGroup(n, std::move(gens));
}

namespace {

// face index lookup by canonical cycle
std::map<Cycle, int> face_index(const TrivalentMap& m) {
    std::map<Cycle, int> idx;
    for (int f = 0; f < m.face_count(); f++) idx.emplace(m.faces()[f], f);
    return idx;
}

int image_face(const TrivalentMap& m, const std::map<Cycle, int>& idx, const Permutation& p, int f) {
    std::vector<int> vs;
    for (int v : m.faces()[f].verts) vs.push_back(p(v));
    auto it = idx.find(canonical_cycle(vs));
    if (it == idx.end()) fail(errc::search_failed, "permutation does not preserve the face set");
    return it->second;
}

// Does p act on face f's vertex cycle as a rotation generating the full cycle?
bool full_face_rotation(const TrivalentMap& m, const Permutation& p, int f) {
    const auto& vs = m.faces()[f].verts;
    int k = static_cast<int>(vs.size());
    std::vector<int> pos(m.skeleton().vertex_count(), -1);
    for (int i = 0; i < k; i++) pos[vs[i]] = i;
    if (pos[p(vs[0])] < 0) return false;
    int shift = pos[p(vs[0])];
    for (int i = 0; i < k; i++) {
        int q = p(vs[i]);
        if (q < 0 || pos[q] != (i + shift) % k) return false; // not a rotation
    }
    return shift != 0 && std::gcd(shift, k) == 1;
}

std::vector<std::vector<int>> face_orbits(const TrivalentMap& m, const PermutationGroup& aut) {
    auto idx = face_index(m);
    std::vector<int> root(m.face_count());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (const auto& p : aut.generators())
        for (int f = 0; f < m.face_count(); f++) {
            int a = find(f), b = find(image_face(m, idx, p, f));
            if (a != b) root[a] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int f = 0; f < m.face_count(); f++) groups[find(f)].push_back(f);
    std::vector<std::vector<int>> out;
    for (auto& [_, members] : groups) out.push_back(std::move(members));
    return out;
}

} // namespace

bool is_rotary(const TrivalentMap& m) {
    PermutationGroup aut = map_automorphisms(m);
    std::size_t cap = 4 * static_cast<std::size_t>(m.skeleton().edge_count()) + 1;
    std::vector<Permutation> elems = aut.elements(cap);
    auto idx = face_index(m);

    for (const auto& orbit : aut.orbits()) {
        int v = orbit[0];
        const auto& nb = m.skeleton().neighbors(v);
        bool found = false;
        for (const auto& p : elems) {
            if (p(v) != v) continue;
            // a permutation of three points with no fixed point is a 3-cycle
            if (p(nb[0]) != nb[0] && p(nb[1]) != nb[1] && p(nb[2]) != nb[2]) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }

    for (const auto& orbit : face_orbits(m, aut)) {
        int f = orbit[0];
        bool found = false;
        for (const auto& p : elems) {
            if (image_face(m, idx, p, f) != f) continue;
            if (full_face_rotation(m, p, f)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_regular_map(const TrivalentMap& m) {
    PermutationGroup aut = map_automorphisms(m);
    auto idx = face_index(m);
    std::vector<Flag> fl = flags(m);
    std::map<std::array<int, 3>, int> flag_index;
    for (int i = 0; i < static_cast<int>(fl.size()); i++)
        flag_index[{fl[i].v, fl[i].e, fl[i].f}] = i;

    std::vector<int> root(fl.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    const SimpleGraph& g = m.skeleton();
    for (const auto& p : aut.generators())
        for (int i = 0; i < static_cast<int>(fl.size()); i++) {
            auto [u, v] = g.edges()[fl[i].e];
            int e2 = g.edge_id(p(u), p(v));
            int f2 = image_face(m, idx, p, fl[i].f);
            auto it = flag_index.find({p(fl[i].v), e2, f2});
            if (it == flag_index.end()) fail(errc::search_failed, "flag image missing");
            int a = find(i), b = find(it->second);
            if (a != b) root[a] = b;
        }
    int orbits = 0;
    for (int i = 0; i < static_cast<int>(fl.size()); i++)
        if (find(i) == i) orbits++;
    return orbits <= 1;
}

namespace {

using Perm8 = std::array<int, 8>;

Perm8 compose8(const Perm8& a, const Perm8& b) { // apply a, then b
    Perm8 out;
    for (int i = 0; i < 8; i++) out[i] = b[a[i]];
    return out;
}

int order8(const Perm8& a) {
    Perm8 x = a;
    const Perm8 id{0, 1, 2, 3, 4, 5, 6, 7};
    int k = 1;
    while (x != id) {
        x = compose8(x, a);
        if (++k > 200) fail(errc::search_failed, "runaway element order");
    }
    return k;
}

std::vector<Perm8> closure8(std::vector<Perm8> gens, std::size_t cap) {
    std::vector<Perm8> all{{0, 1, 2, 3, 4, 5, 6, 7}};
    std::map<Perm8, int> seen{{all[0], 0}};
    for (std::size_t head = 0; head < all.size(); head++)
        for (const auto& s : gens) {
            Perm8 q = compose8(all[head], s);
            if (seen.emplace(q, 0).second) {
                all.push_back(q);
                if (all.size() > cap) fail(errc::search_failed, "closure exceeded cap");
            }
        }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

TrivalentMap klein_map() {
    // The group: projective transformations of the 8-point line, generated by
    // z -> z+1 and z -> -1/z (point 0 is the infinite point, point i+1 is i).
    Perm8 t{0, 2, 3, 4, 5, 6, 7, 1};
    Perm8 s{1, 0, 7, 4, 3, 6, 5, 2};
    std::vector<Perm8> G = closure8({t, s}, 200);
    if (G.size() != 168) fail(errc::search_failed, "group order is " + std::to_string(G.size()));
    std::map<Perm8, int> index;
    for (int i = 0; i < 168; i++) index[G[i]] = i;
    auto mul = [&](int a, int b) { return index.at(compose8(G[a], G[b])); };

    // Least generator pair R (order 7), S (order 3) with |RS| = 2 generating
    // the whole group.
    int R = -1, S = -1;
    for (int r = 0; r < 168 && R < 0; r++) {
        if (order8(G[r]) != 7) continue;
        for (int c = 0; c < 168; c++) {
            if (order8(G[c]) != 3) continue;
            if (order8(G[mul(r, c)]) != 2) continue;
            if (closure8({G[r], G[c]}, 200).size() != 168) continue;
            R = r;
            S = c;
            break;
        }
    }
    if (R < 0) fail(errc::search_failed, "no (7,3,2) generator pair");

    auto coset_key = [&](int g, const std::vector<int>& subgroup) {
        int least = g;
        for (int h : subgroup) least = std::min(least, mul(g, h));
        return least;
    };
    std::vector<int> sub_s{index.at({0, 1, 2, 3, 4, 5, 6, 7}), S, mul(S, S)};
    int RS = mul(R, S);

    // vertex ids 0..55 in order of least coset element
    std::vector<int> vertex_of(168, -1);
    std::vector<int> vertex_keys;
    for (int g = 0; g < 168; g++) vertex_keys.push_back(coset_key(g, sub_s));
    std::vector<int> sorted_keys = vertex_keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
    if (sorted_keys.size() != 56) fail(errc::search_failed, "expected 56 vertex cosets");
    for (int g = 0; g < 168; g++)
        vertex_of[g] = static_cast<int>(
            std::lower_bound(sorted_keys.begin(), sorted_keys.end(), vertex_keys[g]) -
            sorted_keys.begin());

    // edges: cosets of <RS>
    std::vector<std::pair<int, int>> edges;
    std::vector<char> done(168, 0);
    for (int g = 0; g < 168; g++) {
        if (done[g]) continue;
        done[g] = 1;
        done[mul(g, RS)] = 1;
        edges.emplace_back(vertex_of[g], vertex_of[mul(g, RS)]);
    }
    if (edges.size() != 84) fail(errc::search_failed, "expected 84 edge cosets");
    SimpleGraph skeleton(56, edges);
    if (skeleton.edge_count() != 84 || !is_regular(skeleton, 3))
        fail(errc::search_failed, "skeleton is not the cubic 84-edge graph");

    // faces: cosets of <R>, traced as g, gR, gR^2, ...
    std::vector<Cycle> faces;
    std::vector<char> fdone(168, 0);
    for (int g = 0; g < 168; g++) {
        if (fdone[g]) continue;
        std::vector<int> boundary;
        int x = g;
        for (int k = 0; k < 7; k++) {
            fdone[x] = 1;
            boundary.push_back(vertex_of[x]);
            x = mul(x, R);
        }
        faces.push_back(canonical_cycle(boundary));
    }
    if (faces.size() != 24) fail(errc::search_failed, "expected 24 face cosets");
    return TrivalentMap(std::move(skeleton), std::move(faces));
}

TrivalentMap parse_map_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::schema_violation, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("graph6") || !j.contains("faces") ||
        !j["graph6"].is_string() || !j["faces"].is_array())
        fail(errc::schema_violation, "expected {\"graph6\": string, \"faces\": [[v,...],...]}");
    SimpleGraph g = parse_graph6(j["graph6"].get<std::string>());
    std::vector<Cycle> faces;
    for (const auto& f : j["faces"]) {
        if (!f.is_array()) fail(errc::schema_violation, "face must be an array");
        std::vector<int> vs;
        for (const auto& v : f) {
            if (!v.is_number_integer()) fail(errc::schema_violation, "face vertex must be an integer");
            vs.push_back(v.get<int>());
        }
        faces.push_back(Cycle{std::move(vs)});
    }
    return TrivalentMap(std::move(g), std::move(faces));
}

std::string write_map_json(const TrivalentMap& m) {
    nlohmann::json j;
    j["graph6"] = write_graph6(m.skeleton());
    j["faces"] = nlohmann::json::array();
    for (const auto& f : m.faces()) j["faces"].push_back(f.verts);
    return j.dump();
}

} // namespace g7
