#include <doctest.h>

#include <random>

#include "g7/classify.hpp"
#include "g7/families.hpp"
#include "g7/maps.hpp"
#include "oracles.hpp"

using namespace g7;

TEST_SUITE_BEGIN("maps");

// Faces of a rotation system by dart tracing; usable as map faces only when
// every traced walk is a simple cycle.
static std::optional<std::vector<Cycle>> faces_from_rotation(const SimpleGraph& g,
                                                             const std::vector<std::vector<int>>& rot) {
    int n = g.vertex_count();
    std::vector<int> pos_in_rot(g.arc_count(), -1);
    for (int v = 0; v < n; v++)
        for (int i = 0; i < static_cast<int>(rot[v].size()); i++) pos_in_rot[rot[v][i]] = i;
    auto next = [&](int a) {
        int rev = SimpleGraph::arc_reverse(a);
        int w = g.arc_begin(rev);
        const auto& order = rot[w];
        return order[(pos_in_rot[rev] + 1) % order.size()];
    };
    std::vector<char> used(g.arc_count(), 0);
    std::vector<Cycle> faces;
    for (int start = 0; start < g.arc_count(); start++) {
        if (used[start]) continue;
        std::vector<int> walk;
        int a = start;
        do {
            used[a] = 1;
            walk.push_back(g.arc_begin(a));
            a = next(a);
        } while (a != start);
        std::vector<char> seen(n, 0);
        for (int v : walk) {
            if (seen[v]) return std::nullopt;
            seen[v] = 1;
        }
        faces.push_back(canonical_cycle(walk));
    }
    return faces;
}

// LCF notation [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]: the 12-vertex cubic graph
// with trivial automorphism group.
static SimpleGraph frucht() {
    std::vector<int> lcf{-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 12; i++) {
        e.emplace_back(i, (i + 1) % 12);
        e.emplace_back(i, ((i + lcf[i]) % 12 + 12) % 12);
    }
    return SimpleGraph(12, e);
}

TEST_CASE("dodecahedron map") {
    TrivalentMap m = map_from_girth_cycles(gen_petersen(10, 2));
    CHECK(m.face_count() == 12);
    CHECK(map_type(m) == 5);
    CHECK(euler_characteristic(m) == 2);
    // chi = n(3/g - 1/2), exactly: 2*chi*g == n*(6-g)
    CHECK(2 * euler_characteristic(m) * 5 == 20 * (6 - 5));
    CHECK(flags(m).size() == 4u * 30);
    CHECK(is_regular_map(m));
    CHECK(is_rotary(m));
}

TEST_CASE("coxeter is not a (2,2,2) map") {
    CHECK_THROWS_AS(map_from_girth_cycles(coxeter()), Error);
    try {
        map_from_girth_cycles(coxeter());
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_two_per_edge);
    }
}

TEST_CASE("klein map") {
    TrivalentMap m = klein_map();
    CHECK(m.skeleton().vertex_count() == 56);
    CHECK(m.skeleton().edge_count() == 84);
    CHECK(m.face_count() == 24);
    CHECK(map_type(m) == 7);
    CHECK(euler_characteristic(m) == -4);
    CHECK(2 * euler_characteristic(m) * 7 == 56 * (6 - 7));

    const SimpleGraph& g = m.skeleton();
    CHECK(is_regular(g, 3));
    CHECK(is_connected(g));
    CHECK(girth(g) == 7);
    CHECK(*is_girth_regular(g).common == Signature{2, 2, 2});
    CHECK(is_vertex_transitive(g));

    CHECK(is_rotary(m));
    CHECK(is_regular_map(m));
    CHECK(map_automorphisms(m).order() == 336);
}

TEST_CASE("face length sum and flag count") {
    for (const TrivalentMap& m : {klein_map(), map_from_girth_cycles(gen_petersen(10, 2))}) {
        int total = 0;
        for (const Cycle& f : m.faces()) total += f.length();
        CHECK(total == 2 * m.skeleton().edge_count());
        CHECK(flags(m).size() == 4u * m.skeleton().edge_count());
        // g divides 3n for (2,2,2) skeletons
        int g = *map_type(m);
        CHECK((3 * m.skeleton().vertex_count()) % g == 0);
        // regular maps act with trivial flag stabilizers
        if (is_regular_map(m)) CHECK(flags(m).size() % map_automorphisms(m).order() == 0);
    }
}

TEST_CASE("a skeleton with trivial symmetry is never rotary") {
    SimpleGraph fr = frucht();
    REQUIRE(automorphism_group(fr).order() == 1);

    // a cubic vertex has two cyclic orders, so scan all 2^12 rotation systems
    // for one whose faces are all simple cycles (the planar embedding is one)
    std::optional<TrivalentMap> found;
    for (int mask = 0; mask < (1 << 12) && !found; mask++) {
        std::vector<std::vector<int>> rot(fr.vertex_count());
        for (int v = 0; v < fr.vertex_count(); v++) {
            for (int w : fr.neighbors(v)) rot[v].push_back(fr.arc_id(v, w));
            if ((mask >> v) & 1) std::swap(rot[v][1], rot[v][2]);
        }
        auto faces = faces_from_rotation(fr, rot);
        if (!faces) continue;
        try {
            found.emplace(fr, *faces);
        } catch (const Error&) {
        }
    }
    REQUIRE(found.has_value());
    CHECK(map_automorphisms(*found).order() == 1);
    CHECK_FALSE(is_rotary(*found));
    CHECK_FALSE(is_regular_map(*found));
}

TEST_CASE("map json round trip") {
    TrivalentMap m = klein_map();
    std::string enc = write_map_json(m);
    TrivalentMap back = parse_map_json(enc);
    CHECK(back.skeleton().edges() == m.skeleton().edges());
    CHECK(back.faces() == m.faces());

    CHECK_THROWS_AS(parse_map_json("{}"), Error);
    CHECK_THROWS_AS(parse_map_json("not json"), Error);
}

TEST_CASE("map validation") {
    // skeleton must be cubic
    std::vector<std::pair<int, int>> c7;
    for (int i = 0; i < 7; i++) c7.emplace_back(i, (i + 1) % 7);
    CHECK_THROWS_AS(TrivalentMap(SimpleGraph(7, c7), {}), Error);

    // faces must cover each edge exactly twice
    SimpleGraph pet = gen_petersen(10, 2);
    CycleSet cs = girth_cycles(pet);
    std::vector<Cycle> missing(cs.cycles().begin(), cs.cycles().end() - 1);
    CHECK_THROWS_AS(TrivalentMap(pet, missing), Error);
}

TEST_SUITE_END();
