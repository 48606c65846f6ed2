#include <doctest.h>

#include <random>

#include "g7/graph.hpp"
#include "g7/schemes.hpp"
#include "oracles.hpp"

using namespace g7;

TEST_SUITE_BEGIN("graph");

static SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, e);
}

TEST_CASE("constructor basics") {
    SimpleGraph c7 = cycle_graph(7);
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(degree_sequence(c7) == std::vector<int>(7, 2));

    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++) all_pairs.emplace_back(i, j);
    SimpleGraph k4(4, all_pairs);
    CHECK(k4.edge_count() == 6);
    CHECK(degree_sequence(k4) == std::vector<int>{3, 3, 3, 3});
    CHECK(is_regular(k4, 3));

    // duplicate pairs collapse instead of erroring
    SimpleGraph dup(2, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 5}}), Error);
    try {
        SimpleGraph(3, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::loop_rejected);
    }
}

TEST_CASE("arcs") {
    SimpleGraph c7 = cycle_graph(7);
    CHECK(c7.arc_count() == 2 * c7.edge_count());
    // arc beginning-vertex partition sizes equal the degree sequence
    std::vector<int> begins(7, 0);
    for (int a = 0; a < c7.arc_count(); a++) begins[c7.arc_begin(a)]++;
    for (int v = 0; v < 7; v++) CHECK(begins[v] == c7.degree(v));
    int a01 = c7.arc_id(0, 1);
    CHECK(c7.arc_begin(a01) == 0);
    CHECK(c7.arc_end(a01) == 1);
    CHECK(SimpleGraph::arc_reverse(a01) == c7.arc_id(1, 0));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(SimpleGraph(0, {})));
    CHECK(is_connected(cycle_graph(7)));
    std::vector<std::pair<int, int>> two;
    for (int i = 0; i < 7; i++) {
        two.emplace_back(i, (i + 1) % 7);
        two.emplace_back(7 + i, 7 + (i + 1) % 7);
    }
    CHECK_FALSE(is_connected(SimpleGraph(14, two)));
}

TEST_CASE("graph6 round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        int n = 1 + static_cast<int>(rng() % 70);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        SimpleGraph g(n, edges);
        std::string enc = write_graph6(g);
        SimpleGraph back = parse_graph6(enc);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
        CHECK(write_graph6(back) == enc); // byte-identical on writer output
    }
}

TEST_CASE("graph6 matches reference encodings") {
    // strings produced by an independent implementation of the format
    std::vector<std::pair<int, int>> pet;
    for (int i = 0; i < 5; i++) {
        pet.emplace_back(i, (i + 1) % 5);
        pet.emplace_back(i, 5 + i);
        pet.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    CHECK(write_graph6(SimpleGraph(10, pet)) == "IheA@GUAo");
    CHECK(write_graph6(cycle_graph(7)) == "FhCKG");

    std::vector<std::pair<int, int>> cox;
    for (int i = 0; i < 7; i++) {
        cox.emplace_back(7 + i, 7 + (i + 1) % 7);
        cox.emplace_back(14 + i, 14 + (i + 2) % 7);
        cox.emplace_back(21 + i, 21 + (i + 3) % 7);
        cox.emplace_back(i, 7 + i);
        cox.emplace_back(i, 14 + i);
        cox.emplace_back(i, 21 + i);
    }
    CHECK(write_graph6(SimpleGraph(28, cox)) ==
          "[???C@@GG_`@@@?oo?A??G?GO?OO?OG@GA?Q_??A???C???C??CA??E?_?@_C??K");

    SimpleGraph pet_back = parse_graph6("IheA@GUAo");
    CHECK(pet_back.vertex_count() == 10);
    CHECK(is_regular(pet_back, 3));
    CHECK(is_connected(pet_back));
}

TEST_CASE("graph6 corner cases") {
    SimpleGraph c5 = cycle_graph(5);
    SimpleGraph back = parse_graph6(write_graph6(c5));
    CHECK(back.edge_count() == 5);
    CHECK(is_regular(back, 2));
    CHECK(is_connected(back));

    CHECK(parse_graph6(">>graph6<<" + write_graph6(c5)).edges() == c5.edges());
    CHECK(parse_graph6(write_graph6(c5) + "\n").edges() == c5.edges());

    // a 63-vertex graph exercises the long form of N(n)
    SimpleGraph big = cycle_graph(63);
    CHECK(write_graph6(big)[0] == 126);
    CHECK(parse_graph6(write_graph6(big)).edges() == big.edges());

    std::string enc = write_graph6(cycle_graph(7));
    CHECK_THROWS_AS(parse_graph6(enc.substr(0, enc.size() - 1)), Error);
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6(std::string(1, char(30))), Error);
    try {
        parse_graph6(enc.substr(0, enc.size() - 1));
    } catch (const Error& e) {
        CHECK(e.code() == errc::malformed_graph6);
    }

    // graphs on 2^18 or more vertices are out of contract in both directions
    CHECK_THROWS_AS(parse_graph6("~~??????"), Error);
    CHECK_THROWS_AS(write_graph6(SimpleGraph(1 << 18, {})), Error);
}

TEST_CASE("multigraph json round trips") {
    auto [k77, scheme] = k77_with_cyclic_scheme();
    std::string enc = write_multigraph_json(k77, scheme);
    auto [back, back_scheme] = parse_multigraph_json(enc);
    CHECK(back.vertex_count() == 14);
    CHECK(back.edge_count() == 49);
    CHECK(back.edges() == k77.edges());
    REQUIRE(back_scheme.has_value());
    CHECK(back_scheme->at == scheme.at);
    CHECK(write_multigraph_json(back, back_scheme) == enc);

    // the 7-dipole: seven parallel edges between two vertices
    MultiGraph dipole(2, std::vector<std::pair<int, int>>(7, {0, 1}));
    auto [dback, dscheme] = parse_multigraph_json(write_multigraph_json(dipole, std::nullopt));
    CHECK(dback.edge_count() == 7);
    CHECK_FALSE(dscheme.has_value());
    CHECK(dback.degree(0) == 7);

    CHECK_THROWS_AS(MultiGraph(2, {{0, 0}}), Error);
}

TEST_CASE("multigraph json rejects bad schemes") {
    MultiGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    std::string good = write_multigraph_json(tri, sorted_scheme(tri));
    CHECK(parse_multigraph_json(good).second.has_value());

    try {
        parse_multigraph_json(R"({"n":3,"edges":[[0,1],[1,2],[2,0]],"scheme":{"0":[0,99],"1":[1,2],"2":[3,4]}})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::dangling_arc_reference);
    }
    try {
        parse_multigraph_json(R"({"n":3,"edges":"nope"})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::schema_violation);
    }
}

TEST_SUITE_END();
