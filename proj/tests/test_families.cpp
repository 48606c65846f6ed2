#include <doctest.h>

#include "g7/cycles.hpp"
#include "g7/families.hpp"
#include "g7/symmetry.hpp"

using namespace g7;

TEST_SUITE_BEGIN("families");

TEST_CASE("a_graph shape") {
    for (int n = 8; n <= 40; n++) {
        SimpleGraph g = a_graph(n);
        CHECK(g.vertex_count() == 4 * n);
        CHECK(g.edge_count() == 6 * n);
        CHECK(is_regular(g, 3));
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(a_graph(7), Error);
    try {
        a_graph(7);
    } catch (const Error& e) {
        CHECK(e.code() == errc::n_too_small);
    }
}

TEST_CASE("a_graph girth and signature") {
    for (int n : {8, 9, 12, 15}) {
        SimpleGraph g = a_graph(n);
        CHECK(girth(g) == 7);
        auto sc = is_girth_regular(g);
        REQUIRE(sc.common.has_value());
        CHECK(*sc.common == Signature{4, 4, 6});
    }
}

TEST_CASE("a_graph transitivity dichotomy") {
    for (int n = 8; n <= 24; n++) CHECK(is_vertex_transitive(a_graph(n)) == (n % 3 == 0));
}

TEST_CASE("complement of the epsilon-6 one-factor in A(n)") {
    // removing the x_i y_i and a_i b_i matching leaves the x-cycle of length
    // n plus y-a-b cycles: one of length 3n when 3 does not divide n, three
    // of length n when it does
    for (int n : {8, 9, 10, 12}) {
        SimpleGraph g = a_graph(n);
        CycleSet cs = girth_cycles(g);
        std::vector<char> keep(g.edge_count(), 1);
        int matching = 0;
        for (int e = 0; e < g.edge_count(); e++)
            if (epsilon(g, cs, e) == 6) {
                keep[e] = 0;
                matching++;
            }
        CHECK(matching == g.vertex_count() / 2);

        std::vector<std::pair<int, int>> rest;
        for (int e = 0; e < g.edge_count(); e++)
            if (keep[e]) rest.push_back(g.edges()[e]);
        SimpleGraph twofactor(g.vertex_count(), rest);
        CHECK(is_regular(twofactor, 2));

        std::vector<int> comp(g.vertex_count(), -1);
        std::vector<int> lengths;
        for (int v = 0; v < g.vertex_count(); v++) {
            if (comp[v] >= 0) continue;
            int len = 0;
            std::vector<int> stack{v};
            comp[v] = static_cast<int>(lengths.size());
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                len++;
                for (int w : twofactor.neighbors(u))
                    if (comp[w] < 0) {
                        comp[w] = comp[v];
                        stack.push_back(w);
                    }
            }
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end());
        if (n % 3 == 0) CHECK(lengths == std::vector<int>{n, n, n, n});
        else CHECK(lengths == std::vector<int>{n, 3 * n});
    }
}

TEST_CASE("petersen vertex-transitivity dichotomy") {
    // k^2 = +-1 mod n, except for the dodecahedron Pet(10,2)
    for (int n = 5; n <= 14; n++)
        for (int k = 1; 2 * k < n; k++) {
            bool expect = (k * k) % n == 1 || (k * k) % n == n - 1 || (n == 10 && k == 2);
            CHECK(is_vertex_transitive(gen_petersen(n, k)) == expect);
        }
}

TEST_CASE("explicit automorphisms of A(n)") {
    for (int n : {8, 9, 12}) {
        SimpleGraph g = a_graph(n);
        CHECK(preserves_edges(g, a_shift(n)));
    }
    for (int n : {9, 12, 15}) {
        SimpleGraph g = a_graph(n);
        Permutation tau = a_tau(n);
        CHECK(preserves_edges(g, tau));
        CHECK(tau(1) == n + 1); // x_1 -> y_1
    }
    CHECK_THROWS_AS(a_tau(8), Error);

    // <shift, tau> is already vertex-transitive on A(9)
    SimpleGraph a9 = a_graph(9);
    PermutationGroup sub(a9.vertex_count(), {a_shift(9), a_tau(9)});
    CHECK(sub.orbit_count() == 1);
}

TEST_CASE("generalized petersen") {
    SimpleGraph pet = gen_petersen(5, 2);
    CHECK(pet.vertex_count() == 10);
    CHECK(is_regular(pet, 3));
    CHECK(girth(pet) == 5);

    CHECK(girth(gen_petersen(13, 5)) == 7);
    CHECK(*is_girth_regular(gen_petersen(13, 5)).common == Signature{4, 5, 5});
    CHECK(is_vertex_transitive(gen_petersen(17, 4)));
    CHECK(is_regular(gen_petersen(13, 5), 3));
    CHECK(is_connected(gen_petersen(13, 5)));

    CHECK_THROWS_AS(gen_petersen(8, 4), Error); // k = n/2
    CHECK_THROWS_AS(gen_petersen(5, 0), Error);

    // kk' = +-1 mod n gives isomorphic graphs; other jumps need not
    CHECK(are_isomorphic(gen_petersen(11, 3), gen_petersen(11, 4)).has_value());
    CHECK_FALSE(are_isomorphic(gen_petersen(11, 2), gen_petersen(11, 3)).has_value());
}

TEST_CASE("coxeter graph") {
    SimpleGraph cox = coxeter();
    CHECK(cox.vertex_count() == 28);
    CHECK(cox.edge_count() == 42);
    CHECK(is_regular(cox, 3));
    CHECK(is_connected(cox));
    CHECK(girth(cox) == 7);
    CHECK(*is_girth_regular(cox).common == Signature{4, 4, 4});
    CHECK(is_vertex_transitive(cox));
    CHECK(is_arc_transitive(cox));

    CycleSet cs = girth_cycles(cox);
    CHECK(cs.size() == 24);
    for (int e = 0; e < cox.edge_count(); e++) CHECK(epsilon(cox, cs, e) == 4);
}

TEST_CASE("group table machinery") {
    GroupTable z7 = cyclic_group(7);
    CHECK(z7.identity == 0);
    CHECK(z7.element_order(1) == 7);
    SimpleGraph c7 = cayley(z7, ConnectionSet{{1, 6}});
    CHECK(c7.vertex_count() == 7);
    CHECK(is_regular(c7, 2));
    CHECK(is_connected(c7));
    CHECK(girth(c7) == 7);

    CHECK_THROWS_AS(cayley(z7, ConnectionSet{{0}}), Error);
    CHECK_THROWS_AS(cayley(z7, ConnectionSet{{1}}), Error);
    try {
        cayley(z7, ConnectionSet{{1}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_inverse_closed);
    }
}

TEST_CASE("group_446 structure") {
    auto [G, S] = group_446(3);
    CHECK(G.order == 36);

    // the matrix has order 3, so conjugation by t depends only on t mod 3
    int b = 4;  // ((0,0),1)
    int a = 3;  // ((1,1),0)
    CHECK(G.element_order(a) == 2);
    CHECK(G.element_order(b) == 9);
    CHECK(G.mul(a, a) == G.identity);
    CHECK(G.inverse[4] == S.elements[1]);

    // S = {b, b^-1, a} is inverse-closed and identity-free
    for (int s : S.elements) CHECK(s != G.identity);

    // presentation relators: a^2, b^{3i}, b a b^-1 a b^-1 a b
    int bi = G.inverse[b];
    int w = b;
    w = G.mul(w, a);
    w = G.mul(w, bi);
    w = G.mul(w, a);
    w = G.mul(w, bi);
    w = G.mul(w, a);
    w = G.mul(w, b);
    CHECK(w == G.identity);

    CHECK_THROWS_AS(group_446(2), Error);
}

TEST_CASE("cayley_446 graphs") {
    SimpleGraph g = cayley_446(3);
    CHECK(g.vertex_count() == 36);
    CHECK(is_regular(g, 3));
    CHECK(is_connected(g));

    // neighbors of the identity are exactly the connection set
    auto [G, S] = group_446(3);
    std::vector<int> nb = g.neighbors(G.identity);
    std::vector<int> expect = S.elements;
    std::sort(expect.begin(), expect.end());
    CHECK(nb == expect);

    // left multiplications are automorphisms (Cayley graphs are vertex-transitive)
    for (int h = 0; h < G.order; h++) {
        std::vector<int> img(G.order);
        for (int x = 0; x < G.order; x++) img[x] = G.mul(h, x);
        CHECK(preserves_edges(g, Permutation(std::move(img))));
    }
}

TEST_CASE("cayley_446 matches A(3i)") {
    for (int i : {3, 4, 5}) CHECK(are_isomorphic(cayley_446(i), a_graph(3 * i)).has_value());
}

TEST_SUITE_END();
