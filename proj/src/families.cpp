#include "g7/families.hpp"

#include <algorithm>
#include <set>

namespace g7 {

SimpleGraph a_graph(int n) {
    if (n < 8) fail(errc::n_too_small, "A(n) needs n >= 8, got " + std::to_string(n));
    auto x = [&](int i) { return ((i % n) + n) % n; };
    auto y = [&](int i) { return n + ((i % n) + n) % n; };
    auto a = [&](int i) { return 2 * n + ((i % n) + n) % n; };
    auto b = [&](int i) { return 3 * n + ((i % n) + n) % n; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) {
        edges.emplace_back(x(i), x(i + 1));
        edges.emplace_back(x(i), y(i));
        edges.emplace_back(y(i), a(i));
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(b(i), y(i + 2));
        edges.emplace_back(a(i), b(i + 1));
    }
    return SimpleGraph(4 * n, edges);
}

Permutation a_shift(int n) {
    if (n < 8) fail(errc::n_too_small, "A(n) needs n >= 8, got " + std::to_string(n));
    std::vector<int> img(4 * n);
    for (int cls = 0; cls < 4; cls++)
        for (int i = 0; i < n; i++) img[cls * n + i] = cls * n + (i + 1) % n;
    return Permutation(std::move(img));
}

Permutation a_tau(int n) {
    if (n % 3 != 0) fail(errc::not_divisible_by_3, "tau needs 3 | n, got n = " + std::to_string(n));
    if (n < 8) fail(errc::n_too_small, "A(n) needs n >= 8, got " + std::to_string(n));
    auto x = [&](int i) { return ((i % n) + n) % n; };
    auto y = [&](int i) { return n + ((i % n) + n) % n; };
    auto a = [&](int i) { return 2 * n + ((i % n) + n) % n; };
    auto b = [&](int i) { return 3 * n + ((i % n) + n) % n; };
    std::vector<int> img(4 * n);
    for (int i = 0; i < n; i++) {
        switch (i % 3) {
        case 0:
            img[x(i)] = b(i - 1);
            img[y(i)] = a(i - 1);
            img[a(i)] = b(i);
            img[b(i)] = a(i);
            break;
        case 1:
            img[x(i)] = y(i);
            img[y(i)] = x(i);
            img[a(i)] = x(i + 1);
            img[b(i)] = y(i + 1);
            break;
        case 2:
            img[x(i)] = a(i - 1);
            img[y(i)] = b(i - 1);
            img[a(i)] = y(i + 1);
            img[b(i)] = x(i + 1);
            break;
        }
    }
    return Permutation(std::move(img));
}

SimpleGraph gen_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        fail(errc::bad_jump, "Pet(n,k) needs n >= 3 and 1 <= k < n/2, got n = " + std::to_string(n) +
                                 ", k = " + std::to_string(k));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, n + (i + k) % n);
    }
    return SimpleGraph(2 * n, edges);
}

SimpleGraph coxeter() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; i++) {
        edges.emplace_back(7 + i, 7 + (i + 1) % 7);
        edges.emplace_back(14 + i, 14 + (i + 2) % 7);
        edges.emplace_back(21 + i, 21 + (i + 3) % 7);
        edges.emplace_back(i, 7 + i);
        edges.emplace_back(i, 14 + i);
        edges.emplace_back(i, 21 + i);
    }
    return SimpleGraph(28, edges);
}

GroupTable GroupTable::from_table(int order, std::vector<int> table) {
    GroupTable G;
    G.order = order;
    G.table = std::move(table);
    if (static_cast<int>(G.table.size()) != order * order)
        fail(errc::schema_violation, "multiplication table size mismatch");
    for (int x : G.table)
        if (x < 0 || x >= order) fail(errc::schema_violation, "table entry out of range");

    int id = -1;
    for (int e = 0; e < order; e++) {
        bool ok = true;
        for (int a = 0; a < order && ok; a++)
            if (G.mul(e, a) != a || G.mul(a, e) != a) ok = false;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) fail(errc::schema_violation, "no identity element");
    G.identity = id;

    G.inverse.assign(order, -1);
    for (int a = 0; a < order; a++) {
        for (int b = 0; b < order; b++)
            if (G.mul(a, b) == id && G.mul(b, a) == id) {
                G.inverse[a] = b;
                break;
            }
        if (G.inverse[a] < 0) fail(errc::schema_violation, "element without inverse");
    }

    if (order <= 200) {
        for (int a = 0; a < order; a++)
            for (int b = 0; b < order; b++)
                for (int c = 0; c < order; c++)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                        fail(errc::schema_violation, "multiplication table is not associative");
    }
    return G;
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity) {
        x = mul(x, a);
        k++;
        if (k > order) fail(errc::schema_violation, "element order exceeds group order");
    }
    return k;
}

GroupTable cyclic_group(int n) {
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return GroupTable::from_table(n, std::move(t));
}

SimpleGraph cayley(const GroupTable& G, const ConnectionSet& S) {
    std::set<int> elems(S.elements.begin(), S.elements.end());
    for (int s : elems) {
        if (s == G.identity) fail(errc::contains_identity, "connection set contains the identity");
        if (!elems.count(G.inverse[s]))
            fail(errc::not_inverse_closed, "element " + std::to_string(s) + " lacks its inverse");
    }
    std::vector<std::pair<int, int>> edges;
    for (int g = 0; g < G.order; g++)
        for (int s : elems) edges.emplace_back(g, G.mul(g, s));
    return SimpleGraph(G.order, edges);
}

std::pair<GroupTable, ConnectionSet> group_446(int i) {
    if (i < 3) fail(errc::i_too_small, "need i >= 3, got " + std::to_string(i));
    int m = 3 * i;
    int order = 4 * m;
    // M = [[1,1],[1,0]] over GF(2); M^t has period 3.
    auto act = [](int t, int uv) {
        int u = uv >> 1, v = uv & 1;
        switch (((t % 3) + 3) % 3) {
        case 1: return (((u ^ v) << 1) | u);
        case 2: return ((v << 1) | (u ^ v));
        default: return uv;
        }
    };
    auto idx = [&](int uv, int t) { return 4 * t + uv; };
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int t1 = 0; t1 < m; t1++)
        for (int uv1 = 0; uv1 < 4; uv1++)
            for (int t2 = 0; t2 < m; t2++)
                for (int uv2 = 0; uv2 < 4; uv2++) {
                    int uv = uv1 ^ act(t1, uv2);
                    int t = (t1 + t2) % m;
                    table[static_cast<std::size_t>(idx(uv1, t1)) * order + idx(uv2, t2)] =
                        idx(uv, t);
                }
    GroupTable G = GroupTable::from_table(order, std::move(table));
    ConnectionSet S{{idx(0, 1), idx(0, m - 1), idx(3, 0)}};
    return {std::move(G), std::move(S)};
}

SimpleGraph cayley_446(int i) {
    auto [G, S] = group_446(i);
    return cayley(G, S);
}

} // namespace g7
