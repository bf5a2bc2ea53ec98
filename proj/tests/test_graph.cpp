#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/metric.hpp"
#include "oracles.hpp"

using namespace gpos;

namespace {

bool regular(const Graph& g, std::size_t k) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace

TEST_CASE("vertex sets") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.count() == 3);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 64);
    CHECK(s.next(129) == 130);
    CHECK(s.str() == "{0,64,129}");
    CHECK(s.complement().count() == 127);
    CHECK(VertexSet(130).first() == 130);
    CHECK(VertexSet::full(65).count() == 65);
    CHECK((s & VertexSet(130, {64})).to_vector() == std::vector<Vertex>{64});
    CHECK(VertexSet(130, {64}).is_subset_of(s));
}

TEST_CASE("build_graph") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3 == complete_graph(3));
    const Graph c5 = oracles::cycle(5);
    CHECK(c5.size() == 5);
    CHECK(regular(c5, 2));
    const Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
}

TEST_CASE("from_rows rejects asymmetric rows") {
    std::vector<VertexSet> rows{VertexSet(2, {1}), VertexSet(2)};
    CHECK_THROWS_AS(Graph::from_rows(rows), InputError);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    const Graph c5 = oracles::cycle(5);
    CHECK(complement(complement(c5)) == c5);
    CHECK(complement(oracles::cycle(4)) == Graph::from_edges(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("disjoint union and join") {
    CHECK(disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2));
    const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(two_k2.order() == 4);
    CHECK(two_k2.size() == 2);
    const Graph mixed = disjoint_union(oracles::cycle(5), complete_graph(3));
    CHECK(mixed.order() == 8);
    CHECK(mixed.size() == 8);
    const auto comp = mixed.components();
    CHECK(std::set<std::size_t>(comp.begin(), comp.end()).size() == 2);

    CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
    CHECK(join(empty_graph(2), complete_graph(1)) == Graph::from_edges(3, {{0, 2}, {1, 2}}));
    const Graph j = join(empty_graph(4), complete_graph(2));
    CHECK(j.order() == 6);
    CHECK(j.size() == 9);
}

TEST_CASE("products") {
    const Graph k2 = complete_graph(2), k3 = complete_graph(3);
    const Graph c4 = cartesian_product(k2, k2);
    CHECK(c4.size() == 4);
    CHECK(regular(c4, 2));
    CHECK(c4.connected());

    const Graph rook33 = cartesian_product(k3, k3);
    CHECK(rook33.order() == 9);
    CHECK(rook33.size() == 18);
    CHECK(regular(rook33, 4));

    const Graph ladder = cartesian_product(k2, oracles::path(3));
    CHECK(ladder.order() == 6);
    CHECK(ladder.size() == 7);

    const Graph d22 = direct_product(k2, k2);
    CHECK(d22.size() == 2);
    CHECK(!d22.connected());
    const Graph c6 = direct_product(k2, k3);
    CHECK(c6.size() == 6);
    CHECK(regular(c6, 2));
    CHECK(c6.connected());
    const Graph d33 = direct_product(k3, k3);
    CHECK(d33.size() == 18);
    CHECK(regular(d33, 4));
}

TEST_CASE("products commute up to swapping coordinates") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracles::random_graph(3 + trial % 3, 0.5, rng);
        const Graph h = oracles::random_graph(2 + trial % 4, 0.5, rng);
        const Graph gh = cartesian_product(g, h), hg = cartesian_product(h, g);
        const Graph dgh = direct_product(g, h), dhg = direct_product(h, g);
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = 0; y < h.order(); ++y)
                for (Vertex x2 = 0; x2 < g.order(); ++x2)
                    for (Vertex y2 = 0; y2 < h.order(); ++y2) {
                        const Vertex a = product_index(h, x, y), b = product_index(h, x2, y2);
                        const Vertex a2 = product_index(g, y, x), b2 = product_index(g, y2, x2);
                        CHECK(gh.adjacent(a, b) == hg.adjacent(a2, b2));
                        CHECK(dgh.adjacent(a, b) == dhg.adjacent(a2, b2));
                    }
    }
}

TEST_CASE("line graphs") {
    CHECK(line_graph(oracles::path(3)).graph == complete_graph(2));
    CHECK(line_graph(complete_graph(3)).graph == complete_graph(3));
    const auto lk4 = line_graph(complete_graph(4));
    CHECK(lk4.graph.order() == 6);
    CHECK(regular(lk4.graph, 4));
    CHECK(signature(lk4.graph) == signature(complete_multipartite(std::vector<std::size_t>{2, 2, 2}).graph));
    for (Vertex i = 0; i < 6; ++i)
        for (Vertex j = 0; j < 6; ++j) {
            if (i == j) continue;
            const auto [a, b] = lk4.edge_of[i];
            const auto [c, d] = lk4.edge_of[j];
            CHECK(lk4.graph.adjacent(i, j) == (a == c || a == d || b == c || b == d));
        }
}

TEST_CASE("distances on named graphs") {
    const auto c5 = all_pairs_distances(oracles::cycle(5));
    CHECK(c5(0, 2) == 2);
    const auto pet = all_pairs_distances(petersen().graph);
    CHECK(pet.diameter() == 2);
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 0; v < 10; ++v)
            if (u != v) CHECK((pet(u, v) == 1 || pet(u, v) == 2));
    const auto split = all_pairs_distances(disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK(split(0, 2) == kUnreachable);
    CHECK(!split.reachable(1, 3));
    CHECK(!split.connected());
}

TEST_CASE("distances agree with Floyd-Warshall; serial equals parallel") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 70;
        const Graph g = oracles::random_graph(n, trial % 2 ? 0.08 : 0.3, rng);
        const auto d = all_pairs_distances(g, Execution::parallel);
        CHECK(d == all_pairs_distances(g, Execution::serial));
        const auto f = oracles::floyd(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                const auto expect = f[u][v] >= oracles::kInf ? kUnreachable : static_cast<Distance>(f[u][v]);
                REQUIRE(d(u, v) == expect);
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
            }
    }
}

TEST_CASE("intervals") {
    const auto c4 = all_pairs_distances(oracles::cycle(4));
    CHECK(interval(c4, 0, 2).count() == 4);
    const auto c5 = all_pairs_distances(oracles::cycle(5));
    CHECK(interval(c5, 0, 2) == VertexSet(5, {0, 1, 2}));
    // K_{2,3}: parts {0,1} and {2,3,4}.
    const auto k23 = all_pairs_distances(complete_multipartite(std::vector<std::size_t>{2, 3}).graph);
    CHECK(interval(k23, 0, 1) == VertexSet::full(5));
    const auto split = all_pairs_distances(empty_graph(2));
    CHECK(interval(split, 0, 1) == VertexSet(2, {0, 1}));
}

TEST_CASE("intervals match exhaustive shortest-path listing") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(2 + trial % 6, 0.45, rng);
        const auto d = all_pairs_distances(g);
        const auto f = oracles::floyd(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (f[u][v] >= oracles::kInf) continue;
                VertexSet expect(g.order());
                for (const auto& p : oracles::simple_paths(g, u, v))
                    if (static_cast<int>(p.size()) - 1 == f[u][v])
                        for (auto x : p) expect.set(x);
                CHECK(interval(d, u, v) == expect);
            }
    }
}

TEST_CASE("lines") {
    const auto p3 = all_pairs_distances(oracles::path(3));
    CHECK(line_of(p3, 0, 1) == VertexSet::full(3));
    const auto c4 = all_pairs_distances(oracles::cycle(4));
    CHECK(line_of(c4, 0, 1) == VertexSet::full(4));
    const auto c5 = all_pairs_distances(oracles::cycle(5));
    CHECK(line_of(c5, 0, 1) == VertexSet(5, {0, 1, 2, 4}));
    CHECK_THROWS_AS(line_of(c5, 2, 2), InputError);
    CHECK_THROWS_AS(line_of(all_pairs_distances(empty_graph(2)), 0, 1), InputError);
}

TEST_CASE("small-graph corpus matches the known counts") {
    // Graphs and connected graphs on n unlabelled vertices.
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    const std::size_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n, false).size() == all[n]);
        CHECK(all_graphs(n, true).size() == conn[n]);
    }
    CHECK_THROWS_AS(all_graphs(9, true), CapacityError);
}

TEST_CASE("canonical code is invariant under relabelling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const Graph g = oracles::random_graph(n, 0.5, rng);
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (auto [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
        const Graph h = Graph::from_edges(n, moved);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(signature(g) == signature(h));
    }
    CHECK(canonical_code(oracles::path(4)) != canonical_code(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
}
