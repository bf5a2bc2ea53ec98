#include <doctest.h>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/solvers.hpp"
#include "oracles.hpp"

using namespace gpos;

namespace {

const SolverOptions kSerial{Execution::serial, kDefaultMonophonicCap};

std::size_t value(const InvariantReport& r) {
    REQUIRE(r.value.has_value());
    return *r.value;
}

/// Naive reference built on the test-only Floyd-Warshall predicate.
std::pair<std::size_t, std::size_t> gp_extremes_by_floyd(const Graph& g) {
    const std::size_t n = g.order();
    const auto f = oracles::floyd(g);
    std::size_t largest = 0, smallest = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!oracles::general_position(f, mask)) continue;
        const std::size_t k = oracles::members(mask).size();
        largest = std::max(largest, k);
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!((mask >> v) & 1U) && oracles::general_position(f, mask | (std::uint64_t{1} << v))) maximal = false;
        if (maximal) smallest = std::min(smallest, k);
    }
    return {largest, smallest};
}

}  // namespace

TEST_CASE("gp and gp- on named graphs") {
    const Graph pet = petersen().graph;
    const auto gp = gp_number(pet);
    CHECK(value(gp) == 6);
    CHECK(is_general_position(all_pairs_distances(pet), gp.witness));
    const auto lower = lower_gp_number(pet);
    CHECK(value(lower) == 4);
    CHECK(is_maximal_general_position(all_pairs_distances(pet), lower.witness));

    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(value(gp_number(complete_graph(n))) == n);
        CHECK(value(lower_gp_number(complete_graph(n))) == n);
    }
    CHECK(value(gp_number(cartesian_product(complete_graph(3), complete_graph(4)))) == 5);
    CHECK(value(lower_gp_number(oracles::cycle(7))) == 3);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        // Random tree by Pruefer-free attachment.
        const std::size_t n = 2 + trial % 10;
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
        CHECK(value(lower_gp_number(Graph::from_edges(n, edges))) == 2);
    }
}

TEST_CASE("disconnected graphs follow the unreachable convention") {
    CHECK(value(lower_gp_number(kneser_2(3).graph)) == 3);
    CHECK(value(lower_gp_number(kneser_2(4).graph)) == 6);
    CHECK(!geodetic_number(empty_graph(2)).value.has_value());
    CHECK_THROWS_AS(has_universal_line(empty_graph(3)), InputError);
    CHECK_THROWS_AS(count_distinct_lines(empty_graph(3)), InputError);
    CHECK_THROWS_AS(check_chen_chvatal(empty_graph(3)), InputError);
}

TEST_CASE("geodetic number") {
    CHECK(value(geodetic_number(realisation_gp_geodetic(3, 5).graph)) == 5);
    CHECK(value(geodetic_number(realisation_gp_geodetic(7, 6).graph)) == 6);
    CHECK(value(geodetic_number(oracles::cycle(4))) == 2);
    const Graph g = realisation_gp_geodetic(4, 6).graph;
    const auto r = geodetic_number(g);
    CHECK(simplicial_vertices(g).is_subset_of(r.witness));
    CHECK(is_geodetic(all_pairs_distances(g), r.witness));
}

TEST_CASE("monophonic numbers") {
    CHECK(value(lower_mp_number(petersen().graph)) == 2);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(value(mp_number(complete_graph(n))) == n);
        CHECK(value(lower_mp_number(complete_graph(n))) == n);
    }
    CHECK(value(lower_mp_number(z_graph(2, 2, 1).graph)) == 4);
    CHECK(value(lower_gp_number(z_graph(2, 2, 1).graph)) == 3);
    CHECK_THROWS_AS(mp_number(complete_graph(17)), CapacityError);
    CHECK(value(mp_number(complete_graph(17), SolverOptions{Execution::parallel, 17})) == 17);
}

TEST_CASE("clique numbers") {
    const auto c5 = clique_numbers(oracles::cycle(5));
    CHECK(value(c5.largest) == 2);
    CHECK(value(c5.smallest) == 2);
    const auto star = clique_numbers(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(value(star.largest) == 2);
    CHECK(value(star.smallest) == 2);

    // G(7,6) without its universal vertex z (the last vertex).
    const Graph g = realisation_gp_geodetic(7, 6).graph;
    const Graph h = induced_subgraph(g, VertexSet::full(g.order()) - VertexSet(g.order(), {g.order() - 1}));
    const auto hc = clique_numbers(h);
    CHECK(value(hc.smallest) == 6);
    CHECK(hc.smallest.witness.count() == 6);
    CHECK(h.is_clique(hc.smallest.witness));
    // X2 (vertices 5..9) together with w (vertex 13) is one such clique.
    const VertexSet x2w(h.order(), {5, 6, 7, 8, 9, 13});
    CHECK(h.is_clique(x2w));
    for (Vertex v = 0; v < h.order(); ++v)
        if (!x2w.test(v)) CHECK(!h.is_clique(x2w | VertexSet(h.order(), {v})));
}

TEST_CASE("independent unions of cliques") {
    const auto two_k2 = iuc_numbers(disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK(value(two_k2.largest) == 4);
    CHECK(value(two_k2.smallest) == 4);
    // C_5: an edge plus the opposite vertex is the best possible and every
    // maximal union has that shape.
    const auto c5 = iuc_numbers(oracles::cycle(5));
    CHECK(value(c5.largest) == 3);
    CHECK(value(c5.smallest) == 3);
    CHECK(c5.smallest.witness == VertexSet(5, {0, 1, 3}));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(!iuc_numbers(complete_graph(n)).smallest.value.has_value());
}

TEST_CASE("independent dominating sets") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(value(min_independent_dominating_set(complete_graph(n))) == 1);
    CHECK(value(min_independent_dominating_set(oracles::cycle(5))) == 2);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracles::random_graph(3 + trial % 6, 0.5, rng);
        CHECK(value(min_independent_dominating_set(g)) == value(clique_numbers(complement(g)).smallest));
    }
}

TEST_CASE("universal lines and the Chen-Chvatal premise") {
    CHECK(has_universal_line(oracles::cycle(6)));
    CHECK(!has_universal_line(oracles::cycle(7)));
    CHECK(has_universal_line(Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));
    // In K_n every line is just its defining pair.
    CHECK(count_distinct_lines(complete_graph(5)) == 10);
    CHECK(count_distinct_lines(oracles::path(3)) == 1);
    // C_5: five 4-vertex lines from edges, five 3-vertex lines from distance-2 pairs.
    CHECK(count_distinct_lines(oracles::cycle(5)) == 10);
    // K_3: three 2-vertex lines, so l = n and the premise is vacuous.
    CHECK(count_distinct_lines(complete_graph(3)) == 3);
    CHECK(!has_universal_line(complete_graph(3)));
    CHECK(check_chen_chvatal(complete_graph(3)));
    CHECK(check_chen_chvatal(oracles::cycle(7)));
    CHECK(check_chen_chvatal(complete_graph(1)));
}

TEST_CASE("2 <= gp- <= gp, and gp- = 2 iff a universal line exists") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n, true)) {
            const std::size_t lo = value(lower_gp_number(g, kSerial)), hi = value(gp_number(g, kSerial));
            CHECK(2 <= lo);
            CHECK(lo <= hi);
            CHECK((lo == 2) == has_universal_line(g));
        }
}

TEST_CASE("gp and gp- agree with a Floyd-Warshall reference on random graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(2 + trial % 9, trial % 3 == 0 ? 0.3 : 0.55, rng);
        const auto [largest, smallest] = gp_extremes_by_floyd(g);
        CHECK(value(gp_number(g)) == largest);
        CHECK(value(lower_gp_number(g)) == smallest);
    }
}

TEST_CASE("pruned solvers equal the naive oracles, values and witnesses, on 7-vertex graphs") {
    std::mt19937_64 rng(53);
    auto same = [](const InvariantReport& a, const InvariantReport& b) {
        CHECK(a.value == b.value);
        if (a.value && b.value) CHECK(a.witness == b.witness);
        CHECK(b.method == Method::oracle);
    };
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracles::random_graph(7, 0.25 + 0.02 * trial, rng);
        same(gp_number(g), oracle::gp_number(g));
        same(lower_gp_number(g), oracle::lower_gp_number(g));
        same(geodetic_number(g), oracle::geodetic_number(g));
        same(mp_number(g), oracle::mp_number(g));
        same(lower_mp_number(g), oracle::lower_mp_number(g));
        const auto c = clique_numbers(g), co = oracle::clique_numbers(g);
        same(c.largest, co.largest);
        same(c.smallest, co.smallest);
        const auto u = iuc_numbers(g), uo = oracle::iuc_numbers(g);
        same(u.largest, uo.largest);
        same(u.smallest, uo.smallest);
        same(min_independent_dominating_set(g), oracle::min_independent_dominating_set(g));
    }
    CHECK_THROWS_AS(oracle::gp_number(complete_graph(21)), CapacityError);
}

TEST_CASE("serial and parallel runs return identical values and witnesses") {
    std::mt19937_64 rng(59);
    const SolverOptions par{Execution::parallel, kDefaultMonophonicCap};
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracles::random_graph(6 + trial % 10, 0.4, rng);
        auto same = [](const InvariantReport& a, const InvariantReport& b) {
            CHECK(a.value == b.value);
            CHECK(a.witness == b.witness);
        };
        same(gp_number(g, kSerial), gp_number(g, par));
        same(lower_gp_number(g, kSerial), lower_gp_number(g, par));
        same(geodetic_number(g, kSerial), geodetic_number(g, par));
        same(lower_mp_number(g, kSerial), lower_mp_number(g, par));
        same(clique_numbers(g, kSerial).smallest, clique_numbers(g, par).smallest);
        same(iuc_numbers(g, kSerial).smallest, iuc_numbers(g, par).smallest);
        same(min_independent_dominating_set(g, kSerial), min_independent_dominating_set(g, par));
    }
    const Graph k9 = kneser_2(9).graph;
    CHECK(lower_gp_number(k9, kSerial).witness == lower_gp_number(k9, par).witness);
    // Serial node counts are reproducible.
    CHECK(lower_gp_number(k9, kSerial).nodes_explored == lower_gp_number(k9, kSerial).nodes_explored);
}

TEST_CASE("join formula on a few hand-picked pairs") {
    auto formula = [](const Graph& g, const Graph& h) {
        const std::size_t inf = std::numeric_limits<std::size_t>::max();
        return std::min({value(clique_numbers(g).smallest) + value(clique_numbers(h).smallest),
                         iuc_numbers(g).smallest.value.value_or(inf), iuc_numbers(h).smallest.value.value_or(inf)});
    };
    const std::vector<Graph> pieces{complete_graph(1), empty_graph(3), oracles::cycle(5), oracles::path(4),
                                    disjoint_union(complete_graph(2), complete_graph(3))};
    for (const auto& g : pieces)
        for (const auto& h : pieces) CHECK(value(lower_gp_number(join(g, h))) == formula(g, h));
}

TEST_CASE("gp- = 2 iff a universal line exists, all connected graphs on 8 vertices") {
    const auto graphs = all_graphs(8, true);
    CHECK(graphs.size() == 11117);
    std::size_t mismatches = 0;
    for (const Graph& g : graphs)
        if ((value(lower_gp_number(g)) == 2) != has_universal_line(g)) ++mismatches;
    CHECK(mismatches == 0);
}
