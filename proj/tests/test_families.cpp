#include <doctest.h>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/solvers.hpp"
#include "oracles.hpp"

using namespace gpos;

TEST_CASE("generators are deterministic") {
    CHECK(kneser_2(7).graph == kneser_2(7).graph);
    CHECK(z_graph(3, 2, 2).graph == z_graph(3, 2, 2).graph);
    CHECK(hexagon_blowup(3, 5).graph == hexagon_blowup(3, 5).graph);
    const std::vector<std::int64_t> p{4, 6};
    CHECK(make_family("realisation_gp_lower_gp", p).graph == realisation_gp_lower_gp(4, 6).graph);
}

TEST_CASE("cycles, paths, complete graphs") {
    CHECK(cycle(6).spec.expected_value("gp-") == 2U);
    CHECK(cycle(7).spec.expected_value("gp-") == 3U);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK(path(1).graph.order() == 1);
    CHECK(complete(4).graph == complete_graph(4));
}

TEST_CASE("complete multipartite") {
    const std::vector<std::size_t> parts{2, 3, 4};
    const Family f = complete_multipartite(parts);
    CHECK(f.graph.order() == 9);
    CHECK(f.graph.size() == 2 * 3 + 2 * 4 + 3 * 4);
    CHECK(f.spec.expected_value("gp-") == 2U);
    const std::vector<std::size_t> fours{4, 4, 4, 4};
    CHECK(complete_multipartite(fours).spec.expected_value("gp-") == 4U);
    const std::vector<std::size_t> zero{2, 0};
    CHECK_THROWS_AS(complete_multipartite(zero), InputError);
}

TEST_CASE("Kneser graphs") {
    const Family k5 = kneser_2(5);
    CHECK(k5.graph.order() == 10);
    CHECK(signature(k5.graph) == signature(petersen().graph));
    CHECK(canonical_code(k5.graph) == canonical_code(petersen().graph));
    CHECK(kneser_pair(5, 0) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(kneser_pair(5, 9) == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK(k5.labels[0] == "{1,2}");
    const Family k14 = kneser_2(14);
    CHECK(k14.graph.order() == 91);
    for (Vertex u = 0; u < 91; ++u) CHECK(k14.graph.degree(u) == 66);  // C(12,2)
    CHECK(kneser_2(4).spec.expected_value("gp-") == 6U);
    CHECK(kneser_2(12).spec.expected_value("gp-") == 6U);
}

TEST_CASE("Petersen") {
    const Family p = petersen();
    CHECK(p.graph.size() == 15);
    CHECK(p.spec.expected_value("gp") == 6U);
    CHECK(p.spec.expected_value("gp-") == 4U);
    CHECK(p.spec.expected_value("mp-") == 2U);
}

TEST_CASE("gp-/geodetic realisation") {
    const Family join_branch = realisation_gp_geodetic(3, 4);
    CHECK(join_branch.graph.order() == 6);
    CHECK(join_branch.graph.size() == 1 + 4 * 2);
    const Family g76 = realisation_gp_geodetic(7, 6);
    CHECK(g76.graph.order() == 2 * 5 + 3 + 2);
    CHECK(g76.labels.back() == "z");
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {5, 3}, {1, 1}})
        CHECK_THROWS_AS(realisation_gp_geodetic(a, b), InputError);
}

TEST_CASE("gp-/gp realisation") {
    // The smallest admissible split at (4,5) is c = 2, giving order 7.
    CHECK(realisation_clique_split(4, 5) == 2);
    CHECK(realisation_gp_lower_gp(4, 5).graph.order() == 7);
    for (std::size_t a = 2; a <= 8; ++a)
        for (std::size_t b = a + 1; b <= 9; ++b) {
            const Family f = realisation_gp_lower_gp(a, b);
            CHECK(f.graph.order() == closed_form::lower_gp_gp_order(a, b));
            CHECK(f.graph.connected());
        }
}

TEST_CASE("size-extremal graphs") {
    const Family f = size_extremal(7, 3);
    CHECK(f.graph.size() == 19);
    CHECK(f.spec.expected_value("gp-") == 3U);
    CHECK(*lower_gp_number(f.graph).value == 3);
    const Family g = size_extremal(5, 2);
    CHECK(g.graph.size() == 9);
    CHECK(*lower_gp_number(g.graph).value == 2);
    CHECK(*lower_gp_number(size_extremal(9, 4).graph).value == 4);
    CHECK_THROWS_AS(size_extremal(4, 3), InputError);
}

TEST_CASE("hexagon blow-up") {
    CHECK(hexagon_clique_sizes(4, 6) == std::vector<std::size_t>{2, 4, 2, 4, 4, 4});
    CHECK(hexagon_clique_sizes(2, 3) == std::vector<std::size_t>{1, 2, 1, 2, 2, 2});
    CHECK(hexagon_clique_sizes(5, 6) == std::vector<std::size_t>{3, 4, 2, 4, 4, 4});
    const Family f = hexagon_blowup(2, 3);
    CHECK(f.graph.order() == 10);
    const auto r = lower_mp_number(f.graph);
    CHECK(*r.value == 2);
    CHECK(*lower_gp_number(f.graph).value == 3);
    CHECK(*lower_mp_number(hexagon_blowup(5, 6).graph, SolverOptions{Execution::parallel, 21}).value == 5);
    CHECK_THROWS_AS(hexagon_blowup(3, 3), InputError);
}

TEST_CASE("Z graphs") {
    const Family z = z_graph(2, 2, 1);
    CHECK(z.graph.order() == 2 + 2 + 2 + 2);
    CHECK(z.spec.expected_value("mp-") == 4U);
    CHECK(z.spec.expected_value("gp-") == 3U);
    const Family small = z_graph(1, 1, 1);
    CHECK(small.graph.order() == 6);  // core of w+r+2s vertices plus two apexes
    CHECK(*lower_gp_number(small.graph).value == 3);
    CHECK(*lower_mp_number(small.graph).value == 3);
    CHECK_THROWS_AS(z_graph(1, 1, 2), InputError);
    CHECK_THROWS_AS(z_graph(1, 0, 1), InputError);
}

TEST_CASE("products and line graphs of complete graphs") {
    const Family r = rook(3, 4);
    CHECK(r.graph == cartesian_product(complete_graph(3), complete_graph(4)));
    CHECK(r.labels[5] == "(1,1)");
    CHECK(!direct_complete(2, 2).spec.expected_value("gp-").has_value());
    CHECK(direct_complete(5, 6).spec.expected_value("gp-") == 4U);
    const Family l = line_complete(5);
    CHECK(l.graph.order() == 10);
    CHECK(canonical_code(l.graph) == canonical_code(complement(petersen().graph)));
    CHECK(l.spec.expected_value("gp-") == 4U);
}

TEST_CASE("family lookup") {
    for (const auto& name : family_names()) CHECK(!name.empty());
    const std::vector<std::int64_t> bad{-1};
    CHECK_THROWS_AS(make_family("cycle", bad), InputError);
    CHECK_THROWS_AS(make_family("nonesuch", bad), InputError);
    const std::vector<std::int64_t> two{3, 4};
    CHECK_THROWS_AS(make_family("cycle", two), InputError);
    CHECK(make_family("z_graph", std::vector<std::int64_t>{2, 2, 1}).graph == z_graph(2, 2, 1).graph);
}
