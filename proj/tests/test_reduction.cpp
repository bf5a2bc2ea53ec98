#include <doctest.h>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/reduction.hpp"
#include "oracles.hpp"

using namespace gpos;

TEST_CASE("instance shape") {
    const auto inst = build_lgp_instance(oracles::cycle(5), 2);
    CHECK(inst.target.order() == 12);
    CHECK(inst.target_k == 3);
    CHECK(inst.target.degree(11) == 11);
    CHECK(inst.roles[0] == ReductionRole::complement_part);
    CHECK(inst.roles[5] == ReductionRole::clique_part);
    CHECK(inst.roles[10] == ReductionRole::clique_part);
    CHECK(inst.roles[11] == ReductionRole::apex);
    CHECK(std::string(to_string(ReductionRole::apex)) == "apex");
    CHECK(build_lgp_instance(complete_graph(3), 1).target.order() == 8);
    CHECK_THROWS_AS(build_lgp_instance(oracles::cycle(5), 0), InputError);
    CHECK_THROWS_AS(build_lgp_instance(oracles::cycle(5), 6), InputError);
}

TEST_CASE("named instances") {
    const auto c5 = check_reduction(oracles::cycle(5), 2);
    CHECK(c5.ids == 2);
    CHECK(c5.source_yes);
    CHECK(c5.target_yes);
    CHECK(c5.lower_gp <= 3);
    const auto c5_1 = check_reduction(oracles::cycle(5), 1);
    CHECK(!c5_1.source_yes);
    CHECK(!c5_1.target_yes);
    CHECK(c5_1.agree);
    const auto k3 = check_reduction(complete_graph(3), 1);
    CHECK(k3.agree);
    CHECK(k3.lower_gp <= 2);
    CHECK(verify_reduction(oracles::path(4), 2));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(check_reduction(complete_graph(n), 1).target_yes);
    CHECK_THROWS_AS(check_reduction(oracles::cycle(11), 2), CapacityError);
}

TEST_CASE("gp- of the target is omega- of the complement plus one; witnesses avoid the clique part") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n, false)) {
            const auto inst = build_lgp_instance(g, 1);
            const auto check = check_reduction(g, 1);
            CHECK(check.lower_gp == *clique_numbers(complement(g)).smallest.value + 1);
            check.target_witness.for_each([&](Vertex v) { CHECK(inst.roles[v] != ReductionRole::clique_part); });
            for (std::size_t k = 1; k <= n; ++k) CHECK(verify_reduction(g, k));
        }
}
