#include <doctest.h>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/io.hpp"
#include "oracles.hpp"

using namespace gpos;

namespace {

template <class F>
std::size_t parse_position(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no ParseError");
    return 0;
}

}  // namespace

TEST_CASE("graph6 round trips") {
    const Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.size() == 4);
    CHECK(star.degree(4) == 4);
    CHECK(emit_graph6(star) == "D?{");
    CHECK(parse_graph6("D?{\n") == star);

    const Graph c5 = oracles::cycle(5);
    CHECK(parse_graph6(emit_graph6(c5)) == c5);
    CHECK(emit_graph6(empty_graph(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
    CHECK(emit_graph6(complete_graph(1)) == "@");
    CHECK(emit_graph6(petersen().graph).size() == 1 + 8);

    std::mt19937_64 rng(61);
    for (std::size_t n = 0; n <= 62; ++n) {
        const Graph g = oracles::random_graph(n, 0.3, rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6("~??~"), CapacityError);
    CHECK_THROWS_AS(emit_graph6(empty_graph(63)), CapacityError);
    CHECK(parse_position([] { parse_graph6("D?"); }) == 2);     // truncated
    CHECK(parse_position([] { parse_graph6("D?{?"); }) == 3);   // trailing garbage
    CHECK(parse_position([] { parse_graph6("D? {"); }) == 2);   // byte out of range
    CHECK(parse_position([] { parse_graph6("B@"); }) == 1);     // padding bit set
    CHECK(parse_position([] { parse_graph6(""); }) == 0);
    try {
        parse_graph6("D?");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Where::byte);
    }
}

TEST_CASE("edge lists") {
    CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete_graph(3));
    CHECK(parse_edge_list("3 3\n0 1\n\n1 2\r\n0 2\n") == complete_graph(3));
    CHECK(emit_edge_list(parse_edge_list("3 2\n2 1\n1 0\n")) == "3 2\n0 1\n1 2\n");
    CHECK(emit_edge_list(empty_graph(4)) == "4 0\n");

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracles::random_graph(1 + trial, 0.4, rng);
        const auto text = emit_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        CHECK(emit_edge_list(parse_edge_list(text)) == text);
    }
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parse_edge_list("2 1\n0 2");
        FAIL("accepted out-of-range vertex");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Where::line);
        CHECK(e.position() == 2);
    }
    CHECK(parse_position([] { parse_edge_list("3 2\n0 1\n"); }) == 3);
    CHECK(parse_position([] { parse_edge_list("3 1\n0 1\n1 2\n"); }) == 3);
    CHECK(parse_position([] { parse_edge_list("3 1\n0 x\n"); }) == 2);
    CHECK(parse_position([] { parse_edge_list("3 1\n1 1\n"); }) == 2);
    CHECK(parse_position([] { parse_edge_list("three 1\n"); }) == 1);
    CHECK(parse_position([] { parse_edge_list(""); }) == 1);
}

TEST_CASE("documents detect their format") {
    CHECK(detect_format("D?{\n") == GraphFormat::graph6);
    CHECK(detect_format("\n3 0\n") == GraphFormat::edges);
    const auto doc = read_graph_document("D?{\n", std::nullopt, "star", GraphDocument::Source::inline_text);
    CHECK(doc.graph.size() == 4);
    CHECK(doc.label == "star");
    CHECK_THROWS_AS(read_graph_document("D?{\nD?{\n", GraphFormat::graph6, "", GraphDocument::Source::file),
                    ParseError);
}

TEST_CASE("report JSON keeps a stable schema") {
    InvariantReport r;
    r.invariant = "alpha-omega-";
    r.witness = VertexSet(4);
    const auto j = to_json(r);
    for (const char* key : {"invariant", "value", "witness", "nodes_explored", "method"}) CHECK(j.contains(key));
    CHECK(j["value"].is_null());
    CHECK(j["method"] == "pruned");

    r.value = 2;
    r.witness = VertexSet(4, {1, 3});
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    const auto k = to_json(r, &labels);
    CHECK(k["value"] == 2);
    CHECK(k["witness"] == nlohmann::json::array({1, 3}));
    CHECK(k["witness_labels"] == nlohmann::json::array({"b", "d"}));

    const auto spec = to_json(kneser_2(6).spec);
    CHECK(spec["family"] == "kneser_2");
    CHECK(spec["params"] == nlohmann::json::array({6}));
    CHECK(spec["expected"]["gp-"] == 3);
}
