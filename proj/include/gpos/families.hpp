#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpos/graph.hpp"

namespace gpos {

/// Which generator produced a graph, with the closed-form invariant values
/// the construction is known to have. Expected values never come from a
/// solver.
struct FamilySpec {
    std::string family;
    std::vector<std::int64_t> params;
    std::vector<std::pair<std::string, std::size_t>> expected;

    std::optional<std::size_t> expected_value(std::string_view invariant) const;
};

struct Family {
    Graph graph;
    FamilySpec spec;
    /// Human-readable name per vertex, e.g. "{1,2}" for Kneser vertices.
    std::vector<std::string> labels;
};

Family cycle(std::size_t n);
Family path(std::size_t n);
Family complete(std::size_t n);
/// Parts are numbered consecutively, first part first.
Family complete_multipartite(std::span<const std::size_t> parts);
/// K(n,2): 2-subsets of {1..n} in lexicographic order, adjacent iff disjoint.
Family kneser_2(std::size_t n);
/// 2-subset of {1..n} (1-based) for vertex `index` of kneser_2(n).
std::pair<std::size_t, std::size_t> kneser_pair(std::size_t n, Vertex index);
/// Outer 5-cycle 0..4, inner vertices 5..9 with spokes 0-5, 1-8, 2-6, 3-9, 4-7.
Family petersen();

/// bK_1 join K_{a-1} for 2 <= a <= b; the clique construction G(a,b) for
/// 4 <= b < a. Vertex order for G(a,b): X1 (x1 first), X2 (x2 first), Y, w, z.
Family realisation_gp_geodetic(std::size_t a, std::size_t b);
/// (K_c u K_{b-a+c}) join K_{a-c} with the smallest c such that
/// a <= b - a + 2c <= b.
Family realisation_gp_lower_gp(std::size_t a, std::size_t b);
/// Smallest c used by realisation_gp_lower_gp.
std::size_t realisation_clique_split(std::size_t a, std::size_t b);
/// K_n minus the k-1 edges from vertex 0 to vertices 1..k-1.
Family size_extremal(std::size_t n, std::size_t k);
/// C_6 with vertex i blown up to a clique W_i, consecutive cliques fully
/// joined. Cliques are numbered W_0, ..., W_5 in order.
Family hexagon_blowup(std::size_t a, std::size_t b);
/// Sizes of W_0..W_5 used by hexagon_blowup.
std::vector<std::size_t> hexagon_clique_sizes(std::size_t a, std::size_t b);
/// Clique W u R u S1 u S2 plus x1 ~ S1 u R and x2 ~ S2 u R. Vertex order:
/// W, R, S1, S2, x1, x2.
Family z_graph(std::size_t w, std::size_t r, std::size_t s);
/// K_r box K_s.
Family rook(std::size_t r, std::size_t s);
/// K_r x K_s.
Family direct_complete(std::size_t r, std::size_t s);
/// L(K_n), vertices labelled by the edge of K_n they stand for.
Family line_complete(std::size_t n);

/// Closed forms used as FamilySpec expectations.
namespace closed_form {
std::size_t lower_gp_cycle(std::size_t n);
std::size_t lower_gp_multipartite(std::span<const std::size_t> parts);
std::size_t lower_gp_kneser(std::size_t n);
std::size_t lower_gp_line_complete(std::size_t n);
std::size_t lower_gp_rook(std::size_t r, std::size_t s);
std::size_t gp_rook(std::size_t r, std::size_t s);
std::size_t lower_gp_direct(std::size_t r, std::size_t s);
std::size_t lower_gp_gp_order(std::size_t a, std::size_t b);
}  // namespace closed_form

/// Generator lookup by name for the command line. Throws InputError on an
/// unknown family or bad parameters.
Family make_family(std::string_view name, std::span<const std::int64_t> params);
std::vector<std::string> family_names();

// ---------------------------------------------------------------------------
// Small-graph corpus

/// Canonical adjacency code (upper triangle, maximised over degree-refined
/// relabellings). Equal codes iff isomorphic. Requires order <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices, built by
/// vertex augmentation and canonical deduplication. n <= 8.
std::vector<Graph> all_graphs(std::size_t n, bool connected_only);

/// Cheap isomorphism invariants: sorted degrees, distance histogram,
/// triangle count.
struct GraphSignature {
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> distance_histogram;  // last bucket: unreachable pairs
    std::size_t triangles = 0;

    friend bool operator==(const GraphSignature&, const GraphSignature&) = default;
};

GraphSignature signature(const Graph& g);

/// G(n, p) sample: each pair independently an edge with probability p.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
/// Rejection-samples random_graph until connected.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace gpos
