#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gpos/graph.hpp"
#include "gpos/metric.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

/// Induced-path enumeration is exponential; monophonic operations refuse
/// graphs above this order unless the caller raises the cap.
inline constexpr std::size_t kDefaultMonophonicCap = 16;

/// Three members of a set that lie on one path: `mid` is between `u` and `v`
/// on a geodesic, or an interior vertex of the induced u,v-path `path`.
struct TripleWitness {
    Vertex u = 0;
    Vertex mid = 0;
    Vertex v = 0;
    std::vector<Vertex> path;  // only for monophonic witnesses

    friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

/// The lexicographically least triple {a < b < c} of S with one member on a
/// geodesic between the other two, or nullopt if S is in general position.
std::optional<TripleWitness> general_position_violation(const DistanceMatrix& d, const VertexSet& s);

inline bool is_general_position(const DistanceMatrix& d, const VertexSet& s) {
    return !general_position_violation(d, s).has_value();
}

/// Only triples through the candidate vertex are re-tested, so S itself must
/// already be in general position for the answer to be meaningful; a set that
/// is not returns false.
bool is_maximal_general_position(const DistanceMatrix& d, const VertexSet& s);

/// I[S] = V.
bool is_geodetic(const DistanceMatrix& d, const VertexSet& s);

VertexSet geodetic_closure(const DistanceMatrix& d, const VertexSet& s);

/// Vertices whose open neighbourhood is a clique.
VertexSet simplicial_vertices(const Graph& g);

using PathVisitor = std::function<void(std::span<const Vertex>)>;

/// Calls `visit` once for every induced u,v-path, in DFS order with
/// neighbours taken in increasing index. Throws CapacityError above `cap`.
void enumerate_induced_paths(const Graph& g, Vertex u, Vertex v, const PathVisitor& visit,
                             std::size_t cap = kDefaultMonophonicCap);

/// Row-major n*n table: entry (u, v) holds the interior vertices of all
/// induced u,v-paths. Throws CapacityError above `cap`.
std::vector<VertexSet> monophonic_intervals(const Graph& g, std::size_t cap = kDefaultMonophonicCap);

/// First violating pair (u, v) in lexicographic order together with the
/// first induced path between them (DFS order) that carries a third member.
std::optional<TripleWitness> monophonic_violation(const Graph& g, const VertexSet& s,
                                                  std::size_t cap = kDefaultMonophonicCap);

inline bool is_monophonic_position(const Graph& g, const VertexSet& s, std::size_t cap = kDefaultMonophonicCap) {
    return !monophonic_violation(g, s, cap).has_value();
}

bool is_maximal_monophonic_position(const Graph& g, const VertexSet& s, std::size_t cap = kDefaultMonophonicCap);

struct CliqueUnionCheck {
    bool ok = false;
    std::size_t components = 0;
};

/// Whether every component of G[S] is complete, with the component count.
CliqueUnionCheck independent_union_of_cliques(const Graph& g, const VertexSet& s);

inline bool is_independent_union_of_cliques(const Graph& g, const VertexSet& s) {
    return independent_union_of_cliques(g, s).ok;
}

}  // namespace gpos
