#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gpos/vertex_set.hpp"

namespace gpos {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as one
/// neighbourhood bit-set per vertex. Connectivity is not required.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on an out-of-range endpoint or a loop. Duplicate
    /// pairs (in either orientation) collapse to one edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Takes ownership of adjacency rows; validates symmetry and loops.
    static Graph from_rows(std::vector<VertexSet> rows);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    const VertexSet& neighbours(Vertex v) const noexcept { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    std::size_t degree(Vertex v) const noexcept { return adj_[v].count(); }

    /// Edges (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool is_clique(const VertexSet& s) const;
    bool is_independent(const VertexSet& s) const;
    bool connected() const;
    /// Component id per vertex, numbered by smallest member.
    std::vector<std::size_t> components() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

Graph complement(const Graph& g);
/// h's vertices are shifted to order(g)..order(g)+order(h)-1.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Product vertex (x, y) has index x * order(h) + y.
Vertex product_index(const Graph& h, Vertex x, Vertex y);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph direct_product(const Graph& g, const Graph& h);

struct LineGraph {
    Graph graph;
    /// Vertex i of `graph` is edge `edge_of[i]` of the source graph.
    std::vector<Edge> edge_of;
};

LineGraph line_graph(const Graph& g);

/// Induced subgraph on `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace gpos
