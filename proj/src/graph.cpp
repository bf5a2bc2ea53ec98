#include "gpos/graph.hpp"

#include <numeric>
#include <string>

#include "gpos/errors.hpp"

namespace gpos {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        rows[u].set(v);
        rows[v].set(u);
    }
    return from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const std::size_t n = rows.size();
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (rows[v].width() != n) throw InputError("adjacency row width mismatch");
        if (rows[v].test(v)) throw InputError("loop at vertex " + std::to_string(v));
        rows[v].for_each([&](Vertex u) {
            if (!rows[u].test(v)) throw InputError("asymmetric adjacency");
        });
        degree_sum += rows[v].count();
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.edge_count_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = adj_[u].next(u); v < order(); v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](Vertex v) {
        VertexSet rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(adj_[v])) ok = false;
    });
    return ok;
}

bool Graph::is_independent(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (adj_[v].intersects(s)) ok = false;
    });
    return ok;
}

std::vector<std::size_t> Graph::components() const {
    const std::size_t n = order();
    std::vector<std::size_t> comp(n, n);
    for (Vertex root = 0; root < n; ++root) {
        if (comp[root] != n) continue;
        VertexSet seen(n), frontier(n);
        frontier.set(root);
        seen.set(root);
        while (!frontier.empty()) {
            VertexSet next(n);
            frontier.for_each([&](Vertex v) { next |= adj_[v]; });
            next -= seen;
            seen |= next;
            frontier = std::move(next);
        }
        seen.for_each([&](Vertex v) { comp[v] = root; });
    }
    return comp;
}

bool Graph::connected() const {
    const auto comp = components();
    for (std::size_t c : comp)
        if (c != 0) return false;
    return true;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph complete_graph(std::size_t n) {
    std::vector<VertexSet> rows(n, VertexSet::full(n));
    for (Vertex v = 0; v < n; ++v) rows[v].reset(v);
    return Graph::from_rows(std::move(rows));
}

Graph empty_graph(std::size_t n) { return Graph::from_rows(std::vector<VertexSet>(n, VertexSet(n))); }

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet r = g.neighbours(v).complement();
        r.reset(v);
        rows.push_back(std::move(r));
    }
    return Graph::from_rows(std::move(rows));
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
    const std::size_t ng = g.order(), nh = h.order(), n = ng + nh;
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Vertex v = 0; v < ng; ++v) {
        g.neighbours(v).for_each([&](Vertex u) { rows[v].set(u); });
        if (cross)
            for (Vertex u = ng; u < n; ++u) rows[v].set(u);
    }
    for (Vertex v = 0; v < nh; ++v) {
        h.neighbours(v).for_each([&](Vertex u) { rows[ng + v].set(ng + u); });
        if (cross)
            for (Vertex u = 0; u < ng; ++u) rows[ng + v].set(u);
    }
    return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Vertex product_index(const Graph& h, Vertex x, Vertex y) { return x * h.order() + y; }

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    for (Vertex x = 0; x < ng; ++x)
        for (Vertex y = 0; y < nh; ++y) {
            h.neighbours(y).for_each([&](Vertex y2) {
                if (y < y2) edges.emplace_back(x * nh + y, x * nh + y2);
            });
            g.neighbours(x).for_each([&](Vertex x2) {
                if (x < x2) edges.emplace_back(x * nh + y, x2 * nh + y);
            });
        }
    return Graph::from_edges(ng * nh, edges);
}

Graph direct_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    for (Vertex x = 0; x < ng; ++x)
        g.neighbours(x).for_each([&](Vertex x2) {
            if (x > x2) return;
            for (Vertex y = 0; y < nh; ++y)
                h.neighbours(y).for_each([&](Vertex y2) { edges.emplace_back(x * nh + y, x2 * nh + y2); });
        });
    return Graph::from_edges(ng * nh, edges);
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    out.edge_of = g.edges();
    const std::size_t m = out.edge_of.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto [a, b] = out.edge_of[i];
            auto [c, d] = out.edge_of[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    out.graph = Graph::from_edges(m, edges);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    const auto members = keep.to_vector();
    std::vector<std::size_t> index(g.order(), g.order());
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        g.neighbours(members[i]).for_each([&](Vertex u) {
            if (index[u] < g.order() && index[u] > i) edges.emplace_back(i, index[u]);
        });
    return Graph::from_edges(members.size(), edges);
}

}  // namespace gpos
