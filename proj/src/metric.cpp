#include "gpos/metric.hpp"

#include <algorithm>

#include "gpos/errors.hpp"

namespace gpos {

Distance DistanceMatrix::diameter() const noexcept {
    Distance best = 0;
    for (Distance x : d_)
        if (x != kUnreachable) best = std::max(best, x);
    return best;
}

bool DistanceMatrix::connected() const noexcept {
    return std::none_of(d_.begin(), d_.end(), [](Distance x) { return x == kUnreachable; });
}

namespace {

void bfs_row(const Graph& g, Vertex source, DistanceMatrix& out) {
    const std::size_t n = g.order();
    VertexSet seen(n), frontier(n);
    seen.set(source);
    frontier.set(source);
    out.at(source, source) = 0;
    for (Distance level = 1; !frontier.empty(); ++level) {
        VertexSet next(n);
        frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
        next -= seen;
        next.for_each([&](Vertex v) { out.at(source, v) = level; });
        seen |= next;
        frontier = std::move(next);
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g, Execution exec) {
    const std::size_t n = g.order();
    DistanceMatrix d(n);
    if (exec == Execution::parallel) {
        // Rows are disjoint, so sources write without synchronisation.
#pragma omp parallel for schedule(dynamic, 4) if (n > 32)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s)
            bfs_row(g, static_cast<Vertex>(s), d);
    } else {
        for (Vertex s = 0; s < n; ++s) bfs_row(g, s, d);
    }
    return d;
}

VertexSet interval(const DistanceMatrix& d, Vertex u, Vertex v) {
    const std::size_t n = d.order();
    VertexSet out(n);
    out.set(u);
    out.set(v);
    if (!d.reachable(u, v)) return out;
    for (Vertex w = 0; w < n; ++w)
        if (between(d, u, w, v)) out.set(w);
    return out;
}

VertexSet line_of(const DistanceMatrix& d, Vertex u, Vertex v) {
    if (u == v) throw InputError("line_of needs two distinct vertices");
    if (!d.reachable(u, v)) throw InputError("line_of needs a reachable pair");
    const std::size_t n = d.order();
    VertexSet out(n);
    const Distance uv = d(u, v);
    for (Vertex z = 0; z < n; ++z) {
        const Distance uz = d(u, z), zv = d(z, v);
        if (uz == kUnreachable) continue;
        const Distance gap = uz > zv ? uz - zv : zv - uz;
        if (uz + zv == uv || gap == uv) out.set(z);
    }
    return out;
}

}  // namespace gpos
