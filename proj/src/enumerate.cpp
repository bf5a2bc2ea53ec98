#include <algorithm>
#include <map>
#include <unordered_set>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/metric.hpp"

namespace gpos {

namespace {

/// Colour refinement seeded by degree. Colours are ranks of sorted
/// signatures, so the final partition is isomorphism-invariant.
std::vector<std::size_t> refined_colours(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> colour(n);
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            g.neighbours(v).for_each([&](Vertex u) { sig[v].second.push_back(colour[u]); });
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes) return colour;
        classes = sorted.size();
    }
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

void permute_classes(const Graph& g, std::vector<std::vector<Vertex>>& classes, std::size_t c,
                     std::vector<Vertex>& order, std::uint64_t& best) {
    if (c == classes.size()) {
        best = std::max(best, code_of(g, order));
        return;
    }
    auto& cls = classes[c];
    std::sort(cls.begin(), cls.end());
    const std::size_t base = order.size();
    do {
        order.resize(base);
        order.insert(order.end(), cls.begin(), cls.end());
        permute_classes(g, classes, c + 1, order, best);
    } while (std::next_permutation(cls.begin(), cls.end()));
    order.resize(base);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 11) throw CapacityError("canonical_code supports at most 11 vertices");
    const auto colour = refined_colours(g);
    std::map<std::size_t, std::vector<Vertex>> by_colour;
    for (Vertex v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
    std::vector<std::vector<Vertex>> classes;
    for (auto& [c, members] : by_colour) classes.push_back(std::move(members));
    std::vector<Vertex> order;
    std::uint64_t best = 0;
    permute_classes(g, classes, 0, order, best);
    // Mix in n so graphs of different order never share a code.
    return best ^ (static_cast<std::uint64_t>(n) << 58);
}

std::vector<Graph> all_graphs(std::size_t n, bool connected_only) {
    if (n > 8) throw CapacityError("all_graphs supports at most 8 vertices");
    std::vector<Graph> level{empty_graph(n == 0 ? 0 : 1)};
    for (std::size_t order = 2; order <= n; ++order) {
        std::vector<std::pair<std::uint64_t, Graph>> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& g : level) {
            const auto base = g.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
                auto edges = base;
                for (Vertex v = 0; v + 1 < order; ++v)
                    if ((mask >> v) & 1U) edges.emplace_back(v, order - 1);
                Graph h = Graph::from_edges(order, edges);
                const auto code = canonical_code(h);
                if (seen.insert(code).second) next.emplace_back(code, std::move(h));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [code, h] : next) level.push_back(std::move(h));
    }
    if (connected_only)
        level.erase(std::remove_if(level.begin(), level.end(), [](const Graph& g) { return !g.connected(); }),
                    level.end());
    return level;
}

GraphSignature signature(const Graph& g) {
    const std::size_t n = g.order();
    GraphSignature s;
    for (Vertex v = 0; v < n; ++v) s.degrees.push_back(g.degree(v));
    std::sort(s.degrees.begin(), s.degrees.end());
    const auto d = all_pairs_distances(g, Execution::serial);
    s.distance_histogram.assign(n + 1, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) ++s.distance_histogram[d.reachable(u, v) ? d(u, v) : n];
    for (Vertex u = 0; u < n; ++u)
        g.neighbours(u).for_each([&](Vertex v) {
            if (v > u) s.triangles += (g.neighbours(u) & g.neighbours(v)).count();
        });
    s.triangles /= 3;
    return s;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    while (true) {
        Graph g = random_graph(n, p, rng);
        if (g.connected()) return g;
    }
}

}  // namespace gpos
