#include "gpos/position.hpp"

#include <string>

#include "gpos/errors.hpp"

namespace gpos {

namespace {

void check_cap(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw CapacityError("monophonic computation on " + std::to_string(g.order()) +
                            " vertices exceeds the cap of " + std::to_string(cap));
}

std::optional<TripleWitness> ordered_triple(const DistanceMatrix& d, Vertex a, Vertex b, Vertex c) {
    if (between(d, a, b, c)) return TripleWitness{a, b, c, {}};
    if (between(d, b, a, c)) return TripleWitness{b, a, c, {}};
    if (between(d, a, c, b)) return TripleWitness{a, c, b, {}};
    return std::nullopt;
}

}  // namespace

std::optional<TripleWitness> general_position_violation(const DistanceMatrix& d, const VertexSet& s) {
    const auto members = s.to_vector();
    const std::size_t k = members.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                if (auto w = ordered_triple(d, members[i], members[j], members[l])) return w;
    return std::nullopt;
}

bool is_maximal_general_position(const DistanceMatrix& d, const VertexSet& s) {
    if (!is_general_position(d, s)) return false;
    const auto members = s.to_vector();
    for (Vertex w = 0; w < d.order(); ++w) {
        if (s.test(w)) continue;
        bool blocked = false;
        for (std::size_t i = 0; i < members.size() && !blocked; ++i)
            for (std::size_t j = i + 1; j < members.size() && !blocked; ++j) {
                const Vertex a = members[i], b = members[j];
                blocked = between(d, a, w, b) || between(d, w, a, b) || between(d, a, b, w);
            }
        if (!blocked) return false;
    }
    return true;
}

VertexSet geodetic_closure(const DistanceMatrix& d, const VertexSet& s) {
    VertexSet closure = s;
    const auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) closure |= interval(d, members[i], members[j]);
    return closure;
}

bool is_geodetic(const DistanceMatrix& d, const VertexSet& s) {
    return geodetic_closure(d, s) == VertexSet::full(d.order());
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.is_clique(g.neighbours(v))) out.set(v);
    return out;
}

namespace {

/// Depth-first walk over induced paths that start at `path[0]`. `blocked`
/// holds the closed neighbourhoods of every path vertex except the tip, so a
/// vertex may extend the path iff it neighbours the tip and is not blocked.
template <typename OnPath>
void extend_induced(const Graph& g, std::vector<Vertex>& path, VertexSet& blocked, OnPath&& on_path) {
    const Vertex tip = path.back();
    VertexSet options = g.neighbours(tip) - blocked;
    VertexSet tip_closed = g.neighbours(tip);
    tip_closed.set(tip);
    const VertexSet saved = blocked;
    blocked |= tip_closed;
    options.for_each([&](Vertex x) {
        path.push_back(x);
        if (on_path(std::span<const Vertex>(path))) extend_induced(g, path, blocked, on_path);
        path.pop_back();
    });
    blocked = saved;
}

}  // namespace

void enumerate_induced_paths(const Graph& g, Vertex u, Vertex v, const PathVisitor& visit, std::size_t cap) {
    check_cap(g, cap);
    if (u >= g.order() || v >= g.order()) throw InputError("vertex out of range");
    std::vector<Vertex> path{u};
    if (u == v) {
        visit(path);
        return;
    }
    VertexSet blocked(g.order());
    extend_induced(g, path, blocked, [&](std::span<const Vertex> p) {
        const Vertex tip = p.back();
        if (tip == v) {
            visit(p);
            return false;
        }
        // A tip adjacent to v can only be followed by v itself.
        if (g.adjacent(tip, v)) {
            if (p.size() >= 2) {
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                    if (g.adjacent(p[i], v)) return false;
            }
            std::vector<Vertex> done(p.begin(), p.end());
            done.push_back(v);
            visit(done);
            return false;
        }
        return true;
    });
}

std::vector<VertexSet> monophonic_intervals(const Graph& g, std::size_t cap) {
    check_cap(g, cap);
    const std::size_t n = g.order();
    std::vector<VertexSet> table(n * n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> path{u};
        VertexSet blocked(n);
        extend_induced(g, path, blocked, [&](std::span<const Vertex> p) {
            VertexSet interior(n);
            for (std::size_t i = 1; i + 1 < p.size(); ++i) interior.set(p[i]);
            table[u * n + p.back()] |= interior;
            return true;
        });
    }
    return table;
}

std::optional<TripleWitness> monophonic_violation(const Graph& g, const VertexSet& s, std::size_t cap) {
    check_cap(g, cap);
    const auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            std::optional<TripleWitness> found;
            enumerate_induced_paths(
                g, members[i], members[j],
                [&](std::span<const Vertex> p) {
                    if (found) return;
                    for (std::size_t k = 1; k + 1 < p.size(); ++k)
                        if (s.test(p[k])) {
                            found = TripleWitness{members[i], p[k], members[j], {p.begin(), p.end()}};
                            return;
                        }
                },
                cap);
            if (found) return found;
        }
    return std::nullopt;
}

bool is_maximal_monophonic_position(const Graph& g, const VertexSet& s, std::size_t cap) {
    if (!is_monophonic_position(g, s, cap)) return false;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (s.test(w)) continue;
        VertexSet bigger = s;
        bigger.set(w);
        if (is_monophonic_position(g, bigger, cap)) return false;
    }
    return true;
}

CliqueUnionCheck independent_union_of_cliques(const Graph& g, const VertexSet& s) {
    CliqueUnionCheck out{true, 0};
    VertexSet left = s;
    while (!left.empty()) {
        const Vertex root = left.first();
        VertexSet comp(g.order()), frontier(g.order());
        comp.set(root);
        frontier.set(root);
        while (!frontier.empty()) {
            VertexSet next(g.order());
            frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
            next &= s;
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        ++out.components;
        if (!g.is_clique(comp)) out.ok = false;
        left -= comp;
    }
    return out;
}

}  // namespace gpos
