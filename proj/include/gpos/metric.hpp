#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gpos/graph.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

/// Selects the OpenMP kernel or the single-threaded reference. Both produce
/// identical results; the serial path is kept for cross-checking.
enum class Execution { serial, parallel };

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// All-pairs shortest-path lengths. Pairs in different components hold
/// kUnreachable.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    std::size_t order() const noexcept { return n_; }
    Distance operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
    Distance& at(Vertex u, Vertex v) noexcept { return d_[u * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const noexcept { return (*this)(u, v) != kUnreachable; }

    /// Largest finite distance.
    Distance diameter() const noexcept;
    bool connected() const noexcept;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Distance> d_;
};

/// Frontier-bitset BFS from every source.
DistanceMatrix all_pairs_distances(const Graph& g, Execution exec = Execution::parallel);

/// True iff `mid` lies on a shortest u,v-path. Always false when u and v are
/// in different components.
inline bool between(const DistanceMatrix& d, Vertex u, Vertex mid, Vertex v) noexcept {
    const Distance uv = d(u, v), um = d(u, mid), mv = d(mid, v);
    if (uv == kUnreachable || um == kUnreachable || mv == kUnreachable) return false;
    return um + mv == uv;
}

/// Vertices on some shortest u,v-path; {u, v} when no path exists.
VertexSet interval(const DistanceMatrix& d, Vertex u, Vertex v);

/// The metric line through u and v: every z with d(u,v) = d(u,z) + d(z,v) or
/// d(u,v) = |d(u,z) - d(z,v)|. Throws InputError when u == v or the pair is
/// unreachable.
VertexSet line_of(const DistanceMatrix& d, Vertex u, Vertex v);

}  // namespace gpos
