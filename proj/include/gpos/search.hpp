#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gpos/graph.hpp"
#include "gpos/metric.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

/// Hereditary set family described by forbidden pairs and triples. A set S is
/// *free* when no pair {a, b} of S has b in pair_row(a) and no triple {a, b, c}
/// of S has c in triple_row(a, b).
class ConflictTable {
public:
    ConflictTable() = default;
    explicit ConflictTable(std::size_t n) : n_(n), words_(words_for(n)) {}

    /// {u, v, w} collinear on a geodesic (the metric line through u, v, minus
    /// u and v). Empty rows for pairs in different components.
    static ConflictTable geodesic(const DistanceMatrix& d, Execution exec = Execution::parallel);
    /// {u, v, w} on a common induced path, from a table of monophonic intervals.
    static ConflictTable monophonic(std::size_t n, std::span<const VertexSet> intervals);
    /// {u, v, w} inducing a path on three vertices; free sets are exactly the
    /// independent unions of cliques.
    static ConflictTable induced_p3(const Graph& g);
    /// Adjacent pairs conflict; free sets are independent sets.
    static ConflictTable adjacency(const Graph& g);

    std::size_t order() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    bool has_pairs() const noexcept { return !pairs_.empty(); }
    bool has_triples() const noexcept { return !triples_.empty(); }

    std::span<const Word> pair_row(Vertex v) const noexcept { return {pairs_.data() + v * words_, words_}; }
    std::span<const Word> triple_row(Vertex u, Vertex v) const noexcept {
        return {triples_.data() + (u * n_ + v) * words_, words_};
    }

    bool is_free(const VertexSet& s) const;
    /// Free and no outside vertex can be added.
    bool is_maximal_free(const VertexSet& s) const;

private:
    std::span<Word> pair_row_mut(Vertex v) noexcept { return {pairs_.data() + v * words_, words_}; }
    std::span<Word> triple_row_mut(Vertex u, Vertex v) noexcept {
        return {triples_.data() + (u * n_ + v) * words_, words_};
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> pairs_;
    std::vector<Word> triples_;
};

struct SearchResult {
    std::optional<VertexSet> best;
    std::uint64_t nodes = 0;
};

/// Extra filter on maximal free sets (e.g. "not a single clique").
using SetFilter = std::function<bool(const VertexSet&)>;

/// Largest free set; lexicographically least among the largest.
SearchResult maximum_free_set(const ConflictTable& t, Execution exec = Execution::parallel);

/// Smallest maximal free set accepted by `accept` (all accepted when empty),
/// found by increasing cardinality; lexicographically least at that size.
/// `best` is empty when no maximal free set passes the filter.
SearchResult minimum_maximal_free_set(const ConflictTable& t, Execution exec = Execution::parallel,
                                      const SetFilter& accept = {});

/// Smallest S containing `seed` whose geodetic closure is V, searched by
/// increasing cardinality over supersets of the seed. `intervals` is the
/// row-major n*n interval table.
SearchResult minimum_covering_superset(std::size_t n, std::span<const VertexSet> intervals, const VertexSet& seed,
                                       Execution exec = Execution::parallel);

/// Row-major table of interval(d, u, v) for all pairs.
std::vector<VertexSet> interval_table(const DistanceMatrix& d);

}  // namespace gpos
