#include "gpos/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

#include "gpos/errors.hpp"

namespace gpos {

namespace {

inline void clear_bit(Word* w, Vertex v) { w[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

inline bool none(const Word* w, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (w[i] != 0) return false;
    return true;
}

/// Members of `w` at index >= from.
inline std::size_t count_from(const Word* w, std::size_t words, Vertex from) {
    std::size_t i = from / kWordBits;
    if (i >= words) return 0;
    std::size_t c = static_cast<std::size_t>(std::popcount(w[i] & (~Word{0} << (from % kWordBits))));
    for (++i; i < words; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
    return c;
}

/// Smallest member of `w` at index >= from, or `n`.
inline Vertex next_from(const Word* w, std::size_t words, std::size_t n, Vertex from) {
    std::size_t i = from / kWordBits;
    if (i >= words) return n;
    Word bits = w[i] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (bits != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++i == words) return n;
        bits = w[i];
    }
}

/// Depth-indexed DFS state over a conflict table. Level j holds the chosen
/// prefix S_j and cand_j = { w not in S_j : S_j + w is free }.
class FreeSetWalker {
public:
    explicit FreeSetWalker(const ConflictTable& t)
        : t_(t), n_(t.order()), w_(t.words()), cand_((n_ + 2) * w_, 0), chosen_(n_ + 1, 0) {
        const VertexSet all = VertexSet::full(n_);
        std::copy(all.words().begin(), all.words().end(), cand_.begin());
    }

    Word* cand(std::size_t depth) { return cand_.data() + depth * w_; }
    const Word* cand(std::size_t depth) const { return cand_.data() + depth * w_; }

    void push(std::size_t depth, Vertex v) {
        const Word* src = cand(depth);
        Word* dst = cand(depth + 1);
        std::copy_n(src, w_, dst);
        clear_bit(dst, v);
        if (t_.has_pairs()) {
            const auto row = t_.pair_row(v);
            for (std::size_t i = 0; i < w_; ++i) dst[i] &= ~row[i];
        }
        if (t_.has_triples()) {
            for (std::size_t j = 0; j < depth; ++j) {
                const auto row = t_.triple_row(chosen_[j], v);
                for (std::size_t i = 0; i < w_; ++i) dst[i] &= ~row[i];
            }
        }
        chosen_[depth] = v;
    }

    VertexSet current(std::size_t depth) const {
        return VertexSet(n_, std::span<const Vertex>(chosen_.data(), depth));
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t words() const noexcept { return w_; }

private:
    const ConflictTable& t_;
    std::size_t n_;
    std::size_t w_;
    std::vector<Word> cand_;
    std::vector<Vertex> chosen_;
};

/// Cardinality-k search for a maximal free set inside the subtree whose
/// smallest member is `first`.
struct MaximalAtK {
    FreeSetWalker walker;
    std::size_t k;
    const SetFilter& accept;
    std::uint64_t nodes = 0;
    bool reached_k = false;
    std::optional<VertexSet> hit;

    bool dfs(std::size_t depth, Vertex last) {
        ++nodes;
        const Word* c = walker.cand(depth);
        if (depth == k) {
            reached_k = true;
            if (!none(c, walker.words())) return false;
            VertexSet s = walker.current(depth);
            if (accept && !accept(s)) return false;
            hit = std::move(s);
            return true;
        }
        const std::size_t need = k - depth;
        for (Vertex v = next_from(c, walker.words(), walker.n(), last + 1); v < walker.n();
             v = next_from(c, walker.words(), walker.n(), v + 1)) {
            if (count_from(c, walker.words(), v) < need) break;
            walker.push(depth, v);
            if (dfs(depth + 1, v)) return true;
        }
        return false;
    }

    bool run(Vertex first) {
        walker.push(0, first);
        return dfs(1, first);
    }
};

/// Branch and bound for the largest free set with smallest member `first`.
struct MaximumInSubtree {
    FreeSetWalker walker;
    std::atomic<std::size_t>& global_best;
    std::uint64_t nodes = 0;
    std::size_t local_best = 0;
    std::optional<VertexSet> best;

    void dfs(std::size_t depth, Vertex last) {
        ++nodes;
        if (depth > local_best) {
            local_best = depth;
            best = walker.current(depth);
            std::size_t seen = global_best.load(std::memory_order_relaxed);
            while (seen < depth && !global_best.compare_exchange_weak(seen, depth)) {
            }
        }
        const Word* c = walker.cand(depth);
        for (Vertex v = next_from(c, walker.words(), walker.n(), last + 1); v < walker.n();
             v = next_from(c, walker.words(), walker.n(), v + 1)) {
            const std::size_t bound = depth + count_from(c, walker.words(), v);
            // Ties with another subtree's optimum must still be explored so
            // the lexicographically least set wins the merge.
            if (bound <= local_best || bound < global_best.load(std::memory_order_relaxed)) break;
            walker.push(depth, v);
            dfs(depth + 1, v);
        }
    }

    void run(Vertex first) {
        walker.push(0, first);
        dfs(1, first);
    }
};

std::optional<VertexSet> empty_answer(std::size_t n) {
    if (n == 0) return VertexSet(0);
    return std::nullopt;
}

}  // namespace

SearchResult maximum_free_set(const ConflictTable& t, Execution exec) {
    const std::size_t n = t.order();
    if (n == 0) return {empty_answer(0), 0};
    std::atomic<std::size_t> global_best{0};
    std::vector<std::optional<VertexSet>> per_first(n);
    std::vector<std::uint64_t> per_nodes(n, 0);

    auto run_one = [&](Vertex f) {
        MaximumInSubtree s{FreeSetWalker(t), global_best, 0, 0, std::nullopt};
        // A subtree rooted at f can hold at most n - f vertices.
        if (n - f < global_best.load()) return;
        s.run(f);
        per_first[f] = std::move(s.best);
        per_nodes[f] = s.nodes;
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t f = 0; f < static_cast<std::ptrdiff_t>(n); ++f) run_one(static_cast<Vertex>(f));
    } else {
        for (Vertex f = 0; f < n; ++f) run_one(f);
    }

    SearchResult out;
    for (Vertex f = 0; f < n; ++f) {
        out.nodes += per_nodes[f];
        if (per_first[f] && (!out.best || per_first[f]->count() > out.best->count())) out.best = per_first[f];
    }
    return out;
}

SearchResult minimum_maximal_free_set(const ConflictTable& t, Execution exec, const SetFilter& accept) {
    const std::size_t n = t.order();
    SearchResult out;
    if (n == 0) {
        out.best = empty_answer(0);
        if (accept && !accept(*out.best)) out.best.reset();
        return out;
    }
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::optional<VertexSet>> per_first(n);
        std::vector<std::uint64_t> per_nodes(n, 0);
        std::vector<char> per_reached(n, 0);
        std::atomic<std::size_t> best_first{n};

        auto run_one = [&](Vertex f) {
            if (f > best_first.load() || n - f < k) return;
            MaximalAtK s{FreeSetWalker(t), k, accept, 0, false, std::nullopt};
            const bool found = s.run(f);
            per_nodes[f] = s.nodes;
            per_reached[f] = s.reached_k ? 1 : 0;
            if (found) {
                per_first[f] = std::move(s.hit);
                std::size_t seen = best_first.load();
                while (f < seen && !best_first.compare_exchange_weak(seen, f)) {
                }
            }
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t f = 0; f < static_cast<std::ptrdiff_t>(n); ++f) run_one(static_cast<Vertex>(f));
        } else {
            for (Vertex f = 0; f < n && best_first.load() == n; ++f) run_one(f);
        }

        bool reached = false;
        for (Vertex f = 0; f < n; ++f) {
            out.nodes += per_nodes[f];
            reached = reached || per_reached[f] != 0;
        }
        for (Vertex f = 0; f < n; ++f)
            if (per_first[f]) {
                out.best = std::move(per_first[f]);
                return out;
            }
        // Free sets are hereditary: no free k-set means none larger either.
        if (!reached) return out;
    }
    return out;
}

SearchResult minimum_covering_superset(std::size_t n, std::span<const VertexSet> intervals, const VertexSet& seed,
                                       Execution exec) {
    assert(intervals.size() == n * n);
    SearchResult out;
    const VertexSet all = VertexSet::full(n);
    const auto seed_members = seed.to_vector();
    VertexSet seed_closure = seed;
    for (std::size_t i = 0; i < seed_members.size(); ++i)
        for (std::size_t j = i + 1; j < seed_members.size(); ++j)
            seed_closure |= intervals[seed_members[i] * n + seed_members[j]];
    out.nodes = 1;
    if (seed_closure == all) {
        out.best = seed;
        return out;
    }
    const VertexSet pool = all - seed;
    const auto pool_members = pool.to_vector();
    const std::size_t p = pool_members.size();

    struct Walk {
        std::size_t n;
        std::span<const VertexSet> intervals;
        const VertexSet& all;
        const std::vector<Vertex>& pool;
        std::size_t extra;
        std::vector<Vertex> members;  // seed followed by chosen pool vertices
        std::vector<VertexSet> closure;
        std::uint64_t nodes = 0;

        bool dfs(std::size_t depth, std::size_t next_pool) {
            ++nodes;
            if (depth == extra) return closure[depth] == all;
            for (std::size_t i = next_pool; i + (extra - depth) <= pool.size(); ++i) {
                const Vertex v = pool[i];
                closure[depth + 1] = closure[depth];
                closure[depth + 1].set(v);
                for (Vertex s : members) closure[depth + 1] |= intervals[s * n + v];
                members.push_back(v);
                if (dfs(depth + 1, i + 1)) return true;
                members.pop_back();
            }
            return false;
        }
    };

    for (std::size_t extra = 1; extra <= p; ++extra) {
        std::vector<std::optional<VertexSet>> per_first(p);
        std::vector<std::uint64_t> per_nodes(p, 0);
        std::atomic<std::size_t> best_first{p};
        auto run_one = [&](std::size_t fi) {
            if (fi > best_first.load() || p - fi < extra) return;
            Walk w{n, intervals, all, pool_members, extra, seed_members, std::vector<VertexSet>(extra + 1, seed_closure)};
            const Vertex v = pool_members[fi];
            w.closure[1] = seed_closure;
            w.closure[1].set(v);
            for (Vertex s : w.members) w.closure[1] |= intervals[s * n + v];
            w.members.push_back(v);
            const bool found = w.dfs(1, fi + 1);
            per_nodes[fi] = w.nodes;
            if (found) {
                per_first[fi] = VertexSet(n, std::span<const Vertex>(w.members));
                std::size_t seen = best_first.load();
                while (fi < seen && !best_first.compare_exchange_weak(seen, fi)) {
                }
            }
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t fi = 0; fi < static_cast<std::ptrdiff_t>(p); ++fi) run_one(static_cast<std::size_t>(fi));
        } else {
            for (std::size_t fi = 0; fi < p && best_first.load() == p; ++fi) run_one(fi);
        }
        for (std::size_t fi = 0; fi < p; ++fi) out.nodes += per_nodes[fi];
        for (std::size_t fi = 0; fi < p; ++fi)
            if (per_first[fi]) {
                out.best = std::move(per_first[fi]);
                return out;
            }
    }
    return out;
}

std::vector<VertexSet> interval_table(const DistanceMatrix& d) {
    const std::size_t n = d.order();
    std::vector<VertexSet> table;
    table.reserve(n * n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) table.push_back(interval(d, u, v));
    return table;
}

ConflictTable ConflictTable::geodesic(const DistanceMatrix& d, Execution exec) {
    const std::size_t n = d.order();
    ConflictTable t(n);
    t.triples_.assign(n * n * t.words_, 0);
    auto fill_row = [&](Vertex u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || !d.reachable(u, v)) continue;
            const Distance uv = d(u, v);
            auto row = t.triple_row_mut(u, v);
            for (Vertex z = 0; z < n; ++z) {
                if (z == u || z == v) continue;
                const Distance uz = d(u, z), zv = d(z, v);
                if (uz == kUnreachable) continue;
                const Distance gap = uz > zv ? uz - zv : zv - uz;
                if (uz + zv == uv || gap == uv) row[z / kWordBits] |= Word{1} << (z % kWordBits);
            }
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4) if (n > 32)
        for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(n); ++u) fill_row(static_cast<Vertex>(u));
    } else {
        for (Vertex u = 0; u < n; ++u) fill_row(u);
    }
    return t;
}

ConflictTable ConflictTable::monophonic(std::size_t n, std::span<const VertexSet> intervals) {
    assert(intervals.size() == n * n);
    ConflictTable t(n);
    t.triples_.assign(n * n * t.words_, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            VertexSet row = intervals[u * n + v];
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (intervals[w * n + v].test(u) || intervals[u * n + w].test(v)) row.set(w);
            }
            row.reset(u);
            row.reset(v);
            std::copy(row.words().begin(), row.words().end(), t.triple_row_mut(u, v).begin());
        }
    return t;
}

ConflictTable ConflictTable::induced_p3(const Graph& g) {
    const std::size_t n = g.order();
    ConflictTable t(n);
    t.triples_.assign(n * n * t.words_, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            VertexSet row(n);
            if (g.adjacent(u, v)) {
                row = (g.neighbours(u) - g.neighbours(v)) | (g.neighbours(v) - g.neighbours(u));
            } else {
                row = g.neighbours(u) & g.neighbours(v);
            }
            row.reset(u);
            row.reset(v);
            std::copy(row.words().begin(), row.words().end(), t.triple_row_mut(u, v).begin());
        }
    return t;
}

ConflictTable ConflictTable::adjacency(const Graph& g) {
    const std::size_t n = g.order();
    ConflictTable t(n);
    t.pairs_.assign(n * t.words_, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto w = g.neighbours(v).words();
        std::copy(w.begin(), w.end(), t.pair_row_mut(v).begin());
    }
    return t;
}

bool ConflictTable::is_free(const VertexSet& s) const {
    const auto m = s.to_vector();
    auto row_has = [](std::span<const Word> row, Vertex x) { return ((row[x / kWordBits] >> (x % kWordBits)) & 1U) != 0; };
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (has_pairs() && row_has(pair_row(m[i]), m[j])) return false;
            if (!has_triples()) continue;
            for (std::size_t l = j + 1; l < m.size(); ++l)
                if (row_has(triple_row(m[i], m[j]), m[l])) return false;
        }
    return true;
}

bool ConflictTable::is_maximal_free(const VertexSet& s) const {
    if (!is_free(s)) return false;
    for (Vertex w = 0; w < n_; ++w) {
        if (s.test(w)) continue;
        VertexSet bigger = s;
        bigger.set(w);
        if (is_free(bigger)) return false;
    }
    return true;
}

}  // namespace gpos
