#include "gpos/solvers.hpp"

#include <set>
#include <string>
#include <vector>

#include "gpos/errors.hpp"
#include "gpos/search.hpp"

namespace gpos {

const char* to_string(Method m) { return m == Method::pruned ? "pruned" : "oracle"; }

namespace {

InvariantReport report_from(std::string name, const SearchResult& r, std::size_t n) {
    InvariantReport out;
    out.invariant = std::move(name);
    out.nodes_explored = r.nodes;
    out.method = Method::pruned;
    if (r.best) {
        out.value = r.best->count();
        out.witness = *r.best;
    } else {
        out.witness = VertexSet(n);
    }
    return out;
}

}  // namespace

InvariantReport gp_number(const Graph& g, const SolverOptions& opt) {
    const auto d = all_pairs_distances(g, opt.execution);
    return report_from("gp", maximum_free_set(ConflictTable::geodesic(d, opt.execution), opt.execution), g.order());
}

InvariantReport lower_gp_number(const Graph& g, const SolverOptions& opt) {
    const auto d = all_pairs_distances(g, opt.execution);
    return report_from("gp-", minimum_maximal_free_set(ConflictTable::geodesic(d, opt.execution), opt.execution),
                       g.order());
}

InvariantReport geodetic_number(const Graph& g, const SolverOptions& opt) {
    const std::size_t n = g.order();
    const auto d = all_pairs_distances(g, opt.execution);
    if (!d.connected()) {
        InvariantReport out;
        out.invariant = "geodetic";
        out.witness = VertexSet(n);
        return out;
    }
    const auto table = interval_table(d);
    return report_from("geodetic", minimum_covering_superset(n, table, simplicial_vertices(g), opt.execution), n);
}

InvariantReport mp_number(const Graph& g, const SolverOptions& opt) {
    const auto table = monophonic_intervals(g, opt.monophonic_cap);
    return report_from("mp", maximum_free_set(ConflictTable::monophonic(g.order(), table), opt.execution), g.order());
}

InvariantReport lower_mp_number(const Graph& g, const SolverOptions& opt) {
    const auto table = monophonic_intervals(g, opt.monophonic_cap);
    return report_from("mp-", minimum_maximal_free_set(ConflictTable::monophonic(g.order(), table), opt.execution),
                       g.order());
}

namespace {

struct CliqueExtremes {
    std::optional<VertexSet> largest;
    std::optional<VertexSet> smallest;
    std::uint64_t nodes = 0;

    void offer(const VertexSet& c) {
        const std::size_t k = c.count();
        if (!largest || k > largest->count() || (k == largest->count() && lex_less(c, *largest))) largest = c;
        if (!smallest || k < smallest->count() || (k == smallest->count() && lex_less(c, *smallest))) smallest = c;
    }
};

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, CliqueExtremes& acc) {
    ++acc.nodes;
    if (p.empty() && x.empty()) {
        acc.offer(r);
        return;
    }
    Vertex pivot = g.order();
    std::size_t best = 0;
    (p | x).for_each([&](Vertex u) {
        const std::size_t c = (p & g.neighbours(u)).count();
        if (pivot == g.order() || c > best) {
            pivot = u;
            best = c;
        }
    });
    (p - g.neighbours(pivot)).for_each([&](Vertex v) {
        r.set(v);
        bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), acc);
        r.reset(v);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

CliqueNumbers clique_numbers(const Graph& g, const SolverOptions& opt) {
    const std::size_t n = g.order();
    std::vector<CliqueExtremes> per_vertex(n);
    auto run_one = [&](Vertex v) {
        VertexSet r(n), above(n), below(n);
        r.set(v);
        for (Vertex u = 0; u < n; ++u) (u < v ? below : above).set(u);
        above.reset(v);
        bron_kerbosch(g, r, g.neighbours(v) & above, g.neighbours(v) & below, per_vertex[v]);
    };
    if (opt.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(n); ++v) run_one(static_cast<Vertex>(v));
    } else {
        for (Vertex v = 0; v < n; ++v) run_one(v);
    }
    CliqueExtremes all;
    for (auto& pv : per_vertex) {
        all.nodes += pv.nodes;
        if (pv.largest) all.offer(*pv.largest);
        if (pv.smallest) all.offer(*pv.smallest);
    }
    CliqueNumbers out;
    out.largest = report_from("omega", SearchResult{all.largest ? all.largest : VertexSet(n), all.nodes}, n);
    out.smallest = report_from("omega-", SearchResult{all.smallest ? all.smallest : VertexSet(n), all.nodes}, n);
    return out;
}

CliqueUnionNumbers iuc_numbers(const Graph& g, const SolverOptions& opt) {
    const auto table = ConflictTable::induced_p3(g);
    CliqueUnionNumbers out;
    out.largest = report_from("alpha-omega", maximum_free_set(table, opt.execution), g.order());
    const SetFilter several_cliques = [&g](const VertexSet& s) { return !g.is_clique(s); };
    out.smallest = report_from("alpha-omega-", minimum_maximal_free_set(table, opt.execution, several_cliques),
                               g.order());
    return out;
}

InvariantReport min_independent_dominating_set(const Graph& g, const SolverOptions& opt) {
    return report_from("ids", minimum_maximal_free_set(ConflictTable::adjacency(g), opt.execution), g.order());
}

namespace {

DistanceMatrix connected_metric(const Graph& g, const char* what) {
    auto d = all_pairs_distances(g, Execution::serial);
    if (!d.connected()) throw InputError(std::string(what) + " requires a connected graph");
    return d;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> universal_line(const Graph& g) {
    const auto d = connected_metric(g, "universal-line detection");
    const VertexSet all = VertexSet::full(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (line_of(d, u, v) == all) return std::pair{u, v};
    return std::nullopt;
}

std::size_t count_distinct_lines(const Graph& g) {
    const auto d = connected_metric(g, "line counting");
    std::set<std::vector<Word>> lines;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const auto line = line_of(d, u, v);
            lines.emplace(line.words().begin(), line.words().end());
        }
    return lines.size();
}

ChenChvatalCheck chen_chvatal(const Graph& g) {
    ChenChvatalCheck out;
    out.lines = count_distinct_lines(g);
    out.universal = has_universal_line(g);
    // The conjecture concerns spaces with at least two points; K_1 has no
    // lines at all.
    out.holds = g.order() < 2 || out.lines >= g.order() || out.universal;
    return out;
}

// ---------------------------------------------------------------------------
// Oracles

namespace oracle {

namespace {

using Mask = std::uint64_t;

void check_cap(const Graph& g) {
    if (g.order() > kOracleCap)
        throw CapacityError("oracle enumeration on " + std::to_string(g.order()) + " vertices exceeds " +
                            std::to_string(kOracleCap));
}

VertexSet to_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((m >> v) & 1U) s.set(v);
    return s;
}

/// Same-size masks: the lexicographically smaller sorted list owns the lowest
/// differing bit.
bool mask_lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

enum class Goal { largest, smallest };

/// Best mask under (size, lex) satisfying `pred`, scanning all 2^n subsets.
template <typename Pred>
InvariantReport scan(const Graph& g, std::string name, Goal goal, Pred&& pred) {
    check_cap(g);
    const std::size_t n = g.order();
    std::optional<Mask> best;
    std::uint64_t nodes = 0;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        ++nodes;
        const int k = std::popcount(m);
        if (best) {
            const int bk = std::popcount(*best);
            if (goal == Goal::largest ? k < bk : k > bk) continue;
            if (k == bk && !mask_lex_less(m, *best)) continue;
        }
        if (pred(m, to_set(n, m))) best = m;
    }
    InvariantReport out;
    out.invariant = std::move(name);
    out.method = Method::oracle;
    out.nodes_explored = nodes;
    out.witness = best ? to_set(n, *best) : VertexSet(n);
    if (best) out.value = static_cast<std::size_t>(std::popcount(*best));
    return out;
}

/// Maximal with respect to `member` by trying every single-vertex extension.
template <typename Member>
bool maximal(std::size_t n, const VertexSet& s, Member&& member) {
    if (!member(s)) return false;
    for (Vertex w = 0; w < n; ++w) {
        if (s.test(w)) continue;
        VertexSet bigger = s;
        bigger.set(w);
        if (member(bigger)) return false;
    }
    return true;
}

}  // namespace

InvariantReport gp_number(const Graph& g) {
    const auto d = all_pairs_distances(g, Execution::serial);
    return scan(g, "gp", Goal::largest, [&](Mask, const VertexSet& s) { return is_general_position(d, s); });
}

InvariantReport lower_gp_number(const Graph& g) {
    const auto d = all_pairs_distances(g, Execution::serial);
    auto member = [&](const VertexSet& s) { return is_general_position(d, s); };
    return scan(g, "gp-", Goal::smallest, [&](Mask, const VertexSet& s) { return maximal(g.order(), s, member); });
}

InvariantReport geodetic_number(const Graph& g) {
    check_cap(g);
    const auto d = all_pairs_distances(g, Execution::serial);
    if (!d.connected()) {
        InvariantReport out;
        out.invariant = "geodetic";
        out.method = Method::oracle;
        out.witness = VertexSet(g.order());
        return out;
    }
    return scan(g, "geodetic", Goal::smallest, [&](Mask, const VertexSet& s) { return is_geodetic(d, s); });
}

InvariantReport mp_number(const Graph& g, std::size_t cap) {
    return scan(g, "mp", Goal::largest, [&](Mask, const VertexSet& s) { return is_monophonic_position(g, s, cap); });
}

InvariantReport lower_mp_number(const Graph& g, std::size_t cap) {
    auto member = [&](const VertexSet& s) { return is_monophonic_position(g, s, cap); };
    return scan(g, "mp-", Goal::smallest, [&](Mask, const VertexSet& s) { return maximal(g.order(), s, member); });
}

CliqueNumbers clique_numbers(const Graph& g) {
    auto member = [&](const VertexSet& s) { return g.is_clique(s); };
    auto maximal_clique = [&](Mask, const VertexSet& s) { return maximal(g.order(), s, member); };
    CliqueNumbers out;
    out.largest = scan(g, "omega", Goal::largest, maximal_clique);
    out.smallest = scan(g, "omega-", Goal::smallest, maximal_clique);
    return out;
}

CliqueUnionNumbers iuc_numbers(const Graph& g) {
    auto member = [&](const VertexSet& s) { return is_independent_union_of_cliques(g, s); };
    CliqueUnionNumbers out;
    out.largest = scan(g, "alpha-omega", Goal::largest, [&](Mask, const VertexSet& s) { return member(s); });
    out.smallest = scan(g, "alpha-omega-", Goal::smallest, [&](Mask, const VertexSet& s) {
        return independent_union_of_cliques(g, s).components >= 2 && maximal(g.order(), s, member);
    });
    return out;
}

InvariantReport min_independent_dominating_set(const Graph& g) {
    return scan(g, "ids", Goal::smallest, [&](Mask, const VertexSet& s) {
        if (!g.is_independent(s)) return false;
        VertexSet covered = s;
        s.for_each([&](Vertex v) { covered |= g.neighbours(v); });
        return covered == VertexSet::full(g.order());
    });
}

}  // namespace oracle

}  // namespace gpos
