#include "gpos/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/io.hpp"
#include "gpos/position.hpp"
#include "gpos/reduction.hpp"
#include "gpos/solvers.hpp"

namespace gpos {

const char* to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::pass: return "pass";
        case RecordStatus::fail: return "fail";
        case RecordStatus::investigate: return "investigate";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Records = std::vector<VerificationRecord>;
using Task = std::function<Records()>;
using Value = std::optional<std::size_t>;

std::int64_t p(std::size_t v) { return static_cast<std::int64_t>(v); }

VerificationRecord make(std::string_view theorem, std::string quantity, std::vector<std::int64_t> params,
                        Value expected, Value computed, std::string detail = {}) {
    VerificationRecord r;
    r.theorem = std::string(theorem);
    r.quantity = std::move(quantity);
    r.params = std::move(params);
    r.expected = expected;
    r.computed = computed;
    r.pass = expected == computed;
    r.status = r.pass ? RecordStatus::pass : RecordStatus::fail;
    r.detail = std::move(detail);
    return r;
}

/// Runs tasks (in parallel when asked), times each, and concatenates the
/// results in task order. The first exception thrown by any task is
/// rethrown after the loop.
Records run_tasks(const std::vector<Task>& tasks, bool fan_out) {
    std::vector<Records> out(tasks.size());
    std::exception_ptr error;
    const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (fan_out)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            const auto start = Clock::now();
            out[i] = tasks[i]();
            const std::chrono::duration<double> took = Clock::now() - start;
            for (auto& r : out[i]) r.runtime = took / static_cast<double>(out[i].size());
        } catch (...) {
#pragma omp critical(gpos_verify_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    Records all;
    for (auto& chunk : out) std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
    return all;
}

struct Context {
    std::string_view theorem;
    SweepOptions sweep;
    SolverOptions solver;
    bool fan_out = true;

    std::size_t limit(std::size_t fallback) const { return sweep.max_n.value_or(fallback); }
};

/// Connected graphs on 1..n vertices, one per isomorphism class, with the
/// order recorded alongside.
std::vector<Graph> connected_corpus(std::size_t lo, std::size_t hi) {
    std::vector<Graph> out;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto level = all_graphs(n, true);
        std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    return out;
}

// --- individual theorems --------------------------------------------------

Records cycles(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t n = 3; n <= cx.limit(15); ++n)
        tasks.push_back([&cx, n] {
            const Family f = cycle(n);
            return Records{make(cx.theorem, "gp-", {p(n)}, f.spec.expected_value("gp-"),
                                lower_gp_number(f.graph, cx.solver).value)};
        });
    return run_tasks(tasks, cx.fan_out);
}

Records multipartite(const Context& cx) {
    const std::size_t max_part = cx.limit(4);
    std::vector<std::vector<std::size_t>> shapes;
    for (std::size_t t = 2; t <= 4; ++t) {
        std::vector<std::size_t> parts(t, 2);
        while (true) {
            shapes.push_back(parts);
            // Next non-decreasing vector over 2..max_part.
            std::size_t i = t;
            while (i > 0 && parts[i - 1] == max_part) --i;
            if (i == 0) break;
            const std::size_t v = parts[i - 1] + 1;
            std::fill(parts.begin() + static_cast<std::ptrdiff_t>(i - 1), parts.end(), v);
        }
    }
    std::vector<Task> tasks;
    for (const auto& parts : shapes)
        tasks.push_back([&cx, parts] {
            const Family f = complete_multipartite(parts);
            std::vector<std::int64_t> params;
            for (auto s : parts) params.push_back(p(s));
            return Records{make(cx.theorem, "gp-", params, f.spec.expected_value("gp-"),
                                lower_gp_number(f.graph, cx.solver).value)};
        });
    return run_tasks(tasks, cx.fan_out);
}

Records join_formula(const Context& cx) {
    const std::size_t max_order = cx.limit(6);
    constexpr std::size_t kPairs = 200;
    std::mt19937_64 rng(cx.sweep.seed);
    std::uniform_int_distribution<std::size_t> order(1, max_order);
    std::vector<std::pair<Graph, Graph>> pairs;
    for (std::size_t i = 0; i < kPairs; ++i) {
        Graph g = random_graph(order(rng), 0.5, rng);
        Graph h = random_graph(order(rng), 0.5, rng);
        pairs.emplace_back(std::move(g), std::move(h));
    }
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < kPairs; ++i)
        tasks.push_back([&cx, &pairs, i] {
            const auto& [g, h] = pairs[i];
            const auto infinite = std::numeric_limits<std::size_t>::max();
            auto or_inf = [&](const Value& v) { return v.value_or(infinite); };
            const std::size_t formula =
                std::min({*clique_numbers(g, cx.solver).smallest.value + *clique_numbers(h, cx.solver).smallest.value,
                          or_inf(iuc_numbers(g, cx.solver).smallest.value),
                          or_inf(iuc_numbers(h, cx.solver).smallest.value)});
            return Records{make(cx.theorem, "gp-", {p(i), p(g.order()), p(h.order())}, formula,
                                lower_gp_number(join(g, h), cx.solver).value,
                                emit_graph6(g) + " " + emit_graph6(h))};
        });
    return run_tasks(tasks, cx.fan_out);
}

Records gp_geodetic(const Context& cx) {
    const std::size_t hi = cx.limit(6);
    std::vector<Task> tasks;
    std::vector<std::pair<std::size_t, std::size_t>> infeasible;
    for (std::size_t a = 2; a <= hi; ++a)
        for (std::size_t b = 2; b <= hi; ++b) {
            if (b < a && b <= 3) {
                infeasible.emplace_back(a, b);
                continue;
            }
            tasks.push_back([&cx, a, b] {
                const Family f = realisation_gp_geodetic(a, b);
                return Records{make(cx.theorem, "gp-", {p(a), p(b)}, a, lower_gp_number(f.graph, cx.solver).value),
                               make(cx.theorem, "geodetic", {p(a), p(b)}, b,
                                    geodetic_number(f.graph, cx.solver).value)};
            });
        }
    Records out = run_tasks(tasks, cx.fan_out);

    // No small connected graph realises an infeasible pair.
    const auto corpus = connected_corpus(1, 7);
    std::vector<std::pair<std::size_t, std::size_t>> values(corpus.size());
    std::vector<Task> solve;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        solve.push_back([&, i] {
            values[i] = {*lower_gp_number(corpus[i], cx.solver).value, *geodetic_number(corpus[i], cx.solver).value};
            return Records{};
        });
    const auto start = Clock::now();
    run_tasks(solve, cx.fan_out);
    const std::chrono::duration<double> took = Clock::now() - start;
    for (auto [a, b] : infeasible) {
        std::size_t hits = 0;
        std::string first;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (values[i] == std::pair{a, b} && hits++ == 0) first = emit_graph6(corpus[i]);
        auto r = make(cx.theorem, "realisers-on-<=7-vertices", {p(a), p(b)}, 0, hits, first);
        r.runtime = took / static_cast<double>(infeasible.size());
        out.push_back(std::move(r));
    }
    return out;
}

Records gp_gp(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t a = 2; a <= cx.limit(6); ++a)
        for (std::size_t b = a + 1; b <= cx.limit(6); ++b)
            tasks.push_back([&cx, a, b] {
                const Family f = realisation_gp_lower_gp(a, b);
                return Records{make(cx.theorem, "gp-", {p(a), p(b)}, a, lower_gp_number(f.graph, cx.solver).value),
                               make(cx.theorem, "gp", {p(a), p(b)}, b, gp_number(f.graph, cx.solver).value),
                               make(cx.theorem, "order", {p(a), p(b)}, closed_form::lower_gp_gp_order(a, b),
                                    f.graph.order())};
            });
    return run_tasks(tasks, cx.fan_out);
}

Records size_bound(const Context& cx) {
    const std::size_t hi = cx.limit(7);
    const auto corpus = connected_corpus(2, hi);
    std::vector<std::size_t> lower(corpus.size());
    std::vector<Task> solve;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        solve.push_back([&, i] {
            lower[i] = *lower_gp_number(corpus[i], cx.solver).value;
            return Records{};
        });
    const auto start = Clock::now();
    run_tasks(solve, cx.fan_out);
    const std::chrono::duration<double> took = Clock::now() - start;

    Records out;
    for (std::size_t n = 2; n <= hi; ++n)
        for (std::size_t k = 2; 2 * k - 1 <= n; ++k) {
            const std::size_t bound = n * (n - 1) / 2 - k + 1;
            const auto extremal = signature(size_extremal(n, k).graph);
            Value largest;
            std::size_t impostors = 0;
            std::string impostor;
            for (std::size_t i = 0; i < corpus.size(); ++i) {
                if (corpus[i].order() != n || lower[i] != k) continue;
                const std::size_t m = corpus[i].size();
                largest = std::max(largest.value_or(0), m);
                if (m == bound && signature(corpus[i]) != extremal && impostors++ == 0)
                    impostor = emit_graph6(corpus[i]);
            }
            out.push_back(make(cx.theorem, "max-size", {p(n), p(k)}, bound, largest));
            out.push_back(make(cx.theorem, "non-extremal-equality", {p(n), p(k)}, 0, impostors, impostor));
        }
    for (auto& r : out) r.runtime = took / static_cast<double>(out.size());
    return out;
}

Records kneser(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t n = 3; n <= cx.limit(14); ++n)
        tasks.push_back([&cx, n] {
            const Family f = kneser_2(n);
            return Records{make(cx.theorem, "gp-", {p(n)}, f.spec.expected_value("gp-"),
                                lower_gp_number(f.graph, cx.solver).value)};
        });
    return run_tasks(tasks, cx.fan_out);
}

Records line_graph_complete(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t n = 2; n <= cx.limit(10); ++n)
        tasks.push_back([&cx, n] {
            const Family f = line_complete(n);
            return Records{make(cx.theorem, "gp-", {p(n)}, f.spec.expected_value("gp-"),
                                lower_gp_number(f.graph, cx.solver).value)};
        });
    return run_tasks(tasks, cx.fan_out);
}

Records rook_graphs(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t r = 2; r <= cx.limit(6); ++r)
        for (std::size_t s = 2; s <= cx.limit(6); ++s)
            tasks.push_back([&cx, r, s] {
                const Family f = rook(r, s);
                return Records{make(cx.theorem, "gp-", {p(r), p(s)}, closed_form::lower_gp_rook(r, s),
                                    lower_gp_number(f.graph, cx.solver).value),
                               make(cx.theorem, "gp", {p(r), p(s)}, closed_form::gp_rook(r, s),
                                    gp_number(f.graph, cx.solver).value)};
            });
    return run_tasks(tasks, cx.fan_out);
}

Records direct_products(const Context& cx) {
    std::vector<Task> tasks;
    for (std::size_t r = 2; r <= cx.limit(6); ++r)
        for (std::size_t s = r; s <= cx.limit(6); ++s) {
            if (r == 2 && s == 2) continue;
            tasks.push_back([&cx, r, s] {
                const Family f = direct_complete(r, s);
                return Records{make(cx.theorem, "gp-", {p(r), p(s)}, closed_form::lower_gp_direct(r, s),
                                    lower_gp_number(f.graph, cx.solver).value)};
            });
        }
    return run_tasks(tasks, cx.fan_out);
}

Records mp_gp(const Context& cx) {
    std::vector<Task> tasks;
    auto both = [&cx](const Family& f, std::vector<std::int64_t> params, std::size_t mp, std::size_t gp) {
        return Records{make(cx.theorem, "mp-", params, mp, lower_mp_number(f.graph, cx.solver).value),
                       make(cx.theorem, "gp-", params, gp, lower_gp_number(f.graph, cx.solver).value)};
    };
    const std::size_t hex_hi = cx.limit(5);
    for (std::size_t a = 2; a <= hex_hi; ++a)
        for (std::size_t b = a + 1; b <= hex_hi; ++b)
            tasks.push_back([=] { return both(hexagon_blowup(a, b), {0, p(a), p(b)}, a, b); });
    const std::size_t z_hi = cx.sweep.max_n ? *cx.sweep.max_n + 1 : 6;
    for (std::size_t a = 4; a <= z_hi; ++a)
        for (std::size_t b = 3; b < a; ++b)
            tasks.push_back([=] { return both(z_graph(a - 2, a - b + 1, b - 2), {1, p(a), p(b)}, a, b); });
    tasks.push_back([&cx, both] {
        const Family f = petersen();
        auto out = both(f, {2}, 2, 4);
        out.push_back(make(cx.theorem, "gp", {2}, 6, gp_number(f.graph, cx.solver).value));
        return out;
    });
    return run_tasks(tasks, cx.fan_out);
}

Records universal_line_equivalence(const Context& cx) {
    const std::size_t hi = cx.limit(7);
    Records out;
    for (std::size_t n = 2; n <= hi; ++n) {
        const auto corpus = all_graphs(n, true);
        std::vector<char> bad(corpus.size(), 0);
        std::vector<Task> tasks;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            tasks.push_back([&, i] {
                const bool two = lower_gp_number(corpus[i], cx.solver).value == 2U;
                bad[i] = two != has_universal_line(corpus[i]);
                return Records{};
            });
        const auto start = Clock::now();
        run_tasks(tasks, cx.fan_out);
        std::size_t mismatches = 0;
        std::string first;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (bad[i] && mismatches++ == 0) first = emit_graph6(corpus[i]);
        auto r = make(cx.theorem, "mismatches", {p(n), p(corpus.size())}, 0, mismatches, first);
        r.runtime = Clock::now() - start;
        out.push_back(std::move(r));
    }
    return out;
}

bool has_adjacent_maximal_pair(const Graph& g) {
    const auto d = all_pairs_distances(g, Execution::serial);
    for (auto [u, v] : g.edges())
        if (is_maximal_general_position(d, VertexSet(g.order(), {u, v}))) return true;
    return false;
}

Records cartesian_universal_line(const Context& cx) {
    const auto corpus = connected_corpus(2, cx.limit(4));
    std::vector<char> adjacent_pair(corpus.size());
    std::vector<char> geodetic_two(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        adjacent_pair[i] = has_adjacent_maximal_pair(corpus[i]);
        geodetic_two[i] = geodetic_number(corpus[i], cx.solver).value == 2U;
    }
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j)
            tasks.push_back([&, i, j] {
                const bool condition = adjacent_pair[i] || adjacent_pair[j] || (geodetic_two[i] && geodetic_two[j]);
                const bool two =
                    lower_gp_number(cartesian_product(corpus[i], corpus[j]), cx.solver).value == 2U;
                return Records{make(cx.theorem, "gp-=2", {p(i), p(j)}, condition ? 1 : 0, two ? 1 : 0,
                                    emit_graph6(corpus[i]) + " " + emit_graph6(corpus[j]))};
            });
    return run_tasks(tasks, cx.fan_out);
}

Records chen_chvatal_sweep(const Context& cx) {
    Records out;
    for (std::size_t n = 1; n <= cx.limit(7); ++n) {
        const auto start = Clock::now();
        const auto corpus = all_graphs(n, true);
        std::size_t counterexamples = 0, premise = 0;
        std::string first;
        for (const auto& g : corpus) {
            const auto c = chen_chvatal(g);
            premise += c.lines < n;
            if (!c.holds && counterexamples++ == 0) first = emit_graph6(g);
        }
        auto r = make(cx.theorem, "counterexamples", {p(n), p(corpus.size())}, 0, counterexamples,
                      first.empty() ? std::to_string(premise) + " graphs with fewer lines than vertices" : first);
        if (!r.pass) r.status = RecordStatus::investigate;
        r.runtime = Clock::now() - start;
        out.push_back(std::move(r));
    }
    return out;
}

Records reduction_one(const Context& cx, const Graph& g, std::vector<std::int64_t> params) {
    const std::size_t n = g.order();
    std::size_t agreeing = 0;
    ReductionCheck first;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto check = check_reduction(g, k, cx.solver);
        agreeing += check.agree;
        if (k == 1) first = check;
    }
    const auto omega_minus = *clique_numbers(complement(g), cx.solver).smallest.value;
    const auto g6 = emit_graph6(g);
    return Records{make(cx.theorem, "agreeing-thresholds", params, n, agreeing, g6),
                   make(cx.theorem, "target-gp-", std::move(params), omega_minus + 1, first.lower_gp, g6)};
}

Records reduction_equivalence(const Context& cx) {
    std::vector<Task> tasks;
    for (const auto& g : connected_corpus(1, cx.limit(5)))
        tasks.push_back([&cx, g] { return reduction_one(cx, g, {0, p(g.order())}); });
    std::mt19937_64 rng(cx.sweep.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> order(6, 8);
    for (std::size_t i = 0; i < 100; ++i) {
        Graph g = random_graph(order(rng), 0.5, rng);
        tasks.push_back([&cx, g, i] { return reduction_one(cx, g, {1, p(g.order()), p(i)}); });
    }
    return run_tasks(tasks, cx.fan_out);
}

Records oracle_equivalence(const Context& cx) {
    const std::size_t hi = cx.limit(6);
    const std::size_t cap = cx.solver.monophonic_cap;
    using Pair = std::pair<std::string, std::function<std::pair<Value, Value>(const Graph&)>>;
    const std::vector<Pair> solvers{
        {"gp", [&](const Graph& g) { return std::pair{gp_number(g, cx.solver).value, oracle::gp_number(g).value}; }},
        {"gp-",
         [&](const Graph& g) {
             return std::pair{lower_gp_number(g, cx.solver).value, oracle::lower_gp_number(g).value};
         }},
        {"geodetic",
         [&](const Graph& g) {
             return std::pair{geodetic_number(g, cx.solver).value, oracle::geodetic_number(g).value};
         }},
        {"mp",
         [&](const Graph& g) { return std::pair{mp_number(g, cx.solver).value, oracle::mp_number(g, cap).value}; }},
        {"mp-",
         [&](const Graph& g) {
             return std::pair{lower_mp_number(g, cx.solver).value, oracle::lower_mp_number(g, cap).value};
         }},
        {"omega",
         [&](const Graph& g) {
             return std::pair{clique_numbers(g, cx.solver).largest.value, oracle::clique_numbers(g).largest.value};
         }},
        {"omega-",
         [&](const Graph& g) {
             return std::pair{clique_numbers(g, cx.solver).smallest.value, oracle::clique_numbers(g).smallest.value};
         }},
        {"alpha-omega",
         [&](const Graph& g) {
             return std::pair{iuc_numbers(g, cx.solver).largest.value, oracle::iuc_numbers(g).largest.value};
         }},
        {"alpha-omega-",
         [&](const Graph& g) {
             return std::pair{iuc_numbers(g, cx.solver).smallest.value, oracle::iuc_numbers(g).smallest.value};
         }},
        {"ids",
         [&](const Graph& g) {
             return std::pair{min_independent_dominating_set(g, cx.solver).value,
                              oracle::min_independent_dominating_set(g).value};
         }},
    };
    Records out;
    for (std::size_t n = 1; n <= hi; ++n) {
        const auto corpus = all_graphs(n, true);
        for (const auto& [name, solve] : solvers) {
            const auto start = Clock::now();
            std::vector<char> bad(corpus.size(), 0);
            std::vector<Task> tasks;
            for (std::size_t i = 0; i < corpus.size(); ++i)
                tasks.push_back([&, i] {
                    const auto [pruned, naive] = solve(corpus[i]);
                    bad[i] = pruned != naive;
                    return Records{};
                });
            run_tasks(tasks, cx.fan_out);
            std::size_t mismatches = 0;
            std::string first;
            for (std::size_t i = 0; i < corpus.size(); ++i)
                if (bad[i] && mismatches++ == 0) first = emit_graph6(corpus[i]);
            auto r = make(cx.theorem, name + " mismatches", {p(n), p(corpus.size())}, 0, mismatches, first);
            r.runtime = Clock::now() - start;
            out.push_back(std::move(r));
        }
    }
    return out;
}

struct Theorem {
    const char* name;
    Records (*run)(const Context&);
    /// Sweeps over a few large instances parallelise inside the solver
    /// instead of across records.
    bool fan_out;
    const char* range;
};

const std::vector<Theorem>& registry() {
    static const std::vector<Theorem> table{
        {"cycles", cycles, true, "C_n, 3 <= n <= 15"},
        {"multipartite", multipartite, true, "t in {2,3,4}, part sizes 2..4 (max-n: largest part)"},
        {"join-formula", join_formula, true, "200 random pairs, orders 1..6"},
        {"gp-geodetic-realisation", gp_geodetic, true, "2 <= a,b <= 6; infeasible pairs vs connected graphs <= 7"},
        {"gp-gp-realisation", gp_gp, true, "2 <= a < b <= 6"},
        {"size-bound", size_bound, true, "connected graphs on <= 7 vertices"},
        {"kneser", kneser, false, "K(n,2), 3 <= n <= 14"},
        {"line-graph-complete", line_graph_complete, false, "L(K_n), 2 <= n <= 10"},
        {"rook", rook_graphs, false, "K_r box K_s, 2 <= r,s <= 6"},
        {"direct-product", direct_products, false, "K_r x K_s, 2 <= r <= s <= 6, (r,s) != (2,2)"},
        {"mp-gp-realisation", mp_gp, true, "hexagon 2 <= a < b <= 5; Z for 3 <= b < a <= 6; Petersen"},
        {"universal-line-equivalence", universal_line_equivalence, true, "connected graphs on <= 7 vertices"},
        {"cartesian-universal-line", cartesian_universal_line, true, "connected G, H on 2..4 vertices"},
        {"chen-chvatal-sweep", chen_chvatal_sweep, false, "connected graphs on <= 7 vertices"},
        {"reduction-equivalence", reduction_equivalence, true,
         "connected graphs on <= 5 vertices, all k; 100 random graphs on 6..8 vertices"},
        {"oracle-equivalence", oracle_equivalence, true, "connected graphs on <= 6 vertices"},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& t : registry()) out.emplace_back(t.name);
        return out;
    }();
    return names;
}

std::string theorem_ranges() {
    std::string out;
    for (const auto& t : registry()) out += std::string("  ") + t.name + ": " + t.range + "\n";
    return out;
}

std::vector<VerificationRecord> run_theorem(std::string_view name, const SweepOptions& opt) {
    for (const auto& t : registry()) {
        if (name != t.name) continue;
        Context cx;
        cx.theorem = t.name;
        cx.sweep = opt;
        cx.solver.monophonic_cap = opt.monophonic_cap;
        cx.fan_out = t.fan_out && opt.execution == Execution::parallel;
        // Record-level parallelism already saturates the machine.
        cx.solver.execution = cx.fan_out ? Execution::serial : opt.execution;
        return t.run(cx);
    }
    throw InputError("unknown theorem '" + std::string(name) + "'");
}

nlohmann::json to_json(const VerificationRecord& r) {
    auto value = [](const Value& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["quantity"] = r.quantity;
    j["params"] = r.params;
    j["expected"] = value(r.expected);
    j["computed"] = value(r.computed);
    j["pass"] = r.pass;
    j["status"] = to_string(r.status);
    j["runtime_ms"] = r.runtime.count() * 1000.0;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace gpos
