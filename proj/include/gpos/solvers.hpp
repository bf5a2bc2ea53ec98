#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gpos/graph.hpp"
#include "gpos/metric.hpp"
#include "gpos/position.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

enum class Method { pruned, oracle };

const char* to_string(Method m);

/// One computed invariant. `value` is empty for UNDEFINED (geodetic number
/// of a disconnected graph, or alpha^{omega-} when no maximal independent
/// union of at least two cliques exists).
struct InvariantReport {
    std::string invariant;
    std::optional<std::size_t> value;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::pruned;
};

struct SolverOptions {
    Execution execution = Execution::parallel;
    std::size_t monophonic_cap = kDefaultMonophonicCap;
};

/// Full subset enumeration is only attempted up to this order.
inline constexpr std::size_t kOracleCap = 20;

InvariantReport gp_number(const Graph& g, const SolverOptions& opt = {});
InvariantReport lower_gp_number(const Graph& g, const SolverOptions& opt = {});
InvariantReport geodetic_number(const Graph& g, const SolverOptions& opt = {});
InvariantReport mp_number(const Graph& g, const SolverOptions& opt = {});
InvariantReport lower_mp_number(const Graph& g, const SolverOptions& opt = {});

struct CliqueNumbers {
    InvariantReport largest;   // omega
    InvariantReport smallest;  // omega^-
};

/// Pivoting Bron-Kerbosch over bit-sets; one top-level branch per vertex.
CliqueNumbers clique_numbers(const Graph& g, const SolverOptions& opt = {});

struct CliqueUnionNumbers {
    InvariantReport largest;   // alpha^omega
    InvariantReport smallest;  // alpha^{omega-}
};

CliqueUnionNumbers iuc_numbers(const Graph& g, const SolverOptions& opt = {});

InvariantReport min_independent_dominating_set(const Graph& g, const SolverOptions& opt = {});

/// First pair (u < v) whose line is all of V. Throws InputError when g is
/// disconnected.
std::optional<std::pair<Vertex, Vertex>> universal_line(const Graph& g);
inline bool has_universal_line(const Graph& g) { return universal_line(g).has_value(); }

/// Number of distinct lines over unordered pairs. Throws InputError when g
/// is disconnected.
std::size_t count_distinct_lines(const Graph& g);

struct ChenChvatalCheck {
    std::size_t lines = 0;
    bool universal = false;
    /// lines < n implies a universal line (vacuous below two vertices).
    bool holds = true;
};

ChenChvatalCheck chen_chvatal(const Graph& g);
inline bool check_chen_chvatal(const Graph& g) { return chen_chvatal(g).holds; }

/// Naive oracles: enumerate every subset, test with the position predicates
/// directly (no shared tables), keep the lexicographically least optimum.
/// Throw CapacityError above kOracleCap vertices.
namespace oracle {

InvariantReport gp_number(const Graph& g);
InvariantReport lower_gp_number(const Graph& g);
InvariantReport geodetic_number(const Graph& g);
InvariantReport mp_number(const Graph& g, std::size_t cap = kDefaultMonophonicCap);
InvariantReport lower_mp_number(const Graph& g, std::size_t cap = kDefaultMonophonicCap);
CliqueNumbers clique_numbers(const Graph& g);
CliqueUnionNumbers iuc_numbers(const Graph& g);
InvariantReport min_independent_dominating_set(const Graph& g);

}  // namespace oracle

}  // namespace gpos
