#pragma once

#include <cstddef>
#include <vector>

#include "gpos/graph.hpp"
#include "gpos/solvers.hpp"

namespace gpos {

/// Where a vertex of the target graph came from.
enum class ReductionRole { complement_part, clique_part, apex };

const char* to_string(ReductionRole r);

/// Independent Dominating Set instance (G, k) mapped to the Lower General
/// Position instance (G', k + 1) with G' = (complement(G) u K_{n+1}) join K_1.
struct ReductionInstance {
    Graph source;
    std::size_t source_k = 0;
    Graph target;
    std::size_t target_k = 0;
    /// roles[v] for every vertex of `target`: 0..n-1 complement part,
    /// n..2n clique part, 2n+1 apex.
    std::vector<ReductionRole> roles;
};

/// Throws InputError unless 1 <= k <= order(g).
ReductionInstance build_lgp_instance(const Graph& g, std::size_t k);

/// Source orders above this are refused by verify_reduction.
inline constexpr std::size_t kReductionCap = 10;

struct ReductionCheck {
    std::size_t ids = 0;          // minimum independent dominating set of G
    std::size_t lower_gp = 0;     // gp^- of G'
    bool source_yes = false;      // ids <= k
    bool target_yes = false;      // gp^-(G') <= k + 1
    bool agree = false;
    VertexSet target_witness;
};

/// Solves both decision problems exactly. Throws CapacityError above
/// kReductionCap source vertices.
ReductionCheck check_reduction(const Graph& g, std::size_t k, const SolverOptions& opt = {});

inline bool verify_reduction(const Graph& g, std::size_t k, const SolverOptions& opt = {}) {
    return check_reduction(g, k, opt).agree;
}

}  // namespace gpos
