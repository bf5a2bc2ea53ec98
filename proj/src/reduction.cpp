#include "gpos/reduction.hpp"

#include <string>

#include "gpos/errors.hpp"

namespace gpos {

const char* to_string(ReductionRole r) {
    switch (r) {
        case ReductionRole::complement_part: return "complement";
        case ReductionRole::clique_part: return "clique";
        case ReductionRole::apex: return "apex";
    }
    return "?";
}

ReductionInstance build_lgp_instance(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (k < 1 || k > n)
        throw InputError("threshold k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    ReductionInstance out;
    out.source = g;
    out.source_k = k;
    out.target = join(disjoint_union(complement(g), complete_graph(n + 1)), complete_graph(1));
    out.target_k = k + 1;
    out.roles.assign(n, ReductionRole::complement_part);
    out.roles.resize(2 * n + 1, ReductionRole::clique_part);
    out.roles.push_back(ReductionRole::apex);
    return out;
}

ReductionCheck check_reduction(const Graph& g, std::size_t k, const SolverOptions& opt) {
    if (g.order() > kReductionCap)
        throw CapacityError("reduction check limited to " + std::to_string(kReductionCap) + " source vertices");
    const auto inst = build_lgp_instance(g, k);
    ReductionCheck out;
    out.ids = *min_independent_dominating_set(g, opt).value;
    const auto lower = lower_gp_number(inst.target, opt);
    out.lower_gp = *lower.value;
    out.target_witness = lower.witness;
    out.source_yes = out.ids <= k;
    out.target_yes = out.lower_gp <= inst.target_k;
    out.agree = out.source_yes == out.target_yes;
    return out;
}

}  // namespace gpos
