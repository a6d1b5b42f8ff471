#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qnet/config.hpp"
#include "qnet/master_lp.hpp"
#include "qnet/path.hpp"

namespace qnet {

inline constexpr std::size_t kPricingOraclePathCap = 20;

/// One pricing subproblem: pick an edge-disjoint path set, each transmitter
/// and receiver used at most once, maximizing the dual-weighted capacity
/// sum_p omega_p * mu_{l(p)} * y_p. A column improves the master only if its
/// objective exceeds `threshold_gamma`.
struct PricingInstance {
    const PathCatalog* catalog = nullptr;
    std::vector<double> coefficients; ///< per catalog path, >= 0
    double threshold_gamma = 0.0;
};

/// Builds the instance from current duals; a path whose pair carries no link
/// gets coefficient 0 and is never selected.
PricingInstance make_pricing_instance(const PathCatalog& catalog, const LinkSet& links,
                                      const DualPrices& duals);

struct PricingAssignment {
    std::vector<int> selected;    ///< ascending catalog indices with y_p = 1
    double objective_value = 0.0; ///< index-ordered sum of the coefficients
};

struct PricingOptions {
    std::uint64_t node_budget = 10'000'000;
    /// Termination slack: eps = epsilon_scale * max(1, |gamma|).
    double epsilon_scale = 1e-7;
};

struct PricingResult {
    /// The maximizing assignment when its objective exceeds gamma + eps;
    /// empty means a termination certificate (no improving column exists).
    std::optional<PricingAssignment> improving;
    /// Best objective seen. This is the exact maximum whenever an improving
    /// assignment is returned; under a certificate it is only a lower bound,
    /// as subtrees that cannot beat the threshold are pruned.
    double best_objective = 0.0;
    std::uint64_t nodes = 0;
};

/// Depth-first branch and bound over the catalog in canonical order. Exact:
/// the returned assignment maximizes the objective, with ties resolved to
/// the lexicographically smallest selected-index set. Throws
/// ResourceLimitError when the node budget runs out before optimality is
/// proved.
PricingResult solve_pricing(const PricingInstance& instance, const PricingOptions& options = {});

/// Exhaustive reference: enumerates every feasible subset of at most
/// kPricingOraclePathCap paths and returns the maximizer (ties: smallest
/// selected-index set). Throws ResourceLimitError above the cap.
PricingAssignment pricing_oracle(const PricingInstance& instance);

/// Feasibility of an assignment against the three usage families.
bool assignment_feasible(const PathCatalog& catalog, const std::vector<int>& selected);

/// Materializes the selected paths as a Configuration (which re-validates
/// every invariant against the graph).
Configuration assignment_to_configuration(const PricingAssignment& assignment,
                                          const PathCatalog& catalog,
                                          const NetworkGraph& graph);

} // namespace qnet
