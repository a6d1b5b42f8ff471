#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "qnet/config.hpp"
#include "qnet/path.hpp"

namespace qnet {

/// Ordered, deduplicated set of configuration columns. Index 0 is always the
/// empty configuration, which keeps every restricted master problem feasible
/// from the start.
class ColumnPool {
public:
    ColumnPool();

    /// Adds a column unless an equal one (by config_key) is present; returns
    /// the column's index either way.
    int add(Configuration config);

    bool contains(const std::string& key) const { return by_key_.count(key) > 0; }
    std::size_t size() const { return columns_.size(); }
    const Configuration& column(int index) const { return columns_.at(index); }
    const std::vector<Configuration>& columns() const { return columns_; }

private:
    std::vector<Configuration> columns_;
    std::unordered_map<std::string, int> by_key_;
};

/// Weighted key rate each realized link gets from a column:
/// (link index, priority * unit path weight), sorted by link index. Throws
/// ValidationError if the column realizes a pair outside `links`.
std::vector<std::pair<int, double>> column_coefficients(const Configuration& config,
                                                        const LinkSet& links);

/// Time fractions over the pool's columns with the guaranteed minimum
/// weighted rate and the per-link rates they induce.
struct Schedule {
    std::vector<double> fractions;      ///< lambda per pool column, >= 0, sums to 1
    double objective = 0.0;             ///< k, the guaranteed minimum weighted rate
    std::vector<double> per_link_rates; ///< b_l per link
};

/// Optimal duals of the restricted master problem: mu per link covering
/// constraint and gamma for the convexity constraint.
struct DualPrices {
    std::vector<double> mu;
    double gamma = 0.0;
};

struct RmpOptions {
    double pivot_tolerance = 1e-9;
    /// Simplex iterations before the anti-cycling rule (Bland) takes over.
    long stall_threshold = 1000;
    /// Hard pivot cap; 0 derives one from the problem size.
    long max_pivots = 0;
};

struct RmpSolution {
    Schedule schedule;
    DualPrices duals;
    long pivots = 0;
};

/// Solves  max k  s.t.  sum_M omega_{M,l} lambda_M >= k  for every link and
/// sum_M lambda_M = 1, lambda >= 0, k free, by primal simplex on the dense
/// tableau, and reads the exact duals off the final tableau. Throws
/// NumericalError if optimality cannot be certified.
RmpSolution solve_rmp(const ColumnPool& pool, const LinkSet& links, const RmpOptions& options = {});

struct RateReport {
    std::vector<double> per_link;
    double minimum = 0.0;
};

/// Recomputes b_l = sum_M lambda_M omega_{M,l} directly from the columns,
/// independently of the solver's tableau.
RateReport evaluate_schedule(const ColumnPool& pool, const Schedule& schedule,
                             const LinkSet& links);

} // namespace qnet
