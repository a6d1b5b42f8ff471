#include "qnet/master_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnet/errors.hpp"

namespace qnet {

ColumnPool::ColumnPool() {
    add(Configuration{});
}

int ColumnPool::add(Configuration config) {
    std::string key = config_key(config);
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    const int index = static_cast<int>(columns_.size());
    by_key_.emplace(std::move(key), index);
    columns_.push_back(std::move(config));
    return index;
}

std::vector<std::pair<int, double>> column_coefficients(const Configuration& config,
                                                        const LinkSet& links) {
    std::vector<std::pair<int, double>> coefficients;
    coefficients.reserve(config.path_count());
    for (const auto& path : config.paths()) {
        const int l = links.index_of(path.transmitter(), path.receiver());
        if (l < 0) {
            throw ValidationError("column realizes a pair that is not a link");
        }
        coefficients.emplace_back(l, links.link(l).priority_weight * path.unit_weight);
    }
    std::sort(coefficients.begin(), coefficients.end());
    return coefficients;
}

namespace {

// Dense primal simplex over the equality form
//
//   row l (covering):   sum_M omega_{M,l} lambda_M - u + v - s_l = 0
//   row L (convexity):  sum_M lambda_M                     [+ g] = 1
//
// with k = u - v split into nonnegative halves. Column layout is
// [lambda_0..lambda_{n-1}, u, v, s_0..s_{L-1}, g]; g is a ghost column
// carrying B^{-1} e_conv so the convexity dual can be read at the end, and
// never enters the basis. The initial basis {s_0..s_{L-1}, lambda_0} is
// feasible because column 0 is the empty configuration (all omega = 0).
class RmpSimplex {
public:
    RmpSimplex(const ColumnPool& pool, const LinkSet& links, const RmpOptions& options)
        : options_(options), n_cols_(static_cast<int>(pool.size())),
          n_links_(static_cast<int>(links.size())), rows_(n_links_ + 1),
          cols_(n_cols_ + 2 + n_links_ + 1), tableau_(rows_, std::vector<double>(cols_, 0.0)),
          rhs_(rows_, 0.0), cost_(cols_, 0.0), basis_(rows_, -1) {
        for (int j = 0; j < n_cols_; ++j) {
            for (auto [l, omega] : column_coefficients(pool.column(j), links)) {
                tableau_[l][j] = omega;
            }
            tableau_[n_links_][j] = 1.0;
        }
        const int u = col_u();
        const int v = col_v();
        for (int l = 0; l < n_links_; ++l) {
            tableau_[l][u] = -1.0;
            tableau_[l][v] = 1.0;
            tableau_[l][col_s(l)] = -1.0;
        }
        tableau_[n_links_][col_ghost()] = 1.0;
        rhs_[n_links_] = 1.0;
        cost_[u] = 1.0;
        cost_[v] = -1.0;

        // Initial basis: surplus on every covering row, the empty column on
        // the convexity row. B = [[-I, 0], [0, 1]] is its own inverse, so
        // negate the covering rows to hold B^{-1} A.
        for (int l = 0; l < n_links_; ++l) {
            basis_[l] = col_s(l);
            for (int j = 0; j < cols_; ++j) tableau_[l][j] = -tableau_[l][j];
        }
        basis_[n_links_] = 0;
    }

    void run() {
        const double tol = options_.pivot_tolerance;
        long max_pivots = options_.max_pivots > 0
                              ? options_.max_pivots
                              : 10000 + 200L * (rows_ + cols_);
        long degenerate_streak = 0;
        while (true) {
            if (pivots_ >= max_pivots) {
                throw NumericalError("simplex cycling guard exhausted after " +
                                     std::to_string(pivots_) + " pivots");
            }
            const bool bland = degenerate_streak >= options_.stall_threshold;
            const int entering = pick_entering(tol, bland);
            if (entering < 0) return; // optimal
            const int leaving_row = pick_leaving(entering, tol);
            if (leaving_row < 0) {
                throw NumericalError("LP unbounded; column coefficients are inconsistent");
            }
            const bool degenerate = rhs_[leaving_row] <= tol;
            pivot(leaving_row, entering);
            degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
            ++pivots_;
        }
    }

    double value(int column) const {
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] == column) return rhs_[i];
        }
        return 0.0;
    }

    // z_j = c_B B^{-1} A_j, read from the current tableau.
    double z(int column) const {
        double sum = 0.0;
        for (int i = 0; i < rows_; ++i) {
            const double cb = cost_[basis_[i]];
            if (cb != 0.0) sum += cb * tableau_[i][column];
        }
        return sum;
    }

    int col_u() const { return n_cols_; }
    int col_v() const { return n_cols_ + 1; }
    int col_s(int l) const { return n_cols_ + 2 + l; }
    int col_ghost() const { return n_cols_ + 2 + n_links_; }
    long pivots() const { return pivots_; }

private:
    bool basic(int column) const {
        return std::find(basis_.begin(), basis_.end(), column) != basis_.end();
    }

    int pick_entering(double tol, bool bland) const {
        int best = -1;
        double best_reduced = -tol;
        for (int j = 0; j < cols_; ++j) {
            if (j == col_ghost() || basic(j)) continue;
            const double reduced = z(j) - cost_[j];
            if (reduced < best_reduced) {
                best_reduced = reduced;
                best = j;
                if (bland) break; // lowest index with negative reduced cost
            }
        }
        return best;
    }

    // Ties in the ratio test go to the lowest basic variable index.
    int pick_leaving(int entering, double tol) const {
        int row = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows_; ++i) {
            const double a = tableau_[i][entering];
            if (a <= tol) continue;
            const double ratio = rhs_[i] / a;
            if (row < 0 || ratio < best_ratio - tol) {
                row = i;
                best_ratio = ratio;
            } else if (ratio <= best_ratio + tol && basis_[i] < basis_[row]) {
                row = i;
                best_ratio = std::min(best_ratio, ratio);
            }
        }
        return row;
    }

    void pivot(int row, int column) {
        const double inv = 1.0 / tableau_[row][column];
        for (int j = 0; j < cols_; ++j) tableau_[row][j] *= inv;
        rhs_[row] *= inv;
        tableau_[row][column] = 1.0;
        for (int i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const double factor = tableau_[i][column];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols_; ++j) tableau_[i][j] -= factor * tableau_[row][j];
            rhs_[i] -= factor * rhs_[row];
            tableau_[i][column] = 0.0;
        }
        basis_[row] = column;
        for (int i = 0; i < rows_; ++i) {
            if (rhs_[i] < 0.0 && rhs_[i] > -1e-11) rhs_[i] = 0.0;
        }
    }

    RmpOptions options_;
    int n_cols_;
    int n_links_;
    int rows_;
    int cols_;
    std::vector<std::vector<double>> tableau_;
    std::vector<double> rhs_;
    std::vector<double> cost_;
    std::vector<int> basis_;
    long pivots_ = 0;
};

} // namespace

RmpSolution solve_rmp(const ColumnPool& pool, const LinkSet& links, const RmpOptions& options) {
    if (pool.size() == 0 || !(pool.column(0).empty())) {
        throw ValidationError("column pool must start with the empty configuration");
    }
    if (links.size() == 0) {
        throw ValidationError("link set is empty");
    }

    RmpSimplex simplex(pool, links, options);
    simplex.run();

    RmpSolution solution;
    auto& schedule = solution.schedule;
    schedule.fractions.resize(pool.size(), 0.0);
    for (int j = 0; j < static_cast<int>(pool.size()); ++j) {
        double lambda = simplex.value(j);
        if (lambda < 0.0) {
            if (lambda < -1e-12) {
                throw NumericalError("negative time fraction " + std::to_string(lambda));
            }
            lambda = 0.0;
        }
        schedule.fractions[j] = lambda;
    }
    schedule.objective = simplex.value(simplex.col_u()) - simplex.value(simplex.col_v());

    auto& duals = solution.duals;
    duals.mu.resize(links.size(), 0.0);
    for (int l = 0; l < static_cast<int>(links.size()); ++l) {
        double mu = simplex.z(simplex.col_s(l));
        if (mu < 0.0) {
            if (mu < -1e-9) {
                throw NumericalError("negative link dual " + std::to_string(mu));
            }
            mu = 0.0;
        }
        duals.mu[l] = mu;
    }
    duals.gamma = simplex.z(simplex.col_ghost());

    schedule.per_link_rates = evaluate_schedule(pool, schedule, links).per_link;
    solution.pivots = simplex.pivots();

    if (std::abs(schedule.objective - duals.gamma) > 1e-7) {
        throw NumericalError("duality gap " +
                             std::to_string(schedule.objective - duals.gamma) +
                             " exceeds tolerance");
    }
    return solution;
}

RateReport evaluate_schedule(const ColumnPool& pool, const Schedule& schedule,
                             const LinkSet& links) {
    if (schedule.fractions.size() != pool.size()) {
        throw ValidationError("schedule fractions are not aligned with the pool");
    }
    double total = 0.0;
    for (double f : schedule.fractions) total += f;
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError("time fractions sum to " + std::to_string(total) + ", expected 1");
    }
    RateReport report;
    report.per_link.resize(links.size(), 0.0);
    for (std::size_t j = 0; j < pool.size(); ++j) {
        const double lambda = schedule.fractions[j];
        if (lambda == 0.0) continue;
        for (auto [l, omega] : column_coefficients(pool.column(static_cast<int>(j)), links)) {
            report.per_link[l] += lambda * omega;
        }
    }
    report.minimum = report.per_link.empty()
                         ? 0.0
                         : *std::min_element(report.per_link.begin(), report.per_link.end());
    return report;
}

} // namespace qnet
