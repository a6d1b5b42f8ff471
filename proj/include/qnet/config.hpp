#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/path.hpp"

namespace qnet {

/// 0/1 edge selection indexed by the owning graph's edge list.
struct FlowMapping {
    std::vector<std::uint8_t> selected;

    FlowMapping() = default;
    explicit FlowMapping(std::size_t edge_count) : selected(edge_count, 0) {}

    bool get(int edge) const { return selected.at(edge) != 0; }
    void set(int edge, bool value) { selected.at(edge) = value ? 1 : 0; }
    std::size_t size() const { return selected.size(); }

    friend bool operator==(const FlowMapping& a, const FlowMapping& b) {
        return a.selected == b.selected;
    }
};

/// A set of pairwise edge-disjoint simple TR-paths in which each transmitter
/// and each receiver appears in at most one path. Paths are kept sorted by
/// node sequence; the empty configuration is valid.
class Configuration {
public:
    Configuration() = default;

    /// Validates all invariants against the graph (path shape, edge
    /// disjointness, per-transmitter and per-receiver usage) and throws
    /// ValidationError on any breach. Attenuations and weights are
    /// recomputed from the graph.
    Configuration(const NetworkGraph& graph, std::vector<TrPath> paths);

    const std::vector<TrPath>& paths() const { return paths_; }
    std::size_t path_count() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }

    /// Realized (transmitter, receiver) pairs, sorted.
    std::vector<std::pair<int, int>> realized_links() const;

    /// The path realizing (transmitter, receiver), or nullptr.
    const TrPath* path_for(int transmitter, int receiver) const;

    /// Sorted indices of all edges used by some path.
    std::vector<int> edge_union() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.paths_ == b.paths_;
    }

private:
    std::vector<TrPath> paths_;
};

/// Canonical identity token: equal exactly for equal path sets, stable
/// across runs. The empty configuration maps to "empty".
std::string config_key(const Configuration& config);

struct FlowViolation {
    int node = -1;
    int imbalance = 0; ///< inflow minus outflow under the mapping
    std::string message;
};

struct FlowCheckResult {
    /// Breaches of the three balance families (transmitter in [-1, 0],
    /// receiver in [0, 1], switch exactly 0).
    std::vector<FlowViolation> violations;
    /// Selected edges that no path decomposition can cover (directed cycles
    /// through switches). Reported as a distinct warning class; only
    /// computed when the mapping is balanced.
    std::vector<int> residual_cycle_edges;

    bool balanced() const { return violations.empty(); }
    /// Balanced and fully decomposable: the mapping is a network
    /// configuration.
    bool is_configuration() const { return balanced() && residual_cycle_edges.empty(); }
};

/// Checks the three per-node balance families and, when balanced, whether
/// the selected edges decompose completely into TR-paths.
FlowCheckResult check_flow(const NetworkGraph& graph, const FlowMapping& flow);

/// Decomposes a balanced mapping into edge-disjoint simple TR-paths covering
/// every selected edge. Throws ValidationError if the mapping is unbalanced
/// and DecompositionError if residual cycles make full coverage impossible.
/// The decomposition is canonical: transmitters are traced in index order
/// and the lexicographically first feasible pairing at shared switches wins.
Configuration flow_to_paths(const NetworkGraph& graph, const FlowMapping& flow);

/// Indicator mapping of the configuration's path edges. Always passes
/// check_flow.
FlowMapping paths_to_flow(const NetworkGraph& graph, const Configuration& config);

} // namespace qnet
