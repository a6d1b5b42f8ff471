#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qnet/graph.hpp"

namespace qnet {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// A simple directed path from a transmitter to a receiver. Intermediate
/// nodes are switches and no vertex repeats.
struct TrPath {
    std::vector<int> nodes; ///< node index sequence, transmitter first
    std::vector<int> edges; ///< parallel edge indices, size() == nodes.size() - 1
    double total_attenuation_db = 0.0;
    double unit_weight = 0.0; ///< path_weight(total_attenuation_db, 1.0)

    int transmitter() const { return nodes.front(); }
    int receiver() const { return nodes.back(); }

    friend bool operator==(const TrPath& a, const TrPath& b) { return a.nodes == b.nodes; }
    friend bool operator<(const TrPath& a, const TrPath& b) { return a.nodes < b.nodes; }
};

/// Secret-key capacity of a lossy channel under the repeaterless bound,
/// scaled by a link priority:  -c * log2(1 - 10^(-alpha/10)).
/// Throws std::domain_error for alpha <= 0 or c < 0.
double path_weight(double total_attenuation_db, double priority_weight);

/// Builds a TrPath from a node index sequence, resolving edges against the
/// graph and computing attenuation and unit weight. Throws ValidationError
/// if the sequence is not a simple TR-path of the graph.
TrPath make_path(const NetworkGraph& graph, const std::vector<int>& nodes);

/// Every simple TR-path of a graph in a canonical deterministic order
/// (lexicographic by node index sequence), with a per-pair index.
class PathCatalog {
public:
    std::size_t size() const { return paths_.size(); }
    const TrPath& path(int index) const { return paths_.at(index); }
    const std::vector<TrPath>& paths() const { return paths_; }

    /// Catalog indices of the paths connecting (transmitter, receiver);
    /// empty if the pair is not realizable.
    const std::vector<int>& paths_for(int transmitter, int receiver) const;

    /// Realizable (transmitter, receiver) pairs, sorted.
    std::vector<std::pair<int, int>> realizable_pairs() const;

private:
    friend PathCatalog enumerate_paths(const NetworkGraph&, std::size_t);
    std::vector<TrPath> paths_;
    std::map<std::pair<int, int>, std::vector<int>> by_pair_;
};

/// Enumerates all simple TR-paths by depth-first search over targets in
/// increasing index order, which yields the canonical lexicographic order.
/// Throws ResourceLimitError once the catalog would exceed `path_cap`.
PathCatalog enumerate_paths(const NetworkGraph& graph, std::size_t path_cap = kDefaultPathCap);

/// A realizable transmitter-receiver pair with its priority weight.
struct Link {
    int transmitter = -1;
    int receiver = -1;
    double priority_weight = 1.0;
};

class LinkSet {
public:
    std::size_t size() const { return links_.size(); }
    const Link& link(int index) const { return links_.at(index); }
    const std::vector<Link>& links() const { return links_; }

    /// Link index for (transmitter, receiver), or -1 if not a link.
    int index_of(int transmitter, int receiver) const;

    /// Appends a link; used by derive_links and by tests that build
    /// synthetic instances directly.
    int add(Link link);

private:
    std::vector<Link> links_;
    std::map<std::pair<int, int>, int> index_;
};

/// Returns exactly the realizable pairs of the catalog, sorted by
/// (transmitter, receiver), with priority 1.0 unless overridden. Throws
/// ValidationError if `priorities` names an unrealizable pair or carries a
/// negative weight.
LinkSet derive_links(const NetworkGraph& graph, const PathCatalog& catalog,
                     const std::map<std::pair<int, int>, double>& priorities = {});

} // namespace qnet
