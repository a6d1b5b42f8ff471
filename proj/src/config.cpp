#include "qnet/config.hpp"

#include <algorithm>
#include <set>

#include "qnet/errors.hpp"

namespace qnet {
namespace {

std::string edge_list_string(const NetworkGraph& graph, const std::vector<int>& edges) {
    std::string out;
    for (int e : edges) {
        if (!out.empty()) out += ", ";
        out += graph.name(graph.edge(e).source) + "->" + graph.name(graph.edge(e).target);
    }
    return out;
}

// Selected out-edge indices per node, ascending by edge index.
std::vector<std::vector<int>> selected_out_edges(const NetworkGraph& graph,
                                                 const FlowMapping& flow) {
    std::vector<std::vector<int>> out(graph.node_count());
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (flow.get(e)) out[graph.edge(e).source].push_back(e);
    }
    for (auto& list : out) std::sort(list.begin(), list.end());
    return out;
}

// Backtracking search for a complete decomposition of the selected edges
// into edge-disjoint simple TR-paths. A switch shared by several paths
// admits more than one in/out pairing and not every pairing leaves the
// remaining edges coverable, so the greedy trace alone is not a decision
// procedure; choices are explored in edge-index order and the first complete
// cover wins, which makes the result canonical.
class Decomposer {
public:
    Decomposer(const NetworkGraph& graph, const FlowMapping& flow)
        : graph_(graph), out_(selected_out_edges(graph, flow)), used_(graph.edge_count(), 0) {
        for (int e = 0; e < graph.edge_count(); ++e) {
            if (flow.get(e)) ++total_selected_;
        }
        for (int v = 0; v < graph.node_count(); ++v) {
            if (graph.kind(v) == NodeKind::Transmitter && !out_[v].empty()) {
                starts_.push_back(v);
            }
        }
    }

    bool run() { return search(0); }

    const std::vector<std::vector<int>>& node_sequences() const { return sequences_; }

private:
    bool search(std::size_t start_index) {
        if (start_index == starts_.size()) return used_count_ == total_selected_;
        walk_.assign(1, starts_[start_index]);
        return extend(start_index);
    }

    bool extend(std::size_t start_index) {
        const int cur = walk_.back();
        if (graph_.kind(cur) == NodeKind::Receiver) {
            sequences_.push_back(walk_);
            std::vector<int> saved_walk = walk_;
            const bool found = search(start_index + 1);
            if (!found) {
                sequences_.pop_back();
                walk_ = std::move(saved_walk);
            }
            return found;
        }
        for (int e : out_[cur]) {
            if (used_[e]) continue;
            const int next = graph_.edge(e).target;
            // Simplicity is per walk; distinct paths may share a switch.
            if (graph_.kind(next) == NodeKind::Transmitter ||
                std::find(walk_.begin(), walk_.end(), next) != walk_.end()) {
                continue;
            }
            used_[e] = 1;
            ++used_count_;
            walk_.push_back(next);
            if (extend(start_index)) return true;
            walk_.pop_back();
            --used_count_;
            used_[e] = 0;
        }
        return false;
    }

    const NetworkGraph& graph_;
    std::vector<std::vector<int>> out_;
    std::vector<char> used_;
    std::vector<int> starts_;
    std::vector<int> walk_;
    std::vector<std::vector<int>> sequences_;
    int total_selected_ = 0;
    int used_count_ = 0;
};

// Diagnostic cover: trace each transmitter greedily, stripping any directed
// cycle the walk closes. Returns the selected edges left outside the traced
// paths; nonempty whenever no complete decomposition exists.
std::vector<int> greedy_residual(const NetworkGraph& graph, const FlowMapping& flow) {
    auto out = selected_out_edges(graph, flow);
    std::vector<char> used(graph.edge_count(), 0);
    std::vector<char> covered(graph.edge_count(), 0);

    for (int t = 0; t < graph.node_count(); ++t) {
        if (graph.kind(t) != NodeKind::Transmitter || out[t].empty()) continue;
        std::vector<int> walk_nodes{t};
        std::vector<int> walk_edges;
        int cur = t;
        while (graph.kind(cur) != NodeKind::Receiver) {
            int chosen = -1;
            for (int e : out[cur]) {
                if (!used[e]) {
                    chosen = e;
                    break;
                }
            }
            if (chosen < 0) break; // unbalanced input; leave edges uncovered
            used[chosen] = 1;
            const int next = graph.edge(chosen).target;
            auto pos = std::find(walk_nodes.begin(), walk_nodes.end(), next);
            if (pos != walk_nodes.end()) {
                // Drop the closed cycle from the walk; its edges stay used
                // but uncovered.
                const auto i = static_cast<std::size_t>(pos - walk_nodes.begin());
                walk_nodes.resize(i + 1);
                walk_edges.resize(i);
                cur = next;
            } else {
                walk_nodes.push_back(next);
                walk_edges.push_back(chosen);
                cur = next;
            }
        }
        if (graph.kind(cur) == NodeKind::Receiver) {
            for (int e : walk_edges) covered[e] = 1;
        }
    }

    std::vector<int> residual;
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (flow.get(e) && !covered[e]) residual.push_back(e);
    }
    return residual;
}

} // namespace

Configuration::Configuration(const NetworkGraph& graph, std::vector<TrPath> paths) {
    std::set<int> edges_seen;
    std::set<int> transmitters;
    std::set<int> receivers;
    for (auto& path : paths) {
        path = make_path(graph, path.nodes); // revalidates shape, recomputes weights
        for (int e : path.edges) {
            if (!edges_seen.insert(e).second) {
                throw ValidationError("configuration paths share edge " +
                                      edge_list_string(graph, {e}));
            }
        }
        if (!transmitters.insert(path.transmitter()).second) {
            throw ValidationError("transmitter " + graph.name(path.transmitter()) +
                                  " used by two paths");
        }
        if (!receivers.insert(path.receiver()).second) {
            throw ValidationError("receiver " + graph.name(path.receiver()) +
                                  " used by two paths");
        }
    }
    std::sort(paths.begin(), paths.end());
    paths_ = std::move(paths);
}

std::vector<std::pair<int, int>> Configuration::realized_links() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(paths_.size());
    for (const auto& path : paths_) pairs.emplace_back(path.transmitter(), path.receiver());
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

const TrPath* Configuration::path_for(int transmitter, int receiver) const {
    for (const auto& path : paths_) {
        if (path.transmitter() == transmitter && path.receiver() == receiver) return &path;
    }
    return nullptr;
}

std::vector<int> Configuration::edge_union() const {
    std::vector<int> edges;
    for (const auto& path : paths_) edges.insert(edges.end(), path.edges.begin(), path.edges.end());
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::string config_key(const Configuration& config) {
    if (config.empty()) return "empty";
    std::string key;
    for (const auto& path : config.paths()) {
        if (!key.empty()) key += '|';
        for (std::size_t i = 0; i < path.edges.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(path.edges[i]);
        }
    }
    return key;
}

FlowCheckResult check_flow(const NetworkGraph& graph, const FlowMapping& flow) {
    if (flow.size() != static_cast<std::size_t>(graph.edge_count())) {
        throw ValidationError("flow mapping is not indexed over the graph's edges");
    }
    FlowCheckResult result;
    for (int v = 0; v < graph.node_count(); ++v) {
        int in = 0;
        int out = 0;
        for (int e : graph.in_edges(v)) in += flow.get(e) ? 1 : 0;
        for (int e : graph.out_edges(v)) out += flow.get(e) ? 1 : 0;
        const int balance = in - out;
        switch (graph.kind(v)) {
        case NodeKind::Transmitter:
            if (balance < -1 || balance > 0) {
                result.violations.push_back({v, balance,
                                             "transmitter " + graph.name(v) + " balance " +
                                                 std::to_string(balance) + " outside [-1, 0]"});
            }
            break;
        case NodeKind::Receiver:
            if (balance < 0 || balance > 1) {
                result.violations.push_back({v, balance,
                                             "receiver " + graph.name(v) + " balance " +
                                                 std::to_string(balance) + " outside [0, 1]"});
            }
            break;
        case NodeKind::Switch:
            if (balance != 0) {
                result.violations.push_back({v, balance,
                                             "switch " + graph.name(v) + " balance " +
                                                 std::to_string(balance) + " != 0"});
            }
            break;
        }
    }
    if (result.balanced()) {
        Decomposer decomposer(graph, flow);
        if (!decomposer.run()) {
            result.residual_cycle_edges = greedy_residual(graph, flow);
        }
    }
    return result;
}

Configuration flow_to_paths(const NetworkGraph& graph, const FlowMapping& flow) {
    if (flow.size() != static_cast<std::size_t>(graph.edge_count())) {
        throw ValidationError("flow mapping is not indexed over the graph's edges");
    }
    FlowCheckResult balance = check_flow(graph, flow);
    if (!balance.balanced()) {
        throw ValidationError("flow is not balanced: " + balance.violations.front().message);
    }
    Decomposer decomposer(graph, flow);
    if (!decomposer.run()) {
        throw DecompositionError("selected edges contain switch cycles not coverable by paths: " +
                                 edge_list_string(graph, greedy_residual(graph, flow)));
    }
    std::vector<TrPath> paths;
    paths.reserve(decomposer.node_sequences().size());
    for (const auto& nodes : decomposer.node_sequences()) {
        paths.push_back(make_path(graph, nodes));
    }
    return Configuration(graph, std::move(paths));
}

FlowMapping paths_to_flow(const NetworkGraph& graph, const Configuration& config) {
    FlowMapping flow(graph.edge_count());
    for (const auto& path : config.paths()) {
        for (int e : path.edges) flow.set(e, true);
    }
    return flow;
}

} // namespace qnet
