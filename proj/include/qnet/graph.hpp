#pragma once

#include <string>
#include <vector>

namespace qnet {

enum class NodeKind { Transmitter, Receiver, Switch };

const char* to_string(NodeKind kind);

/// Directed fiber channel with an additive attenuation in dB.
struct Edge {
    int source = -1;
    int target = -1;
    double attenuation_db = 0.0;
};

/// Directed graph of transmitters, receivers and switches.
///
/// Construction is permissive: the structural rules (no ingoing edges on a
/// transmitter, no outgoing edges on a receiver, strictly positive
/// attenuation, no duplicate arcs) are reported by validate_graph() rather
/// than enforced on insertion, so files can be loaded and diagnosed.
class NetworkGraph {
public:
    /// Adds a node and returns its index. An empty name is replaced by a
    /// per-kind default ("tx0", "sw0", "rx0", ...).
    int add_node(NodeKind kind, std::string name = {});

    /// Adds a directed edge and returns its index. Endpoints must exist.
    int add_edge(int source, int target, double attenuation_db);

    int node_count() const { return static_cast<int>(kinds_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    NodeKind kind(int node) const { return kinds_.at(node); }
    const std::string& name(int node) const { return names_.at(node); }
    const Edge& edge(int index) const { return edges_.at(index); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> nodes_of_kind(NodeKind kind) const;
    int count_of_kind(NodeKind kind) const;

    /// Edge indices leaving `node`, sorted by target index.
    const std::vector<int>& out_edges(int node) const { return out_.at(node); }
    /// Edge indices entering `node`, sorted by source index.
    const std::vector<int>& in_edges(int node) const { return in_.at(node); }

    /// Index of the arc (source, target), or -1 if absent.
    int find_edge(int source, int target) const;

private:
    std::vector<NodeKind> kinds_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// One breach of a graph invariant; `node` / `edge` are -1 when not relevant.
struct GraphViolation {
    std::string message;
    int node = -1;
    int edge = -1;
};

struct ValidationResult {
    std::vector<GraphViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant and reports each breach with the
/// offending node or edge. Violations are data, not failures.
ValidationResult validate_graph(const NetworkGraph& graph);

} // namespace qnet
