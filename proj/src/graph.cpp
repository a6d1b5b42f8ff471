#include "qnet/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qnet {

const char* to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Transmitter: return "transmitter";
    case NodeKind::Receiver: return "receiver";
    case NodeKind::Switch: return "switch";
    }
    return "unknown";
}

int NetworkGraph::add_node(NodeKind kind, std::string name) {
    const int index = node_count();
    if (name.empty()) {
        int of_kind = count_of_kind(kind);
        const char* prefix = kind == NodeKind::Transmitter ? "tx"
                           : kind == NodeKind::Receiver    ? "rx"
                                                           : "sw";
        name = prefix + std::to_string(of_kind);
    }
    kinds_.push_back(kind);
    names_.push_back(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return index;
}

int NetworkGraph::add_edge(int source, int target, double attenuation_db) {
    if (source < 0 || source >= node_count() || target < 0 || target >= node_count()) {
        throw std::out_of_range("add_edge: endpoint index out of range");
    }
    const int index = edge_count();
    edges_.push_back(Edge{source, target, attenuation_db});

    auto& outs = out_[source];
    auto out_pos = std::upper_bound(outs.begin(), outs.end(), index,
                                    [&](int, int e) { return target < edges_[e].target; });
    outs.insert(out_pos, index);

    auto& ins = in_[target];
    auto in_pos = std::upper_bound(ins.begin(), ins.end(), index,
                                   [&](int, int e) { return source < edges_[e].source; });
    ins.insert(in_pos, index);
    return index;
}

std::vector<int> NetworkGraph::nodes_of_kind(NodeKind kind) const {
    std::vector<int> result;
    for (int v = 0; v < node_count(); ++v) {
        if (kinds_[v] == kind) result.push_back(v);
    }
    return result;
}

int NetworkGraph::count_of_kind(NodeKind kind) const {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), kind));
}

int NetworkGraph::find_edge(int source, int target) const {
    if (source < 0 || source >= node_count()) return -1;
    for (int e : out_[source]) {
        if (edges_[e].target == target) return e;
    }
    return -1;
}

ValidationResult validate_graph(const NetworkGraph& graph) {
    ValidationResult result;
    auto report = [&](std::string message, int node, int edge) {
        result.violations.push_back(GraphViolation{std::move(message), node, edge});
    };

    std::map<std::pair<int, int>, int> seen;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const Edge& edge = graph.edge(e);
        const std::string label = graph.name(edge.source) + " -> " + graph.name(edge.target);
        if (graph.kind(edge.target) == NodeKind::Transmitter) {
            report("edge " + label + " enters transmitter " + graph.name(edge.target), edge.target, e);
        }
        if (graph.kind(edge.source) == NodeKind::Receiver) {
            report("edge " + label + " leaves receiver " + graph.name(edge.source), edge.source, e);
        }
        if (!(edge.attenuation_db > 0.0)) {
            report("edge " + label + " has non-positive attenuation " +
                       std::to_string(edge.attenuation_db),
                   -1, e);
        }
        auto [it, inserted] = seen.emplace(std::pair{edge.source, edge.target}, e);
        if (!inserted) {
            report("duplicate arc " + label, -1, e);
        }
    }
    return result;
}

} // namespace qnet
