#include "qnet/path.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qnet/errors.hpp"

namespace qnet {

double path_weight(double total_attenuation_db, double priority_weight) {
    if (!(total_attenuation_db > 0.0)) {
        throw std::domain_error("path_weight: attenuation must be strictly positive, got " +
                                std::to_string(total_attenuation_db));
    }
    if (priority_weight < 0.0) {
        throw std::domain_error("path_weight: priority must be non-negative");
    }
    const double transmittance = std::pow(10.0, -total_attenuation_db / 10.0);
    // log1p keeps -log2(1 - eta) positive for very high attenuation, where
    // 1 - eta would round to 1.
    return -priority_weight * std::log1p(-transmittance) / std::numbers::ln2;
}

TrPath make_path(const NetworkGraph& graph, const std::vector<int>& nodes) {
    if (nodes.size() < 2) {
        throw ValidationError("path needs at least two nodes");
    }
    TrPath path;
    path.nodes = nodes;
    if (graph.kind(nodes.front()) != NodeKind::Transmitter) {
        throw ValidationError("path must start at a transmitter, starts at " +
                              graph.name(nodes.front()));
    }
    if (graph.kind(nodes.back()) != NodeKind::Receiver) {
        throw ValidationError("path must end at a receiver, ends at " + graph.name(nodes.back()));
    }
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        if (graph.kind(nodes[i]) != NodeKind::Switch) {
            throw ValidationError("path interior node " + graph.name(nodes[i]) +
                                  " is not a switch");
        }
    }
    std::vector<char> seen(graph.node_count(), 0);
    for (int v : nodes) {
        if (seen[v]) {
            throw ValidationError("path revisits node " + graph.name(v));
        }
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const int e = graph.find_edge(nodes[i], nodes[i + 1]);
        if (e < 0) {
            throw ValidationError("no edge " + graph.name(nodes[i]) + " -> " +
                                  graph.name(nodes[i + 1]));
        }
        path.edges.push_back(e);
        path.total_attenuation_db += graph.edge(e).attenuation_db;
    }
    path.unit_weight = path_weight(path.total_attenuation_db, 1.0);
    return path;
}

const std::vector<int>& PathCatalog::paths_for(int transmitter, int receiver) const {
    static const std::vector<int> kEmpty;
    auto it = by_pair_.find({transmitter, receiver});
    return it == by_pair_.end() ? kEmpty : it->second;
}

std::vector<std::pair<int, int>> PathCatalog::realizable_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(by_pair_.size());
    for (const auto& [pair, indices] : by_pair_) pairs.push_back(pair);
    return pairs;
}

PathCatalog enumerate_paths(const NetworkGraph& graph, std::size_t path_cap) {
    PathCatalog catalog;
    std::vector<char> on_path(graph.node_count(), 0);
    std::vector<int> nodes;
    std::vector<int> edges;

    auto emit = [&]() {
        if (catalog.paths_.size() >= path_cap) {
            throw ResourceLimitError("path catalog exceeds cap of " + std::to_string(path_cap));
        }
        TrPath path;
        path.nodes = nodes;
        path.edges = edges;
        for (int e : edges) path.total_attenuation_db += graph.edge(e).attenuation_db;
        path.unit_weight = path_weight(path.total_attenuation_db, 1.0);
        const int index = static_cast<int>(catalog.paths_.size());
        catalog.by_pair_[{path.transmitter(), path.receiver()}].push_back(index);
        catalog.paths_.push_back(std::move(path));
    };

    // out_edges are sorted by target, so depth-first emission order is
    // lexicographic on the node index sequence.
    auto dfs = [&](auto&& self, int node) -> void {
        for (int e : graph.out_edges(node)) {
            const int next = graph.edge(e).target;
            if (on_path[next]) continue;
            nodes.push_back(next);
            edges.push_back(e);
            if (graph.kind(next) == NodeKind::Receiver) {
                emit();
            } else if (graph.kind(next) == NodeKind::Switch) {
                on_path[next] = 1;
                self(self, next);
                on_path[next] = 0;
            }
            nodes.pop_back();
            edges.pop_back();
        }
    };

    for (int t = 0; t < graph.node_count(); ++t) {
        if (graph.kind(t) != NodeKind::Transmitter) continue;
        nodes.assign(1, t);
        edges.clear();
        on_path[t] = 1;
        dfs(dfs, t);
        on_path[t] = 0;
    }
    return catalog;
}

int LinkSet::index_of(int transmitter, int receiver) const {
    auto it = index_.find({transmitter, receiver});
    return it == index_.end() ? -1 : it->second;
}

int LinkSet::add(Link link) {
    auto [it, inserted] = index_.emplace(std::pair{link.transmitter, link.receiver},
                                         static_cast<int>(links_.size()));
    if (!inserted) {
        throw ValidationError("duplicate link for pair");
    }
    links_.push_back(link);
    return it->second;
}

LinkSet derive_links(const NetworkGraph& graph, const PathCatalog& catalog,
                     const std::map<std::pair<int, int>, double>& priorities) {
    const auto pairs = catalog.realizable_pairs();
    for (const auto& [pair, priority] : priorities) {
        if (catalog.paths_for(pair.first, pair.second).empty()) {
            throw ValidationError("priority given for unrealizable pair " +
                                  graph.name(pair.first) + " -> " + graph.name(pair.second));
        }
        if (priority < 0.0) {
            throw ValidationError("negative priority for pair " + graph.name(pair.first) +
                                  " -> " + graph.name(pair.second));
        }
    }
    LinkSet links;
    for (const auto& [t, r] : pairs) {
        auto it = priorities.find({t, r});
        links.add(Link{t, r, it == priorities.end() ? 1.0 : it->second});
    }
    return links;
}

} // namespace qnet
