#include "wlpa/girvan_newman.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "wlpa/betweenness.hpp"
#include "wlpa/metrics.hpp"

namespace wlpa {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), NodeId{0});
    }
    NodeId find(NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(NodeId a, NodeId b) { parent[find(a)] = find(b); }
    std::vector<NodeId> parent;
};

Partition components_partition(std::size_t n, const std::vector<WeightedEdge>& alive) {
    UnionFind uf(n);
    for (const auto& e : alive) uf.unite(e.u, e.v);
    std::vector<std::uint32_t> labels(n);
    for (NodeId u = 0; u < n; ++u) labels[u] = uf.find(u);
    return Partition(std::move(labels)).canonical();
}

}  // namespace

GnResult girvan_newman(const Graph& g, std::size_t node_limit) {
    const std::size_t n = g.node_count();
    if (n > node_limit) {
        throw std::invalid_argument(
            "girvan_newman refuses graphs with " + std::to_string(n) + " nodes (limit " +
            std::to_string(node_limit) +
            "); its cost is O(n*m^2), raise the limit explicitly to proceed");
    }
    if (g.edge_count() == 0) {
        throw std::invalid_argument("girvan_newman needs a graph with edges");
    }

    std::vector<WeightedEdge> alive = g.edges();

    GnResult result;
    Partition level0 = components_partition(n, alive);
    result.initial_modularity = modularity(g, level0);
    result.best = level0;
    result.best_modularity = result.initial_modularity;
    result.best_level = 0;
    result.removals.reserve(alive.size());

    while (!alive.empty()) {
        Graph remaining = Graph::from_edges(n, alive);
        EdgeScores scores = full_edge_betweenness(remaining);

        // pick the max-betweenness edge; ties resolve to the smallest (u, v),
        // and remaining.edges() is already sorted that way
        std::size_t pick = 0;
        for (std::size_t e = 1; e < scores.values.size(); ++e) {
            if (scores.values[e] > scores.values[pick]) pick = e;
        }
        const WeightedEdge removed = remaining.edges()[pick];

        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (alive[i].u == removed.u && alive[i].v == removed.v) {
                alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
        }

        Partition level = components_partition(n, alive);
        double q = modularity(g, level);
        result.removals.push_back(
            {removed.u, removed.v, scores.values[pick], level.community_count(), q});
        if (q > result.best_modularity) {
            result.best_modularity = q;
            result.best = level;
            result.best_level = result.removals.size();
        }
    }
    return result;
}

}  // namespace wlpa
