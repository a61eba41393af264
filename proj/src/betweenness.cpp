#include "wlpa/betweenness.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wlpa {

namespace {

// Reusable per-thread state for the truncated traversals. dist == -1 marks
// untouched nodes; only nodes visited by the current source are reset
// afterwards, so one workspace serves any number of sources in O(visited).
struct Workspace {
    explicit Workspace(std::size_t n)
        : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
        order.reserve(n);
        queue.reserve(n);
    }

    std::vector<int> dist;
    std::vector<double> sigma;  // shortest-path counts fit doubles exactly
    std::vector<double> delta;
    std::vector<NodeId> order;
    std::vector<NodeId> queue;
};

// Forward truncated BFS from s, then backward accumulation. A neighbor v of
// w with dist[v] == dist[w] - 1 is exactly a shortest-path predecessor, so
// predecessor lists are never materialized.
void accumulate_source(const Graph& g, NodeId s, int depth_cap, Workspace& ws,
                       std::vector<double>& scores) {
    ws.order.clear();
    ws.queue.clear();
    ws.dist[s] = 0;
    ws.sigma[s] = 1.0;
    ws.queue.push_back(s);
    std::size_t head = 0;
    while (head < ws.queue.size()) {
        NodeId v = ws.queue[head++];
        ws.order.push_back(v);
        if (ws.dist[v] == depth_cap) continue;
        int dv = ws.dist[v];
        for (const auto& a : g.neighbors(v)) {
            if (ws.dist[a.neighbor] < 0) {
                ws.dist[a.neighbor] = dv + 1;
                ws.queue.push_back(a.neighbor);
            }
            if (ws.dist[a.neighbor] == dv + 1) ws.sigma[a.neighbor] += ws.sigma[v];
        }
    }

    // BFS order is nondecreasing in distance; reverse it to process the
    // farthest nodes first.
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        NodeId w = *it;
        if (w == s) continue;
        double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
        int dw = ws.dist[w];
        for (const auto& a : g.neighbors(w)) {
            if (ws.dist[a.neighbor] == dw - 1) {
                double c = ws.sigma[a.neighbor] * coeff;
                scores[a.edge] += c;
                ws.delta[a.neighbor] += c;
            }
        }
    }

    for (NodeId v : ws.order) {
        ws.dist[v] = -1;
        ws.sigma[v] = 0.0;
        ws.delta[v] = 0.0;
    }
}

}  // namespace

EdgeScores local_edge_betweenness(const Graph& g, unsigned depth, int threads) {
    if (depth < 1) throw std::invalid_argument("betweenness depth must be >= 1");

    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const int depth_cap = static_cast<int>(depth);
    EdgeScores result;
    result.values.assign(m, 0.0);
    result.depth = depth;

    if (n == 0 || m == 0) return result;

    if (threads == 1) {
        Workspace ws(n);
        for (NodeId s = 0; s < n; ++s) accumulate_source(g, s, depth_cap, ws, result.values);
    } else {
#ifdef _OPENMP
        #pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
        {
            Workspace ws(n);
            std::vector<double> local(m, 0.0);
            #pragma omp for schedule(dynamic, 64) nowait
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
                accumulate_source(g, static_cast<NodeId>(s), depth_cap, ws, local);
            }
            #pragma omp critical
            {
                for (std::size_t e = 0; e < m; ++e) result.values[e] += local[e];
            }
        }
#else
        Workspace ws(n);
        for (NodeId s = 0; s < n; ++s) accumulate_source(g, s, depth_cap, ws, result.values);
#endif
    }

    // each unordered pair was counted once from either endpoint
    for (auto& v : result.values) v *= 0.5;
    return result;
}

EdgeScores full_edge_betweenness(const Graph& g) {
    EdgeScores scores = reference::local_edge_betweenness(g, 0);
    return scores;
}

namespace reference {

EdgeScores local_edge_betweenness(const Graph& g, unsigned depth) {
    const std::size_t n = g.node_count();
    const bool unbounded = depth == 0;

    EdgeScores result;
    result.values.assign(g.edge_count(), 0.0);
    result.depth = depth;
    result.unbounded = unbounded;

    for (NodeId s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<double> sigma(n, 0.0);
        std::vector<std::vector<std::pair<NodeId, EdgeId>>> preds(n);
        std::vector<NodeId> order;
        std::queue<NodeId> q;
        dist[s] = 0;
        sigma[s] = 1.0;
        q.push(s);
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop();
            order.push_back(v);
            if (!unbounded && dist[v] == static_cast<int>(depth)) continue;
            for (const auto& a : g.neighbors(v)) {
                if (dist[a.neighbor] < 0) {
                    dist[a.neighbor] = dist[v] + 1;
                    q.push(a.neighbor);
                }
                if (dist[a.neighbor] == dist[v] + 1) {
                    sigma[a.neighbor] += sigma[v];
                    preds[a.neighbor].push_back({v, a.edge});
                }
            }
        }
        std::vector<double> delta(n, 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (const auto& [v, e] : preds[w]) {
                double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                result.values[e] += c;
                delta[v] += c;
            }
        }
    }

    for (auto& v : result.values) v *= 0.5;
    return result;
}

}  // namespace reference

NeighborRanking sorted_neighbor_order(const Graph& g, const EdgeScores& scores) {
    if (scores.values.size() != g.edge_count()) {
        throw std::invalid_argument("edge scores cover " +
                                    std::to_string(scores.values.size()) + " edges, graph has " +
                                    std::to_string(g.edge_count()));
    }
    NeighborRanking ranking(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        ranking[u].assign(nb.begin(), nb.end());
        std::stable_sort(ranking[u].begin(), ranking[u].end(),
                         [&](const AdjEntry& a, const AdjEntry& b) {
                             double sa = scores.values[a.edge], sb = scores.values[b.edge];
                             if (sa != sb) return sa < sb;
                             return a.neighbor < b.neighbor;
                         });
    }
    return ranking;
}

}  // namespace wlpa
