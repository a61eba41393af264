#pragma once

#include <vector>

#include "wlpa/graph.hpp"

namespace wlpa {

/// Per-edge betweenness values, indexed by edge id. `depth` is the hop
/// truncation used (`unbounded` set for full betweenness). Scores are
/// unordered-pair based: a node pair within range distributes total credit 1
/// across its shortest paths, and every edge on a path receives that path's
/// share. With depth 1 only the endpoint pairs themselves contribute, so
/// every score is exactly 1.
struct EdgeScores {
    std::vector<double> values;
    unsigned depth = 0;
    bool unbounded = false;
};

/// Depth-truncated edge betweenness: only node pairs whose hop distance is
/// at most `depth` contribute, each via its shortest paths. Distances are
/// measured in hops on weighted graphs too. One truncated breadth-first
/// traversal per source with backward dependency accumulation; sources run
/// in parallel when `threads` != 1 (0 picks the OpenMP default). Thread
/// count only reorders floating-point merges, never the underlying credit.
EdgeScores local_edge_betweenness(const Graph& g, unsigned depth, int threads = 1);

/// Exact edge betweenness over all node pairs. Intended as the verification
/// oracle and for small graphs (roughly n <= 5000); equals
/// local_edge_betweenness with depth >= graph diameter.
EdgeScores full_edge_betweenness(const Graph& g);

namespace reference {

/// Straightforward serial implementation kept as the cross-check for the
/// workspace-reusing parallel kernel: fresh arrays and explicit predecessor
/// lists per source. `depth` 0 means unbounded.
EdgeScores local_edge_betweenness(const Graph& g, unsigned depth);

}  // namespace reference

/// Per node: its incident edges ordered by ascending betweenness, ties by
/// ascending neighbor id. This is the propagation preference order.
using NeighborRanking = std::vector<std::vector<AdjEntry>>;

NeighborRanking sorted_neighbor_order(const Graph& g, const EdgeScores& scores);

}  // namespace wlpa
