#pragma once

#include <cstddef>
#include <vector>

#include "wlpa/graph.hpp"

namespace wlpa {

/// One edge removal: the edge's endpoints (original dense ids), the
/// betweenness value that selected it, and the quality of the
/// connected-component partition left after removing it.
struct GnRemoval {
    NodeId u;
    NodeId v;
    double betweenness;
    std::size_t component_count;
    double modularity;
};

/// Divisive dendrogram: the ordered removals (length m) plus the best
/// partition encountered over all levels, level 0 being the intact graph.
struct GnResult {
    Partition best;
    double best_modularity;
    std::size_t best_level;  // 0 = before any removal
    double initial_modularity;
    std::vector<GnRemoval> removals;
};

/// Divisive community detection: repeatedly recompute full edge betweenness
/// on the remaining graph, remove one maximum-betweenness edge (ties go to
/// the smallest (u, v) pair, so the dendrogram is reproducible), and record
/// the component partition and its modularity against the original graph.
/// Returns the maximum-modularity level. Cost is O(n * m^2); inputs above
/// node_limit are refused, pass a larger limit to override.
GnResult girvan_newman(const Graph& g, std::size_t node_limit = 10000);

}  // namespace wlpa
