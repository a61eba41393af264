#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "wlpa/betweenness.hpp"
#include "wlpa/graph.hpp"
#include "wlpa/rng.hpp"

namespace wlpa {

enum class Algorithm { lpa, wlpa_leb, girvan_newman };

struct LpaConfig {
    Algorithm algorithm = Algorithm::wlpa_leb;
    unsigned depth = 2;         // betweenness truncation depth (wlpa_leb only)
    unsigned max_passes = 100;  // termination cap; random ties can stall a fixpoint
    std::uint64_t seed = 1;
    int threads = 1;            // 1 = deterministic serial; 0 or >1 = parallel node tasks
    std::optional<bool> weighted;  // unset: derived from the graph
};

struct DetectionResult {
    Partition partition;
    unsigned passes = 0;
    bool converged = false;  // stop criterion held (vs. pass cap hit)
};

/// Classic label propagation: every node starts with a unique label; passes
/// shuffle the node order and asynchronously give each node the most frequent
/// label among its neighbors (largest incident-weight sum on weighted graphs)
/// until every node holds such a label or max_passes is reached.
DetectionResult lpa(const Graph& g, const LpaConfig& cfg);

/// Label propagation steered by local edge betweenness. Betweenness is
/// computed once up front and each node's neighbors are ranked by it,
/// ascending; every pass then runs two asynchronous sweeps: one restricted to
/// each node's low-betweenness neighbor prefix (community cores form first),
/// one over all neighbors. Stop criterion and termination cap as in lpa.
DetectionResult wlpa_leb(const Graph& g, const LpaConfig& cfg);

/// Precomputed ranking state for wlpa_leb, reusable across runs on the same
/// graph (it does not depend on the seed).
struct WlpaContext {
    NeighborRanking ranking;
    std::vector<std::size_t> restricted_len;
    bool weighted = false;
};

WlpaContext prepare_wlpa_context(const Graph& g, unsigned depth, bool weighted,
                                 int threads = 1);
DetectionResult wlpa_leb(const Graph& g, const LpaConfig& cfg, const WlpaContext& ctx);

/// Number of leading edges of a betweenness-ranked incident list a node may
/// take labels from. Unweighted: ceil(d/2). Weighted: the longest prefix
/// whose cumulative weight stays within half the node's strength, never
/// fewer than one edge.
std::size_t restricted_prefix_length(std::span<const AdjEntry> ranked, bool weighted,
                                     double strength);

/// Label scored best over the candidate edges, by edge count (unweighted) or
/// incident-weight sum (weighted); ties resolve uniformly at random from rng.
/// An empty candidate set keeps `fallback` (the node's current label).
NodeId most_frequent_label(std::span<const AdjEntry> candidates,
                           const std::vector<NodeId>& labels, bool weighted, Rng& rng,
                           NodeId fallback);

/// True iff every node of degree >= 1 holds a label attaining the maximum
/// score over its full neighbor set. Degree-0 nodes always satisfy it.
bool stop_criterion(const Graph& g, const std::vector<NodeId>& labels, bool weighted);

}  // namespace wlpa
