#include "wlpa/label_propagation.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wlpa {

namespace {

// Scratch for scoring neighbor labels. Scores are indexed by label value
// (labels always live in [0, n)); only touched entries are reset, so a pick
// costs O(candidates). Weights are strictly positive, which makes score 0 a
// safe "unseen" sentinel. Unweighted counts accumulate as small integers in
// doubles, so tie comparisons stay exact.
class LabelScorer {
public:
    explicit LabelScorer(std::size_t n) : score_(n, 0.0) {}

    template <typename LabelAt>
    NodeId pick(std::span<const AdjEntry> cands, LabelAt&& label_at, bool weighted,
                Rng& rng, NodeId fallback) {
        if (cands.empty()) return fallback;
        touched_.clear();
        for (const auto& a : cands) {
            NodeId l = label_at(a.neighbor);
            if (score_[l] == 0.0) touched_.push_back(l);
            score_[l] += weighted ? a.weight : 1.0;
        }
        double best = 0.0;
        for (NodeId l : touched_) {
            if (score_[l] > best) best = score_[l];
        }
        ties_.clear();
        for (NodeId l : touched_) {
            if (score_[l] == best) ties_.push_back(l);
        }
        NodeId chosen = ties_.size() == 1
                            ? ties_[0]
                            : ties_[static_cast<std::size_t>(rng.bounded(ties_.size()))];
        for (NodeId l : touched_) score_[l] = 0.0;
        return chosen;
    }

    /// Highest score over the candidates together with the score of `label`.
    template <typename LabelAt>
    bool label_attains_max(std::span<const AdjEntry> cands, LabelAt&& label_at,
                           bool weighted, NodeId label) {
        touched_.clear();
        for (const auto& a : cands) {
            NodeId l = label_at(a.neighbor);
            if (score_[l] == 0.0) touched_.push_back(l);
            score_[l] += weighted ? a.weight : 1.0;
        }
        double best = 0.0;
        for (NodeId l : touched_) {
            if (score_[l] > best) best = score_[l];
        }
        bool attained = score_[label] == best;
        for (NodeId l : touched_) score_[l] = 0.0;
        return attained;
    }

private:
    std::vector<double> score_;
    std::vector<NodeId> touched_;
    std::vector<NodeId> ties_;
};

NodeId load_label(std::vector<NodeId>& labels, NodeId v) {
    return std::atomic_ref<NodeId>(labels[v]).load(std::memory_order_relaxed);
}

void store_label(std::vector<NodeId>& labels, NodeId u, NodeId value) {
    std::atomic_ref<NodeId>(labels[u]).store(value, std::memory_order_relaxed);
}

// One asynchronous sweep in shuffled order. CandAt maps a node to the edge
// span it may take labels from this sweep.
template <typename CandAt>
void run_sweep(std::vector<NodeId>& labels, std::vector<NodeId>& order, CandAt&& cand_at,
               bool weighted, Rng& rng, LabelScorer& scorer, int threads) {
    rng.shuffle(order);
    const std::size_t n = order.size();

    if (threads == 1) {
        for (NodeId u : order) {
            auto cands = cand_at(u);
            if (cands.empty()) continue;
            labels[u] = scorer.pick(
                cands, [&](NodeId v) { return labels[v]; }, weighted, rng, labels[u]);
        }
        return;
    }

#ifdef _OPENMP
    int t = threads > 0 ? threads : omp_get_max_threads();
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(t));
    for (auto& s : seeds) s = rng.next();
    #pragma omp parallel num_threads(t)
    {
        Rng local_rng(seeds[static_cast<std::size_t>(omp_get_thread_num())]);
        LabelScorer local_scorer(labels.size());
        #pragma omp for schedule(dynamic, 256)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            NodeId u = order[static_cast<std::size_t>(i)];
            auto cands = cand_at(u);
            if (cands.empty()) continue;
            NodeId chosen = local_scorer.pick(
                cands, [&](NodeId v) { return load_label(labels, v); }, weighted, local_rng,
                load_label(labels, u));
            store_label(labels, u, chosen);
        }
    }
#else
    for (NodeId u : order) {
        auto cands = cand_at(u);
        if (cands.empty()) continue;
        labels[u] =
            scorer.pick(cands, [&](NodeId v) { return labels[v]; }, weighted, rng, labels[u]);
    }
#endif
}

}  // namespace

std::size_t restricted_prefix_length(std::span<const AdjEntry> ranked, bool weighted,
                                     double strength) {
    const std::size_t d = ranked.size();
    if (d == 0) return 0;
    if (!weighted) return (d + 1) / 2;
    const double half = strength / 2.0;
    double cum = 0.0;
    std::size_t len = 0;
    for (const auto& a : ranked) {
        if (cum + a.weight > half) break;
        cum += a.weight;
        ++len;
    }
    return len > 0 ? len : 1;  // a node with neighbors must be able to receive a label
}

namespace {

// The public entry points accept arbitrary label values, so the scorer
// scratch must span the largest one (internal passes keep labels in [0, n)).
std::size_t label_capacity(const std::vector<NodeId>& labels) {
    NodeId cap = 0;
    for (NodeId l : labels) cap = std::max(cap, l);
    return static_cast<std::size_t>(cap) + 1;
}

}  // namespace

NodeId most_frequent_label(std::span<const AdjEntry> candidates,
                           const std::vector<NodeId>& labels, bool weighted, Rng& rng,
                           NodeId fallback) {
    LabelScorer scorer(label_capacity(labels));
    return scorer.pick(candidates, [&](NodeId v) { return labels[v]; }, weighted, rng, fallback);
}

bool stop_criterion(const Graph& g, const std::vector<NodeId>& labels, bool weighted) {
    if (labels.size() != g.node_count()) {
        throw std::invalid_argument("label vector does not cover the graph");
    }
    LabelScorer scorer(label_capacity(labels));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        if (nb.empty()) continue;
        if (!scorer.label_attains_max(nb, [&](NodeId v) { return labels[v]; }, weighted,
                                      labels[u])) {
            return false;
        }
    }
    return true;
}

DetectionResult lpa(const Graph& g, const LpaConfig& cfg) {
    if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
    const std::size_t n = g.node_count();
    if (n == 0) return {Partition(std::vector<std::uint32_t>{}), 0, true};

    const bool weighted = cfg.weighted.value_or(g.weighted());
    Rng rng(cfg.seed);
    std::vector<NodeId> labels(n);
    std::iota(labels.begin(), labels.end(), NodeId{0});
    std::vector<NodeId> order = labels;
    LabelScorer scorer(n);

    for (unsigned pass = 1; pass <= cfg.max_passes; ++pass) {
        run_sweep(labels, order, [&](NodeId u) { return g.neighbors(u); }, weighted, rng,
                  scorer, cfg.threads);
        if (stop_criterion(g, labels, weighted)) {
            return {Partition(std::vector<std::uint32_t>(labels.begin(), labels.end())), pass,
                    true};
        }
    }
    return {Partition(std::vector<std::uint32_t>(labels.begin(), labels.end())),
            cfg.max_passes, false};
}

WlpaContext prepare_wlpa_context(const Graph& g, unsigned depth, bool weighted, int threads) {
    WlpaContext ctx;
    ctx.weighted = weighted;
    EdgeScores scores = local_edge_betweenness(g, depth, threads);
    ctx.ranking = sorted_neighbor_order(g, scores);
    ctx.restricted_len.resize(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        ctx.restricted_len[u] =
            restricted_prefix_length(ctx.ranking[u], weighted, g.strength(u));
    }
    return ctx;
}

DetectionResult wlpa_leb(const Graph& g, const LpaConfig& cfg, const WlpaContext& ctx) {
    if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
    const std::size_t n = g.node_count();
    if (n == 0) return {Partition(std::vector<std::uint32_t>{}), 0, true};
    if (ctx.ranking.size() != n) throw std::invalid_argument("context built for another graph");

    const bool weighted = cfg.weighted.value_or(g.weighted());
    Rng rng(cfg.seed);
    std::vector<NodeId> labels(n);
    std::iota(labels.begin(), labels.end(), NodeId{0});
    std::vector<NodeId> order = labels;
    LabelScorer scorer(n);

    auto restricted = [&](NodeId u) {
        return std::span<const AdjEntry>(ctx.ranking[u].data(), ctx.restricted_len[u]);
    };
    auto full = [&](NodeId u) { return g.neighbors(u); };

    for (unsigned pass = 1; pass <= cfg.max_passes; ++pass) {
        run_sweep(labels, order, restricted, weighted, rng, scorer, cfg.threads);
        run_sweep(labels, order, full, weighted, rng, scorer, cfg.threads);
        if (stop_criterion(g, labels, weighted)) {
            return {Partition(std::vector<std::uint32_t>(labels.begin(), labels.end())), pass,
                    true};
        }
    }
    return {Partition(std::vector<std::uint32_t>(labels.begin(), labels.end())),
            cfg.max_passes, false};
}

DetectionResult wlpa_leb(const Graph& g, const LpaConfig& cfg) {
    const bool weighted = cfg.weighted.value_or(g.weighted());
    WlpaContext ctx = prepare_wlpa_context(g, cfg.depth, weighted, cfg.threads);
    return wlpa_leb(g, cfg, ctx);
}

}  // namespace wlpa
