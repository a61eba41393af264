#include "wlpa/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wlpa/rng.hpp"

namespace wlpa {

namespace {

constexpr double kWeightFloor = 1e-9;

// Visit every index of a pair space of size `space` that an independent
// Bernoulli(p) coin selects, in increasing order, by sampling geometric gaps.
template <typename Visit>
void sample_pairs(std::uint64_t space, double p, Rng& rng, Visit&& visit) {
    if (p <= 0.0 || space == 0) return;
    if (p >= 1.0) {
        for (std::uint64_t t = 0; t < space; ++t) visit(t);
        return;
    }
    const double log1mp = std::log1p(-p);
    double t = -1.0;
    while (true) {
        double u = rng.uniform();
        t += 1.0 + std::floor(std::log1p(-u) / log1mp);
        if (t >= static_cast<double>(space)) break;
        visit(static_cast<std::uint64_t>(t));
    }
}

// Decode index t of the lexicographic unordered-pair enumeration over
// [0, n): (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::pair<std::uint64_t, std::uint64_t> decode_pair(std::uint64_t t, std::uint64_t n) {
    double nd = static_cast<double>(n);
    std::uint64_t i = static_cast<std::uint64_t>(
        std::floor((2.0 * nd - 1.0 - std::sqrt((2.0 * nd - 1.0) * (2.0 * nd - 1.0) -
                                               8.0 * static_cast<double>(t))) /
                   2.0));
    auto row_start = [&](std::uint64_t r) { return r * n - r * (r + 1) / 2; };
    while (i > 0 && row_start(i) > t) --i;           // guard the float estimate
    while (row_start(i + 1) <= t) ++i;
    std::uint64_t j = i + 1 + (t - row_start(i));
    return {i, j};
}

void validate(const GeneratorConfig& cfg, double& p_in, double& p_out) {
    if (cfg.groups < 2) throw std::invalid_argument("generator needs at least 2 groups");
    if (cfg.group_size < 2) throw std::invalid_argument("group size must be >= 2");
    if (cfg.mu < 0.0 || cfg.mu >= 1.0) throw std::invalid_argument("mu must be in [0, 1)");
    const double n = static_cast<double>(cfg.groups) * cfg.group_size;
    if (!(cfg.degree > 0.0) || cfg.degree >= n) {
        throw std::invalid_argument("expected degree must be in (0, n)");
    }
    p_in = cfg.degree * (1.0 - cfg.mu) / (cfg.group_size - 1);
    p_out = cfg.degree * cfg.mu / (n - cfg.group_size);
    if (p_in > 1.0) {
        throw std::invalid_argument("infeasible p_in = " + std::to_string(p_in) +
                                    " (> 1); lower the degree or raise the group size");
    }
    if (p_out > 1.0) {
        throw std::invalid_argument("infeasible p_out = " + std::to_string(p_out) +
                                    " (> 1); lower the degree or mu");
    }
}

PlantedGraph generate_impl(const GeneratorConfig& cfg, bool weighted, double wmu) {
    double p_in = 0.0, p_out = 0.0;
    validate(cfg, p_in, p_out);

    const std::uint64_t s = cfg.group_size;
    const std::uint64_t n = static_cast<std::uint64_t>(cfg.groups) * s;
    Rng rng(cfg.seed);

    double w_in = 1.0, w_out = 1.0;
    if (weighted) {
        w_in = (1.0 - wmu) / (1.0 - cfg.mu);
        w_out = cfg.mu > 0.0 ? wmu / cfg.mu : 1.0;
        if (w_in < kWeightFloor) w_in = kWeightFloor;
        if (w_out < kWeightFloor) w_out = kWeightFloor;
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(cfg.degree * static_cast<double>(n) / 2.0 * 1.2));

    // intra-group pairs, one pair space per group
    const std::uint64_t group_pairs = s * (s - 1) / 2;
    for (std::uint32_t grp = 0; grp < cfg.groups; ++grp) {
        const std::uint64_t base = static_cast<std::uint64_t>(grp) * s;
        sample_pairs(group_pairs, p_in, rng, [&](std::uint64_t t) {
            auto [a, b] = decode_pair(t, s);
            edges.push_back({static_cast<NodeId>(base + a), static_cast<NodeId>(base + b),
                             w_in});
        });
    }

    // cross-group pairs: sample the full pair space and discard same-group
    // hits (they already had their own coin above)
    sample_pairs(n * (n - 1) / 2, p_out, rng, [&](std::uint64_t t) {
        auto [a, b] = decode_pair(t, n);
        if (a / s == b / s) return;
        edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), w_out});
    });

    PlantedGraph out;
    out.graph = Graph::from_edges(n, edges);
    std::vector<std::uint32_t> truth(n);
    for (std::uint64_t u = 0; u < n; ++u) truth[u] = static_cast<std::uint32_t>(u / s);
    out.truth = Partition(std::move(truth));
    out.p_in = p_in;
    out.p_out = p_out;
    out.communities_well_defined = p_in >= p_out;
    return out;
}

}  // namespace

PlantedGraph generate(const GeneratorConfig& cfg) { return generate_impl(cfg, false, 0.0); }

PlantedGraph generate_weighted(const GeneratorConfig& cfg, double wmu) {
    if (wmu < 0.0 || wmu >= 1.0) throw std::invalid_argument("wmu must be in [0, 1)");
    return generate_impl(cfg, true, wmu);
}

}  // namespace wlpa
