#include "wlpa/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace wlpa {

double modularity(const Graph& g, const Partition& p) {
    if (p.size() != g.node_count()) {
        throw std::invalid_argument("partition does not cover the graph");
    }
    const double W = g.total_weight();
    if (W <= 0.0) {
        throw std::invalid_argument("modularity is undefined on a graph with no edges");
    }

    Partition c = p.canonical();
    const std::size_t k = c.community_count();
    std::vector<double> intra(k, 0.0);     // W_c
    std::vector<double> strength(k, 0.0);  // S_c
    for (const auto& e : g.edges()) {
        if (c.community_of(e.u) == c.community_of(e.v)) intra[c.community_of(e.u)] += e.weight;
    }
    for (NodeId u = 0; u < g.node_count(); ++u) strength[c.community_of(u)] += g.strength(u);

    double q = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double frac = strength[i] / (2.0 * W);
        q += intra[i] / W - frac * frac;
    }
    return q;
}

ConfusionTable::ConfusionTable(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("partitions cover different node sets");
    }
    Partition ca = a.canonical(), cb = b.canonical();
    rows = ca.community_count();
    cols = cb.community_count();
    total = a.size();
    counts.assign(rows * cols, 0);
    row_sums.assign(rows, 0);
    col_sums.assign(cols, 0);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t r = ca.community_of(static_cast<NodeId>(i));
        std::size_t cc = cb.community_of(static_cast<NodeId>(i));
        ++counts[r * cols + cc];
        ++row_sums[r];
        ++col_sums[cc];
    }
}

double nmi(const Partition& a, const Partition& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw std::invalid_argument("NMI of an empty partition is undefined");
    }
    ConfusionTable t(a, b);
    const double n = static_cast<double>(t.total);

    double h_a = 0.0, h_b = 0.0, mi = 0.0;
    for (std::size_t i = 0; i < t.rows; ++i) {
        double pi = t.row_sums[i] / n;
        if (pi > 0.0) h_a -= pi * std::log(pi);
    }
    for (std::size_t j = 0; j < t.cols; ++j) {
        double pj = t.col_sums[j] / n;
        if (pj > 0.0) h_b -= pj * std::log(pj);
    }
    for (std::size_t i = 0; i < t.rows; ++i) {
        for (std::size_t j = 0; j < t.cols; ++j) {
            std::size_t nij = t.at(i, j);
            if (nij == 0) continue;
            mi += (nij / n) * std::log(nij * n / (static_cast<double>(t.row_sums[i]) *
                                                  static_cast<double>(t.col_sums[j])));
        }
    }

    // both entropies zero <=> both partitions are the single community, which
    // are identical groupings
    if (h_a + h_b == 0.0) return 1.0;
    double value = 2.0 * mi / (h_a + h_b);
    // clamp float fuzz at the boundaries
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

std::vector<CommunityFlags> strong_weak_check(const Graph& g, const Partition& p) {
    if (p.size() != g.node_count()) {
        throw std::invalid_argument("partition does not cover the graph");
    }
    Partition c = p.canonical();
    const std::size_t k = c.community_count();
    std::vector<CommunityFlags> flags(k);
    std::vector<long long> sum_in(k, 0), sum_out(k, 0);
    std::vector<bool> all_members_strong(k, true);

    for (NodeId u = 0; u < g.node_count(); ++u) {
        std::uint32_t cu = c.community_of(u);
        long long d_in = 0, d_out = 0;
        for (const auto& a : g.neighbors(u)) {
            if (c.community_of(a.neighbor) == cu) ++d_in; else ++d_out;
        }
        if (d_in <= d_out) all_members_strong[cu] = false;
        sum_in[cu] += d_in;
        sum_out[cu] += d_out;
        ++flags[cu].size;
    }
    for (std::size_t i = 0; i < k; ++i) {
        flags[i].strong = all_members_strong[i];
        flags[i].weak = sum_in[i] > sum_out[i];
    }
    return flags;
}

QualityReport evaluate_partition(const Graph& g, const Partition& p) {
    QualityReport r;
    r.modularity = modularity(g, p);
    r.communities = strong_weak_check(g, p);
    r.community_count = r.communities.size();
    for (const auto& f : r.communities) {
        ++r.size_histogram[f.size];
        if (f.strong) ++r.strong_count;
        if (f.weak) ++r.weak_count;
    }
    return r;
}

}  // namespace wlpa
