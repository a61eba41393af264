#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wlpa/graph.hpp"

namespace wlpa {

/// Newman-Girvan modularity of a partition, weighted form:
///   Q = sum_c [ W_c / W - (S_c / 2W)^2 ]
/// with W_c the intra-community edge weight of c, S_c the total strength of
/// its members and W the graph's total edge weight. Reduces to the edge-count
/// form on unweighted graphs. Throws std::invalid_argument when the graph has
/// no edges (Q is undefined) or the partition does not cover the graph.
double modularity(const Graph& g, const Partition& p);

/// Contingency counts between two partitions over the same node set.
struct ConfusionTable {
    ConfusionTable(const Partition& a, const Partition& b);

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t total = 0;
    std::vector<std::size_t> counts;      // rows x cols
    std::vector<std::size_t> row_sums;
    std::vector<std::size_t> col_sums;

    std::size_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }
};

/// Normalized mutual information between two disjoint partitions of the same
/// node set: 2 I(a;b) / (H(a) + H(b)), natural-log entropies from the
/// contingency table. When both entropies are zero the partitions are the
/// identical one-community grouping and NMI is defined as 1. Throws
/// std::invalid_argument on mismatched node sets or empty inputs.
double nmi(const Partition& a, const Partition& b);

/// Community cohesion predicates over edge counts (not weights): a community
/// is strong when every member has strictly more intra- than extra-community
/// edges, weak when the members' summed intra count exceeds the summed extra
/// count. Strong implies weak.
struct CommunityFlags {
    std::size_t size = 0;
    bool strong = false;
    bool weak = false;
};

/// Flags indexed by canonical community id of p.
std::vector<CommunityFlags> strong_weak_check(const Graph& g, const Partition& p);

/// Everything the evaluation surfaces report about one partition.
struct QualityReport {
    double modularity = 0.0;
    std::size_t community_count = 0;
    std::map<std::size_t, std::size_t> size_histogram;
    std::vector<CommunityFlags> communities;
    std::size_t strong_count = 0;
    std::size_t weak_count = 0;
};

QualityReport evaluate_partition(const Graph& g, const Partition& p);

}  // namespace wlpa
