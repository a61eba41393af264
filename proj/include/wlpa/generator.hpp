#pragma once

#include <cstdint>

#include "wlpa/graph.hpp"

namespace wlpa {

/// Planted l-partition parameters: `groups` equal groups of `group_size`
/// nodes, target expected degree `degree`, and mixing `mu` = expected
/// fraction of a node's edges that leave its group. The derived pair
/// probabilities are
///   p_in  = degree * (1 - mu) / (group_size - 1)
///   p_out = degree * mu / (n - group_size)
/// and must each be <= 1.
struct GeneratorConfig {
    std::uint32_t groups = 4;
    std::uint32_t group_size = 32;
    double degree = 16.0;
    double mu = 0.1;
    std::uint64_t seed = 1;
};

struct PlantedGraph {
    Graph graph;
    Partition truth;
    double p_in = 0.0;
    double p_out = 0.0;
    /// Community structure exists only while p_in >= p_out; callers should
    /// surface a warning otherwise.
    bool communities_well_defined = true;
};

/// Independent coin per unordered node pair: p_in within a group, p_out
/// across groups; all weights 1. Implemented with geometric gap sampling so
/// the cost is proportional to the number of edges drawn, not pairs. A fixed
/// seed reproduces the graph bit-for-bit.
PlantedGraph generate(const GeneratorConfig& cfg);

/// Same topology as generate (identical seed -> identical edges), with edge
/// weights chosen so the expected fraction of a node's strength on
/// cross-group edges is wmu: intra edges carry (1-wmu)/(1-mu), cross edges
/// wmu/mu, floored at 1e-9 so weights stay positive. With wmu == mu every
/// weight is exactly 1.
PlantedGraph generate_weighted(const GeneratorConfig& cfg, double wmu);

}  // namespace wlpa
