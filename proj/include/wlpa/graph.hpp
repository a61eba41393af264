#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace wlpa {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Canonical undirected edge: u < v, weight > 0.
struct WeightedEdge {
    NodeId u;
    NodeId v;
    double weight;
};

/// One incident edge as seen from a node.
struct AdjEntry {
    NodeId neighbor;
    double weight;
    EdgeId edge;
};

/// What normalization did to the raw input.
struct LoadReport {
    std::size_t lines_read = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

/// Immutable undirected weighted simple graph in adjacency-list form.
///
/// Construction normalizes raw edges: direction is discarded, self-loops are
/// dropped, and parallel edges (including a pair listed both ways) collapse
/// into one edge whose weight is the sum. External node labels are arbitrary
/// strings; dense ids are assigned in first-appearance order, so identical
/// input always yields the identical graph. After construction the graph
/// never changes and is safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Parse a whitespace-separated edge-list stream: `u v [w]` per line,
    /// `#` starts a comment line, blank lines ignored, weight defaults to 1.
    static Graph from_edge_list(std::istream& in, LoadReport* report = nullptr);
    static Graph from_edge_list_file(const std::string& path, LoadReport* report = nullptr);

    /// Build from in-memory edges over dense ids in [0, n); the same
    /// normalization (loop dropping, duplicate collapsing) applies.
    /// Labels default to the decimal form of each id.
    static Graph from_edges(std::size_t n, const std::vector<WeightedEdge>& edges,
                            LoadReport* report = nullptr);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    double total_weight() const { return total_weight_; }

    /// True if any edge weight differs from 1.
    bool weighted() const { return weighted_; }

    /// Number of incident edges of u.
    std::uint32_t degree(NodeId u) const;
    /// Sum of incident edge weights of u.
    double strength(NodeId u) const;

    /// Incident (neighbor, weight, edge-id) triples of u, neighbor ascending.
    std::span<const AdjEntry> neighbors(NodeId u) const;

    /// Canonical edge list, sorted by (u, v).
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    const std::string& label(NodeId u) const { return labels_[u]; }
    std::optional<NodeId> find_node(const std::string& label) const;

private:
    void build(std::size_t n, std::vector<WeightedEdge> raw, LoadReport* report);
    void check_node(NodeId u) const;

    std::vector<WeightedEdge> edges_;       // canonical, sorted by (u, v)
    std::vector<std::size_t> adj_offsets_;  // size n + 1
    std::vector<AdjEntry> adj_;             // size 2m
    std::vector<double> strengths_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_to_id_;
    double total_weight_ = 0.0;
    bool weighted_ = false;
};

/// Write `label_u label_v [w]` lines in canonical edge order; the weight
/// column is present only for weighted graphs and round-trips exactly.
void save_edge_list(const Graph& g, const std::string& path);

/// Node -> community assignment. Community ids are opaque 32-bit labels;
/// any relabeling that preserves the grouping describes the same partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {}

    static Partition singletons(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    std::uint32_t community_of(NodeId u) const { return labels_[u]; }
    const std::vector<std::uint32_t>& labels() const { return labels_; }

    std::size_t community_count() const;

    /// Same grouping with labels renumbered 0..C-1 in first-appearance order.
    Partition canonical() const;

    /// Member lists indexed by canonical community id.
    std::vector<std::vector<NodeId>> communities() const;

    /// True if the two partitions induce the same grouping (equal up to
    /// community renaming).
    bool equivalent_to(const Partition& other) const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<std::uint32_t> labels_;
};

/// Text format: one `external_node_label community_id` line per node, in
/// dense-id order. Loading validates that the file covers exactly the nodes
/// of g; community ids round-trip up to renaming.
void save_partition(const Partition& p, const Graph& g, const std::string& path);
Partition load_partition(const std::string& path, const Graph& g);

}  // namespace wlpa
