#include "wlpa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wlpa {

namespace {

bool parse_weight(const std::string& token, double& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + token.size() && std::isfinite(out);
}

}  // namespace

Graph Graph::from_edge_list(std::istream& in, LoadReport* report) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<WeightedEdge> raw;
    LoadReport local;

    auto intern = [&](const std::string& s) -> NodeId {
        auto [it, inserted] = ids.emplace(s, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tu, tv, tw;
        if (!(ss >> tu)) continue;  // blank
        if (tu[0] == '#') continue;
        if (!(ss >> tv)) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected `u v [w]`, got a single token");
        }
        double w = 1.0;
        if (ss >> tw) {
            if (!parse_weight(tw, w)) {
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": malformed weight `" + tw + "`");
            }
            if (w <= 0.0) {
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": non-positive weight " + tw);
            }
        }
        std::string extra;
        if (ss >> extra) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": trailing token `" + extra + "`");
        }
        ++local.lines_read;
        raw.push_back({intern(tu), intern(tv), w});
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.label_to_id_ = std::move(ids);
    g.build(g.labels_.size(), std::move(raw), &local);
    if (report) *report = local;
    return g;
}

Graph Graph::from_edge_list_file(const std::string& path, LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return from_edge_list(in, report);
}

Graph Graph::from_edges(std::size_t n, const std::vector<WeightedEdge>& edges,
                        LoadReport* report) {
    Graph g;
    g.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.labels_.push_back(std::to_string(i));
        g.label_to_id_.emplace(g.labels_.back(), static_cast<NodeId>(i));
    }
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range");
        if (e.weight <= 0.0) throw std::invalid_argument("non-positive edge weight");
    }
    LoadReport local;
    local.lines_read = edges.size();
    g.build(n, edges, &local);
    if (report) *report = local;
    return g;
}

void Graph::build(std::size_t n, std::vector<WeightedEdge> raw, LoadReport* report) {
    // normalize: orient u < v, drop loops, collapse duplicates by weight sum
    std::vector<WeightedEdge> cleaned;
    cleaned.reserve(raw.size());
    for (auto& e : raw) {
        if (e.u == e.v) {
            ++report->self_loops_dropped;
            continue;
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        cleaned.push_back(e);
    }
    std::sort(cleaned.begin(), cleaned.end(), [](const auto& a, const auto& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges_.clear();
    for (const auto& e : cleaned) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
            edges_.back().weight += e.weight;
            ++report->duplicates_collapsed;
        } else {
            edges_.push_back(e);
        }
    }

    total_weight_ = 0.0;
    weighted_ = false;
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges_) {
        total_weight_ += e.weight;
        if (e.weight != 1.0) weighted_ = true;
        ++deg[e.u];
        ++deg[e.v];
    }

    adj_offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) adj_offsets_[i + 1] = adj_offsets_[i] + deg[i];
    adj_.resize(adj_offsets_[n]);
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        adj_[cursor[e.u]++] = {e.v, e.weight, id};
        adj_[cursor[e.v]++] = {e.u, e.weight, id};
    }
    // canonical edge order already sorts each node's list by neighbor id for
    // the u side; the v side needs an explicit sort
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adj_.begin() + adj_offsets_[i], adj_.begin() + adj_offsets_[i + 1],
                  [](const AdjEntry& a, const AdjEntry& b) { return a.neighbor < b.neighbor; });
    }

    strengths_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k) {
            strengths_[i] += adj_[k].weight;
        }
    }
}

void Graph::check_node(NodeId u) const {
    if (u >= node_count()) {
        throw std::out_of_range("node id " + std::to_string(u) + " out of range [0, " +
                                std::to_string(node_count()) + ")");
    }
}

std::uint32_t Graph::degree(NodeId u) const {
    check_node(u);
    return static_cast<std::uint32_t>(adj_offsets_[u + 1] - adj_offsets_[u]);
}

double Graph::strength(NodeId u) const {
    check_node(u);
    return strengths_[u];
}

std::span<const AdjEntry> Graph::neighbors(NodeId u) const {
    check_node(u);
    return {adj_.data() + adj_offsets_[u], adj_offsets_[u + 1] - adj_offsets_[u]};
}

std::optional<NodeId> Graph::find_node(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    char buf[64];
    for (const auto& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v);
        if (g.weighted()) {
            std::snprintf(buf, sizeof buf, "%.17g", e.weight);
            out << ' ' << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i);
    return Partition(std::move(labels));
}

std::size_t Partition::community_count() const {
    std::unordered_map<std::uint32_t, std::uint32_t> seen;
    for (auto l : labels_) seen.emplace(l, 0);
    return seen.size();
}

Partition Partition::canonical() const {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::vector<std::uint32_t> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] =
            remap.emplace(labels_[i], static_cast<std::uint32_t>(remap.size()));
        out[i] = it->second;
    }
    return Partition(std::move(out));
}

std::vector<std::vector<NodeId>> Partition::communities() const {
    Partition c = canonical();
    std::vector<std::vector<NodeId>> rosters(c.community_count());
    for (std::size_t i = 0; i < c.labels_.size(); ++i) {
        rosters[c.labels_[i]].push_back(static_cast<NodeId>(i));
    }
    return rosters;
}

bool Partition::equivalent_to(const Partition& other) const {
    if (labels_.size() != other.labels_.size()) return false;
    std::unordered_map<std::uint32_t, std::uint32_t> fwd, bwd;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto a = labels_[i], b = other.labels_[i];
        auto [itf, insf] = fwd.emplace(a, b);
        if (!insf && itf->second != b) return false;
        auto [itb, insb] = bwd.emplace(b, a);
        if (!insb && itb->second != a) return false;
    }
    return true;
}

void save_partition(const Partition& p, const Graph& g, const std::string& path) {
    if (p.size() != g.node_count()) {
        throw std::invalid_argument("partition covers " + std::to_string(p.size()) +
                                    " nodes, graph has " + std::to_string(g.node_count()));
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    Partition c = p.canonical();
    for (NodeId u = 0; u < g.node_count(); ++u) {
        out << g.label(u) << ' ' << c.community_of(u) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Partition load_partition(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file: " + path);

    std::vector<std::uint32_t> labels(g.node_count(), 0);
    std::vector<bool> seen(g.node_count(), false);
    std::unordered_map<std::string, std::uint32_t> comm_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string node, comm;
        if (!(ss >> node)) continue;
        if (node[0] == '#') continue;
        if (!(ss >> comm)) {
            throw std::runtime_error("partition line " + std::to_string(line_no) +
                                     ": expected `node community`");
        }
        auto id = g.find_node(node);
        if (!id) {
            throw std::runtime_error("partition line " + std::to_string(line_no) + ": node `" +
                                     node + "` not present in the graph");
        }
        if (seen[*id]) {
            throw std::runtime_error("partition line " + std::to_string(line_no) + ": node `" +
                                     node + "` assigned twice");
        }
        auto [it, inserted] =
            comm_ids.emplace(comm, static_cast<std::uint32_t>(comm_ids.size()));
        labels[*id] = it->second;
        seen[*id] = true;
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (!seen[u]) {
            throw std::runtime_error("partition file is missing node `" + g.label(u) + "`");
        }
    }
    return Partition(std::move(labels));
}

}  // namespace wlpa
