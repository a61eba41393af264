#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpa/label_propagation.hpp"
#include "wlpa/metrics.hpp"

using namespace wlpa;

namespace {

Graph two_triangles() {
    return Graph::from_edges(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                 {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
}

std::vector<AdjEntry> entries(std::vector<std::pair<NodeId, double>> list) {
    std::vector<AdjEntry> out;
    EdgeId e = 0;
    for (auto [v, w] : list) out.push_back({v, w, e++});
    return out;
}

}  // namespace

TEST_CASE("restricted prefix takes half the neighbors, rounded up") {
    auto four = entries({{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(restricted_prefix_length(four, false, 4.0) == 2);
    auto three = entries({{1, 1}, {2, 1}, {3, 1}});
    CHECK(restricted_prefix_length(three, false, 3.0) == 2);
    auto one = entries({{1, 1}});
    CHECK(restricted_prefix_length(one, false, 1.0) == 1);
    CHECK(restricted_prefix_length({}, false, 0.0) == 0);
}

TEST_CASE("weighted restricted prefix stays within half the strength") {
    auto ranked = entries({{1, 1}, {2, 1}, {3, 1}, {4, 7}});
    CHECK(restricted_prefix_length(ranked, true, 10.0) == 3);  // 1+1+1 <= 5
    // a lone heavy edge still yields one candidate
    auto heavy = entries({{1, 9}});
    CHECK(restricted_prefix_length(heavy, true, 9.0) == 1);
    auto mixed = entries({{1, 6}, {2, 1}});
    CHECK(restricted_prefix_length(mixed, true, 7.0) == 1);  // 6 > 3.5 already
}

TEST_CASE("most frequent label follows counts, weights and the tie rule") {
    std::vector<NodeId> labels = {0, 10, 10, 20, 0};
    Rng rng(1);

    // neighbor labels {10, 10, 20}: strict majority
    auto cands = entries({{1, 1}, {2, 1}, {3, 1}});
    CHECK(most_frequent_label(cands, labels, false, rng, 99) == 10);

    // weighted criterion: label 20 carries more weight
    auto wcands = entries({{1, 1}, {2, 1}, {3, 5}});
    CHECK(most_frequent_label(wcands, labels, true, rng, 99) == 20);

    // empty candidate set keeps the current label
    CHECK(most_frequent_label({}, labels, false, rng, 7) == 7);

    // two-way tie resolves uniformly: frequency 0.5 +- 0.05 over 10k draws
    auto tie = entries({{1, 1}, {3, 1}});
    int picked_first = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
        if (most_frequent_label(tie, labels, false, rng, 99) == 10) ++picked_first;
    }
    double freq = static_cast<double>(picked_first) / trials;
    CHECK(freq > 0.45);
    CHECK(freq < 0.55);
}

TEST_CASE("stop criterion") {
    Graph tri2 = two_triangles();
    std::vector<NodeId> uniform = {7, 7, 7, 9, 9, 9};
    CHECK(stop_criterion(tri2, uniform, false));

    Graph path = Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
    std::vector<NodeId> labels = {0, 0, 2};  // node 2's only neighbor label is 0
    CHECK_FALSE(stop_criterion(path, labels, false));
    std::vector<NodeId> same = {5, 5, 5};
    CHECK(stop_criterion(path, same, false));

    // degree-0 nodes always satisfy it
    Graph iso = Graph::from_edges(3, {{0, 1, 1}});
    std::vector<NodeId> with_iso = {4, 4, 9};
    CHECK(stop_criterion(iso, with_iso, false));
}

TEST_CASE("lpa finds the two triangles") {
    Graph g = two_triangles();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        LpaConfig cfg;
        cfg.algorithm = Algorithm::lpa;
        cfg.seed = seed;
        DetectionResult r = lpa(g, cfg);
        CHECK(r.converged);
        CHECK(r.partition.community_count() == 2);
        CHECK(modularity(g, r.partition) == doctest::Approx(0.5));
    }
}

TEST_CASE("wlpa finds the two triangles") {
    Graph g = two_triangles();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        LpaConfig cfg;
        cfg.seed = seed;
        DetectionResult r = wlpa_leb(g, cfg);
        CHECK(r.converged);
        CHECK(r.partition.community_count() == 2);
        CHECK(modularity(g, r.partition) == doctest::Approx(0.5));
    }
}

TEST_CASE("degenerate inputs") {
    Graph empty = Graph::from_edges(0, {});
    CHECK(lpa(empty, {}).partition.size() == 0);
    CHECK(wlpa_leb(empty, {}).partition.size() == 0);

    Graph single = Graph::from_edges(1, {});
    DetectionResult r = lpa(single, {});
    CHECK(r.converged);
    CHECK(r.partition.community_count() == 1);

    // degree-0 nodes stay singleton communities
    Graph mixed = Graph::from_edges(4, {{0, 1, 1}});
    DetectionResult m = wlpa_leb(mixed, {});
    CHECK(m.partition.community_of(2) != m.partition.community_of(3));
    CHECK(m.partition.community_of(0) == m.partition.community_of(1));
}

TEST_CASE("fixed seed gives bit-identical results") {
    Graph g = oracles::random_graph(40, 0.12, 77);
    LpaConfig cfg;
    cfg.seed = 123;
    for (auto algo : {Algorithm::lpa, Algorithm::wlpa_leb}) {
        cfg.algorithm = algo;
        auto run = [&] {
            return algo == Algorithm::lpa ? lpa(g, cfg) : wlpa_leb(g, cfg);
        };
        DetectionResult a = run();
        DetectionResult b = run();
        CHECK(a.partition == b.partition);
        CHECK(a.passes == b.passes);
        CHECK(a.converged == b.converged);
    }
}

TEST_CASE("termination, soundness and label provenance on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = oracles::random_graph(4 + seed % 30, 0.18, seed);
        LpaConfig cfg;
        cfg.seed = seed * 3 + 1;
        cfg.max_passes = 50;
        cfg.algorithm = seed % 2 == 0 ? Algorithm::lpa : Algorithm::wlpa_leb;
        DetectionResult r =
            cfg.algorithm == Algorithm::lpa ? lpa(g, cfg) : wlpa_leb(g, cfg);
        CHECK(r.passes <= cfg.max_passes);
        if (r.converged) {
            std::vector<NodeId> labels(r.partition.labels().begin(),
                                       r.partition.labels().end());
            CHECK(stop_criterion(g, labels, g.weighted()));
        }
        // labels are only ever copied, never invented
        for (auto l : r.partition.labels()) CHECK(l < g.node_count());
    }
}

TEST_CASE("restriction is neutral when every edge has the same score") {
    // a cycle: all edges score identically by symmetry, so the restricted
    // set must be the first ceil(d/2) neighbors in ascending-id order
    const std::size_t n = 8;
    std::vector<WeightedEdge> edges;
    for (NodeId i = 0; i < n; ++i) {
        edges.push_back({i, static_cast<NodeId>((i + 1) % n), 1.0});
    }
    Graph g = Graph::from_edges(n, edges);
    WlpaContext ctx = prepare_wlpa_context(g, 2, false);
    for (NodeId u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        REQUIRE(ctx.restricted_len[u] == 1);  // ceil(2/2)
        CHECK(ctx.ranking[u][0].neighbor == nb[0].neighbor);
        CHECK(ctx.ranking[u][1].neighbor == nb[1].neighbor);
    }
}

TEST_CASE("parallel mode keeps the convergence contract") {
    Graph g = oracles::random_graph(200, 0.04, 5);
    LpaConfig cfg;
    cfg.seed = 9;
    cfg.threads = 4;
    DetectionResult r = wlpa_leb(g, cfg);
    CHECK(r.passes <= cfg.max_passes);
    if (r.converged) {
        std::vector<NodeId> labels(r.partition.labels().begin(), r.partition.labels().end());
        CHECK(stop_criterion(g, labels, g.weighted()));
    }
}

TEST_CASE("wlpa context reuse matches the self-computing overload") {
    Graph g = oracles::random_graph(50, 0.1, 21);
    LpaConfig cfg;
    cfg.seed = 4;
    WlpaContext ctx = prepare_wlpa_context(g, cfg.depth, g.weighted());
    DetectionResult a = wlpa_leb(g, cfg, ctx);
    DetectionResult b = wlpa_leb(g, cfg);
    CHECK(a.partition == b.partition);
    CHECK(a.passes == b.passes);
}

TEST_CASE("karate quality smoke check") {
    Graph g = Graph::from_edge_list_file(std::string(WLPA_DATA_DIR) + "/karate.edges");
    double best = -1.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        LpaConfig cfg;
        cfg.seed = seed;
        WlpaContext ctx = prepare_wlpa_context(g, cfg.depth, g.weighted());
        DetectionResult r = wlpa_leb(g, cfg, ctx);
        best = std::max(best, modularity(g, r.partition));
    }
    CHECK(best >= 0.35);
}
