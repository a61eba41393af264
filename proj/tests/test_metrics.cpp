#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpa/metrics.hpp"
#include "wlpa/rng.hpp"

using namespace wlpa;

namespace {

Partition random_partition(std::size_t n, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint32_t> labels(n);
    for (auto& l : labels) l = static_cast<std::uint32_t>(rng.bounded(k));
    return Partition(std::move(labels));
}

}  // namespace

TEST_CASE("modularity identities") {
    Graph g = oracles::random_graph(20, 0.25, 3, true);

    Partition one(std::vector<std::uint32_t>(g.node_count(), 0));
    CHECK(modularity(g, one) == doctest::Approx(0.0).epsilon(1e-12));

    Partition singles = Partition::singletons(g.node_count());
    double expected = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        double f = g.strength(u) / (2.0 * g.total_weight());
        expected -= f * f;
    }
    CHECK(modularity(g, singles) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(modularity(g, singles) < 0.0);
}

TEST_CASE("modularity matches the dense-matrix oracle on random inputs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = oracles::random_graph(18, 0.3, seed, seed % 2 == 0);
        Partition p = random_partition(g.node_count(), 1 + seed % 5, seed * 13 + 1);
        CHECK(modularity(g, p) == doctest::Approx(oracles::brute_modularity(g, p)).epsilon(1e-12));
    }
}

TEST_CASE("modularity is invariant under renaming, permutation and weight scaling") {
    Graph g = oracles::random_graph(16, 0.3, 9, true);
    Partition p = random_partition(g.node_count(), 3, 5);
    double q = modularity(g, p);

    // renaming
    std::vector<std::uint32_t> renamed(p.labels());
    for (auto& l : renamed) l = l * 17 + 3;
    CHECK(modularity(g, Partition(renamed)) == doctest::Approx(q).epsilon(1e-12));

    // consistent node permutation
    Rng rng(2);
    std::vector<NodeId> perm(g.node_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<NodeId>(i);
    rng.shuffle(perm);
    std::vector<WeightedEdge> mapped;
    for (const auto& e : g.edges()) mapped.push_back({perm[e.u], perm[e.v], e.weight});
    Graph h = Graph::from_edges(g.node_count(), mapped);
    std::vector<std::uint32_t> plabels(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) plabels[perm[u]] = p.community_of(u);
    CHECK(modularity(h, Partition(plabels)) == doctest::Approx(q).epsilon(1e-12));

    // uniform weight scaling
    std::vector<WeightedEdge> scaled;
    for (const auto& e : g.edges()) scaled.push_back({e.u, e.v, e.weight * 4.25});
    Graph gs = Graph::from_edges(g.node_count(), scaled);
    CHECK(modularity(gs, p) == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("modularity of an edgeless graph is an error, not a number") {
    Graph g = Graph::from_edges(4, {});
    CHECK_THROWS_AS(modularity(g, Partition::singletons(4)), std::invalid_argument);
    Graph k = oracles::random_graph(6, 0.5, 1);
    CHECK_THROWS_AS(modularity(k, Partition::singletons(2)), std::invalid_argument);
}

TEST_CASE("karate two-faction split has the known modularity") {
    Graph g = Graph::from_edge_list_file(std::string(WLPA_DATA_DIR) + "/karate.edges");
    Partition truth = load_partition(std::string(WLPA_DATA_DIR) + "/karate_truth.part", g);
    // value frozen from the dense-matrix oracle
    CHECK(modularity(g, truth) == doctest::Approx(0.3714661407).epsilon(1e-4));
    CHECK(oracles::brute_modularity(g, truth) == doctest::Approx(0.3714661407).epsilon(1e-9));
}

TEST_CASE("nmi basics") {
    Partition a(std::vector<std::uint32_t>{0, 0, 1, 1});
    Partition b(std::vector<std::uint32_t>{4, 4, 7, 7});
    CHECK(nmi(a, b) == doctest::Approx(1.0));

    Partition one(std::vector<std::uint32_t>{0, 0, 0, 0});
    Partition singles(std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(nmi(one, singles) == doctest::Approx(0.0));

    // {01|23} vs {01|2|3}: I = ln 2, H1 = ln 2, H2 = 1.5 ln 2 -> 2I/(H1+H2) = 0.8
    Partition c(std::vector<std::uint32_t>{0, 0, 1, 2});
    CHECK(nmi(a, c) == doctest::Approx(0.8).epsilon(1e-12));

    // identical one-community partitions: 0/0 case defined as 1
    CHECK(nmi(one, one) == doctest::Approx(1.0));
    // identical singleton partitions score 1 through the formula
    CHECK(nmi(singles, singles) == doctest::Approx(1.0));

    CHECK_THROWS_AS(nmi(a, Partition(std::vector<std::uint32_t>{0, 0, 1})),
                    std::invalid_argument);
}

TEST_CASE("nmi is symmetric and renaming-invariant") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Partition a = random_partition(40, 2 + seed % 4, seed);
        Partition b = random_partition(40, 2 + (seed * 3) % 5, seed + 99);
        double ab = nmi(a, b);
        CHECK(std::abs(ab - nmi(b, a)) < 1e-12);
        std::vector<std::uint32_t> renamed(b.labels());
        for (auto& l : renamed) l = 1000 - l * 2;
        CHECK(nmi(a, Partition(renamed)) == doctest::Approx(ab).epsilon(1e-12));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
    }
}

TEST_CASE("strong and weak community predicates") {
    // isolated triangle plus an attached outsider: {0,1,2} strong and weak
    Graph g = Graph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}});
    Partition p(std::vector<std::uint32_t>{0, 0, 0, 1});
    auto flags = strong_weak_check(g, p);
    REQUIRE(flags.size() == 2);
    CHECK(flags[0].strong);
    CHECK(flags[0].weak);
    // the singleton {3} has d_in = 0 < d_out = 1: neither
    CHECK_FALSE(flags[1].strong);
    CHECK_FALSE(flags[1].weak);
}

TEST_CASE("both bridge-linked triangles are strong communities") {
    Graph g = Graph::from_edges(
        6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
    Partition p(std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});
    auto flags = strong_weak_check(g, p);
    for (const auto& f : flags) {
        CHECK(f.strong);
        CHECK(f.weak);
    }
}

TEST_CASE("strong implies weak on random partitions") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = oracles::random_graph(25, 0.2, seed);
        Partition p = random_partition(g.node_count(), 2 + seed % 4, seed + 5);
        for (const auto& f : strong_weak_check(g, p)) {
            if (f.strong) CHECK(f.weak);
        }
    }
}

TEST_CASE("evaluate_partition aggregates the pieces") {
    Graph g = Graph::from_edges(
        6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
    Partition p(std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});
    QualityReport r = evaluate_partition(g, p);
    CHECK(r.community_count == 2);
    CHECK(r.strong_count == 2);
    CHECK(r.weak_count == 2);
    CHECK(r.size_histogram.at(3) == 2);
    CHECK(r.modularity == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
}
