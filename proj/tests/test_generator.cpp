#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "wlpa/generator.hpp"
#include "wlpa/label_propagation.hpp"
#include "wlpa/metrics.hpp"

using namespace wlpa;

TEST_CASE("preset shape: 4 groups of 32 with expected degree near 16") {
    GeneratorConfig cfg;  // defaults are the 128-node benchmark preset
    double degree_sum = 0.0;
    std::size_t node_sum = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        PlantedGraph pg = generate(cfg);
        CHECK(pg.graph.node_count() == 128);
        CHECK(pg.truth.community_count() == 4);
        for (const auto& roster : pg.truth.communities()) CHECK(roster.size() == 32);
        node_sum += pg.graph.node_count();
        degree_sum += 2.0 * static_cast<double>(pg.graph.edge_count());
    }
    double mean_degree = degree_sum / static_cast<double>(node_sum);
    // binomial standard error of the mean over 20 seeds x 128 nodes
    double sigma = std::sqrt(16.0 / static_cast<double>(node_sum));
    CHECK(std::abs(mean_degree - 16.0) <= 3.0 * sigma + 1e-9);
}

TEST_CASE("mu zero keeps every edge inside its group") {
    GeneratorConfig cfg;
    cfg.mu = 0.0;
    cfg.seed = 11;
    PlantedGraph pg = generate(cfg);
    for (const auto& e : pg.graph.edges()) {
        CHECK(pg.truth.community_of(e.u) == pg.truth.community_of(e.v));
    }
    CHECK(pg.p_out == 0.0);
}

TEST_CASE("realized cross-edge fraction tracks mu") {
    GeneratorConfig cfg;
    cfg.mu = 0.1;
    double cross = 0.0, total = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        PlantedGraph pg = generate(cfg);
        for (const auto& e : pg.graph.edges()) {
            total += 1.0;
            if (pg.truth.community_of(e.u) != pg.truth.community_of(e.v)) cross += 1.0;
        }
    }
    CHECK(std::abs(cross / total - 0.1) < 0.03);
}

TEST_CASE("fixed seed reproduces the graph bit-for-bit") {
    GeneratorConfig cfg;
    cfg.mu = 0.25;
    cfg.seed = 42;
    PlantedGraph a = generate(cfg);
    PlantedGraph b = generate(cfg);
    REQUIRE(a.graph.edge_count() == b.graph.edge_count());
    for (std::size_t e = 0; e < a.graph.edge_count(); ++e) {
        CHECK(a.graph.edges()[e].u == b.graph.edges()[e].u);
        CHECK(a.graph.edges()[e].v == b.graph.edges()[e].v);
        CHECK(a.graph.edges()[e].weight == b.graph.edges()[e].weight);
    }
    CHECK(a.truth == b.truth);
}

TEST_CASE("infeasible probabilities are rejected with the offending value") {
    GeneratorConfig cfg;
    cfg.groups = 2;
    cfg.group_size = 4;
    cfg.degree = 6.0;  // p_in = 6 * 0.9 / 3 = 1.8
    cfg.mu = 0.1;
    CHECK_THROWS_WITH_AS(generate(cfg), doctest::Contains("p_in"), std::invalid_argument);

    GeneratorConfig bad;
    bad.mu = 1.0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    GeneratorConfig tiny;
    tiny.groups = 1;
    CHECK_THROWS_AS(generate(tiny), std::invalid_argument);
}

TEST_CASE("community condition flag flips when p_in < p_out") {
    GeneratorConfig cfg;
    cfg.mu = 0.1;
    CHECK(generate(cfg).communities_well_defined);
    // mu >= (n - s) / (n - 1) pushes p_out above p_in
    cfg.mu = 0.8;
    CHECK_FALSE(generate(cfg).communities_well_defined);
}

TEST_CASE("weighted generator: wmu equal to mu gives unit weights") {
    GeneratorConfig cfg;
    cfg.mu = 0.3;
    cfg.seed = 5;
    PlantedGraph pg = generate_weighted(cfg, 0.3);
    for (const auto& e : pg.graph.edges()) CHECK(e.weight == 1.0);

    // same topology as the unweighted draw with the same seed
    PlantedGraph plain = generate(cfg);
    REQUIRE(plain.graph.edge_count() == pg.graph.edge_count());
    for (std::size_t e = 0; e < pg.graph.edge_count(); ++e) {
        CHECK(plain.graph.edges()[e].u == pg.graph.edges()[e].u);
        CHECK(plain.graph.edges()[e].v == pg.graph.edges()[e].v);
    }
}

TEST_CASE("weighted generator: wmu zero floors cross weights at 1e-9") {
    GeneratorConfig cfg;
    cfg.mu = 0.4;
    cfg.seed = 3;
    PlantedGraph pg = generate_weighted(cfg, 0.0);
    std::size_t cross_edges = 0;
    for (const auto& e : pg.graph.edges()) {
        bool cross = pg.truth.community_of(e.u) != pg.truth.community_of(e.v);
        if (cross) {
            ++cross_edges;
            CHECK(e.weight == 1e-9);
        } else {
            CHECK(e.weight > 1.0);  // (1 - 0) / (1 - 0.4)
        }
    }
    CHECK(cross_edges > 0);
}

TEST_CASE("realized cross strength fraction tracks wmu") {
    GeneratorConfig cfg;
    cfg.mu = 0.5;
    double cross = 0.0, total = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        PlantedGraph pg = generate_weighted(cfg, 0.1);
        for (const auto& e : pg.graph.edges()) {
            total += e.weight;
            if (pg.truth.community_of(e.u) != pg.truth.community_of(e.v)) cross += e.weight;
        }
    }
    CHECK(std::abs(cross / total - 0.1) < 0.03);
}

TEST_CASE("a detector that returns the planted partition scores NMI 1 at mu 0") {
    GeneratorConfig cfg;
    cfg.mu = 0.0;
    cfg.seed = 2;
    PlantedGraph pg = generate(cfg);
    LpaConfig run;
    run.seed = 1;
    DetectionResult r = wlpa_leb(pg.graph, run);
    CHECK(nmi(r.partition, pg.truth) == doctest::Approx(1.0));
}
