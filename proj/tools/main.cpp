// Command-line front end: community detection runs, partition evaluation,
// planted-partition generation, scaling benchmarks, and betweenness dumps.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wlpa/betweenness.hpp"
#include "wlpa/generator.hpp"
#include "wlpa/girvan_newman.hpp"
#include "wlpa/graph.hpp"
#include "wlpa/label_propagation.hpp"
#include "wlpa/metrics.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace wlpa;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct RunRow {
    std::size_t run;
    std::uint64_t seed;
    double modularity;
    double nmi_value;  // NaN when no truth
    unsigned passes;
    bool converged;
    std::size_t communities;
    double wall_ms;
};

json aggregate(const std::vector<double>& values) {
    double best = values[0], worst = values[0], sum = 0.0;
    std::size_t best_run = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > best) {
            best = values[i];
            best_run = i;
        }
        if (values[i] < worst) worst = values[i];
        sum += values[i];
    }
    return json{{"best", best},
                {"average", sum / static_cast<double>(values.size())},
                {"worst", worst},
                {"best_run", best_run}};
}

json quality_to_json(const QualityReport& q) {
    json hist = json::object();
    for (const auto& [size, count] : q.size_histogram) hist[std::to_string(size)] = count;
    json comms = json::array();
    for (std::size_t i = 0; i < q.communities.size(); ++i) {
        comms.push_back({{"id", i},
                         {"size", q.communities[i].size},
                         {"strong", q.communities[i].strong},
                         {"weak", q.communities[i].weak}});
    }
    return json{{"modularity", q.modularity},
                {"community_count", q.community_count},
                {"size_histogram", hist},
                {"communities", comms},
                {"strong_communities", q.strong_count},
                {"weak_communities", q.weak_count}};
}

int cmd_detect(const std::string& algo, const std::string& graph_path,
               const std::string& truth_path, const std::string& out_dir, std::size_t runs,
               std::uint64_t seed, unsigned max_passes, unsigned depth, int threads,
               bool force_weighted, const std::string& format, bool timing,
               std::size_t gn_node_limit) {
    Graph g = Graph::from_edge_list_file(graph_path);
    fs::create_directories(out_dir);

    bool has_truth = !truth_path.empty();
    Partition truth;
    if (has_truth) truth = load_partition(truth_path, g);

    const bool weighted = force_weighted || g.weighted();

    std::vector<RunRow> rows;
    Partition best_partition;
    double best_q = -2.0;
    double setup_ms = 0.0;
    json extra;

    if (algo == "gn") {
        auto t0 = std::chrono::steady_clock::now();
        GnResult r = girvan_newman(g, gn_node_limit);
        double wall = timing ? ms_since(t0) : 0.0;
        double q = r.best_modularity;
        double nmi_value = has_truth ? nmi(r.best, truth) : std::nan("");
        rows.push_back({0, 0, q, nmi_value, 0, true, r.best.community_count(), wall});
        best_partition = r.best;
        best_q = q;

        json removals = json::array();
        for (const auto& rem : r.removals) {
            removals.push_back({{"u", g.label(rem.u)},
                                {"v", g.label(rem.v)},
                                {"betweenness", rem.betweenness},
                                {"components", rem.component_count},
                                {"modularity", rem.modularity}});
        }
        json dendro{{"initial_modularity", r.initial_modularity},
                    {"best_level", r.best_level},
                    {"best_modularity", r.best_modularity},
                    {"removals", removals}};
        std::ofstream dout(fs::path(out_dir) / "dendrogram.json");
        dout << dendro.dump(2) << '\n';
        extra["dendrogram_file"] = "dendrogram.json";
    } else {
        LpaConfig cfg;
        cfg.algorithm = algo == "lpa" ? Algorithm::lpa : Algorithm::wlpa_leb;
        cfg.depth = depth;
        cfg.max_passes = max_passes;
        cfg.threads = threads;
        cfg.weighted = weighted;

        WlpaContext ctx;
        if (cfg.algorithm == Algorithm::wlpa_leb) {
            auto t0 = std::chrono::steady_clock::now();
            ctx = prepare_wlpa_context(g, depth, weighted, threads);
            setup_ms = timing ? ms_since(t0) : 0.0;
        }

        for (std::size_t i = 0; i < runs; ++i) {
            cfg.seed = seed + i;  // per-run seed: master seed plus run index
            auto t0 = std::chrono::steady_clock::now();
            DetectionResult r = cfg.algorithm == Algorithm::lpa ? lpa(g, cfg)
                                                                : wlpa_leb(g, cfg, ctx);
            double wall = timing ? ms_since(t0) : 0.0;
            double q = modularity(g, r.partition);
            double nmi_value = has_truth ? nmi(r.partition, truth) : std::nan("");
            rows.push_back({i, cfg.seed, q, nmi_value, r.passes, r.converged,
                            r.partition.community_count(), wall});
            if (q > best_q) {
                best_q = q;
                best_partition = r.partition;
            }
        }
        if (cfg.algorithm == Algorithm::wlpa_leb) extra["betweenness_ms"] = setup_ms;
    }

    fs::path part_path = fs::path(out_dir) / "best_partition.txt";
    save_partition(best_partition, g, part_path.string());

    std::vector<double> qs, nmis;
    for (const auto& r : rows) {
        qs.push_back(r.modularity);
        if (has_truth) nmis.push_back(r.nmi_value);
    }

    fs::path report_path;
    if (format == "csv") {
        report_path = fs::path(out_dir) / "report.csv";
        std::ofstream out(report_path);
        out << "run,seed,modularity,nmi,passes,converged,communities,wall_ms\n";
        char buf[64];
        for (const auto& r : rows) {
            out << r.run << ',' << r.seed << ',';
            std::snprintf(buf, sizeof buf, "%.9g", r.modularity);
            out << buf << ',';
            if (has_truth) {
                std::snprintf(buf, sizeof buf, "%.9g", r.nmi_value);
                out << buf;
            }
            out << ',' << r.passes << ',' << (r.converged ? 1 : 0) << ',' << r.communities
                << ',';
            std::snprintf(buf, sizeof buf, "%.6g", r.wall_ms);
            out << buf << '\n';
        }
    } else {
        json jruns = json::array();
        for (const auto& r : rows) {
            json jr{{"run", r.run},          {"seed", r.seed},
                    {"modularity", r.modularity}, {"passes", r.passes},
                    {"converged", r.converged},   {"communities", r.communities},
                    {"wall_ms", r.wall_ms}};
            jr["nmi"] = has_truth ? json(r.nmi_value) : json(nullptr);
            jruns.push_back(jr);
        }
        json report{{"algorithm", algo},
                    {"graph", graph_path},
                    {"n", g.node_count()},
                    {"m", g.edge_count()},
                    {"weighted", weighted},
                    {"params",
                     {{"runs", runs},
                      {"seed", seed},
                      {"max_passes", max_passes},
                      {"depth", depth},
                      {"threads", threads}}},
                    {"runs", jruns},
                    {"aggregate", aggregate(qs)},
                    {"nmi_aggregate", has_truth ? aggregate(nmis) : json(nullptr)},
                    {"best_quality", quality_to_json(evaluate_partition(g, best_partition))},
                    {"partition_file", "best_partition.txt"}};
        for (auto& [k, v] : extra.items()) report[k] = v;
        report_path = fs::path(out_dir) / "report.json";
        std::ofstream out(report_path);
        out << report.dump(2) << '\n';
    }

    std::cout << "algo=" << algo << " runs=" << rows.size() << " best_modularity=" << best_q
              << " report=" << report_path.string() << '\n';
    return 0;
}

int cmd_eval(const std::string& graph_path, const std::string& part_path,
             const std::string& truth_path) {
    Graph g = Graph::from_edge_list_file(graph_path);
    Partition p = load_partition(part_path, g);
    QualityReport q = evaluate_partition(g, p);
    json out = quality_to_json(q);
    out["graph"] = graph_path;
    out["n"] = g.node_count();
    out["m"] = g.edge_count();
    out["weighted"] = g.weighted();
    if (!truth_path.empty()) {
        Partition truth = load_partition(truth_path, g);
        out["nmi"] = nmi(p, truth);
    } else {
        out["nmi"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_generate(bool preset_gn, std::uint32_t groups, std::uint32_t size, double degree,
                 double mu, double wmu, std::uint64_t seed, const std::string& out_dir) {
    GeneratorConfig cfg;
    if (preset_gn) {
        cfg.groups = 4;
        cfg.group_size = 32;
        cfg.degree = 16.0;
    } else {
        cfg.groups = groups;
        cfg.group_size = size;
        cfg.degree = degree;
    }
    cfg.mu = mu;
    cfg.seed = seed;

    PlantedGraph pg = wmu >= 0.0 ? generate_weighted(cfg, wmu) : generate(cfg);

    fs::create_directories(out_dir);
    fs::path graph_path = fs::path(out_dir) / "graph.edges";
    fs::path truth_path = fs::path(out_dir) / "truth.part";
    save_edge_list(pg.graph, graph_path.string());
    save_partition(pg.truth, pg.graph, truth_path.string());

    json summary{{"n", pg.graph.node_count()},   {"m", pg.graph.edge_count()},
                 {"p_in", pg.p_in},              {"p_out", pg.p_out},
                 {"graph_file", graph_path.string()}, {"truth_file", truth_path.string()}};
    if (!pg.communities_well_defined) {
        summary["warning"] = "p_in < p_out: no planted community structure";
        std::cerr << "warning: p_in < p_out, the mixing erases the planted communities\n";
    }
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_betweenness(const std::string& graph_path, unsigned depth, bool full, int threads,
                    const std::string& out_path) {
    Graph g = Graph::from_edge_list_file(graph_path);
    EdgeScores scores =
        full ? full_edge_betweenness(g) : local_edge_betweenness(g, depth, threads);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    char buf[32];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edges()[e];
        std::snprintf(buf, sizeof buf, "%.6f", scores.values[e]);
        out << g.label(edge.u) << ' ' << g.label(edge.v) << ' ' << buf << '\n';
    }
    std::cout << "wrote " << g.edge_count() << " edge scores to " << out_path << '\n';
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::vector<int>& threads_ladder,
              const std::vector<std::string>& algos, const std::vector<unsigned>& depths,
              bool betweenness_only, double degree, double mu, std::uint32_t group_size,
              std::uint64_t seed, std::size_t repeats, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << "n,algorithm,h,threads,wall_ms,passes\n";

    auto median_of = [&](auto&& fn) {
        std::vector<double> times;
        for (std::size_t r = 0; r < repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            fn();
            times.push_back(ms_since(t0));
        }
        std::sort(times.begin(), times.end());
        return times[times.size() / 2];
    };

    for (std::size_t n : sizes) {
      try {
        GeneratorConfig cfg;
        cfg.group_size = group_size;
        cfg.groups = static_cast<std::uint32_t>((n + group_size - 1) / group_size);
        if (cfg.groups < 2) cfg.groups = 2;
        cfg.degree = degree;
        cfg.mu = mu;
        cfg.seed = seed;
        PlantedGraph pg = generate(cfg);
        const Graph& g = pg.graph;
        std::cerr << "bench: n=" << g.node_count() << " m=" << g.edge_count() << '\n';

        for (int t : threads_ladder) {
            if (betweenness_only) {
                for (unsigned h : depths) {
                    double ms = median_of([&] { local_edge_betweenness(g, h, t); });
                    out << g.node_count() << ",betweenness," << h << ',' << t << ',' << ms
                        << ",0\n";
                    if (t == 1) {
                        double ref_ms =
                            median_of([&] { reference::local_edge_betweenness(g, h); });
                        out << g.node_count() << ",betweenness-ref," << h << ',' << t << ','
                            << ref_ms << ",0\n";
                    }
                    out.flush();
                }
                continue;
            }
            for (const auto& algo : algos) {
                unsigned passes = 0;
                double ms = 0.0;
                if (algo == "lpa") {
                    LpaConfig rc;
                    rc.algorithm = Algorithm::lpa;
                    rc.seed = seed;
                    rc.threads = t;
                    ms = median_of([&] { passes = lpa(g, rc).passes; });
                    out << g.node_count() << ",lpa,0," << t << ',' << ms << ',' << passes
                        << '\n';
                } else {
                    for (unsigned h : depths) {
                        LpaConfig rc;
                        rc.seed = seed;
                        rc.depth = h;
                        rc.threads = t;
                        ms = median_of([&] { passes = wlpa_leb(g, rc).passes; });
                        out << g.node_count() << ",wlpa-leb," << h << ',' << t << ',' << ms
                            << ',' << passes << '\n';
                    }
                }
                out.flush();
            }
        }
      } catch (const std::exception& ex) {
          // a failed size must not take down the remaining rows
          std::cerr << "bench: skipping n=" << n << ": " << ex.what() << '\n';
      }
    }
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection by betweenness-guided label propagation"};
    app.require_subcommand(1);

    // detect
    std::string d_algo = "wlpa-leb", d_graph, d_truth, d_out, d_format = "json";
    std::size_t d_runs = 100, d_gn_limit = 10000;
    std::uint64_t d_seed = 1;
    unsigned d_max_passes = 100, d_depth = 2;
    int d_threads = 1;
    bool d_weighted = false, d_no_timing = false;
    auto* detect = app.add_subcommand("detect", "run community detection, best of R runs");
    detect->add_option("--algo", d_algo)->check(CLI::IsMember({"lpa", "wlpa-leb", "gn"}));
    detect->add_option("--graph", d_graph, "edge list file")->required();
    detect->add_option("--truth", d_truth, "ground-truth partition for NMI");
    detect->add_option("--runs", d_runs)->check(CLI::PositiveNumber);
    detect->add_option("--seed", d_seed, "master seed; run i uses seed + i");
    detect->add_option("--max-passes", d_max_passes)->check(CLI::PositiveNumber);
    detect->add_option("--depth", d_depth, "betweenness truncation depth")
        ->check(CLI::PositiveNumber);
    detect->add_option("--threads", d_threads, "1 = deterministic, 0 = OpenMP default");
    detect->add_flag("--weighted", d_weighted, "force weighted label scoring");
    detect->add_option("--out", d_out, "output directory")->required();
    detect->add_option("--format", d_format)->check(CLI::IsMember({"json", "csv"}));
    detect->add_flag("--no-timing", d_no_timing, "zero wall-clock fields (reproducible bytes)");
    detect->add_option("--gn-node-limit", d_gn_limit, "size guard for --algo gn");

    // eval
    std::string e_graph, e_part, e_truth;
    auto* eval = app.add_subcommand("eval", "evaluate a partition file");
    eval->add_option("--graph", e_graph)->required();
    eval->add_option("--partition", e_part)->required();
    eval->add_option("--truth", e_truth);

    // generate
    bool g_preset = false;
    std::uint32_t g_groups = 4, g_size = 32;
    double g_degree = 16.0, g_mu = 0.1, g_wmu = -1.0;
    std::uint64_t g_seed = 1;
    std::string g_out;
    auto* gen = app.add_subcommand("generate", "planted-partition benchmark graph");
    gen->add_flag("--preset-gn,--preset", g_preset, "4 groups of 32, expected degree 16");
    gen->add_option("--groups", g_groups);
    gen->add_option("--size", g_size, "nodes per group");
    gen->add_option("--degree", g_degree, "expected node degree");
    gen->add_option("--mu", g_mu, "fraction of a node's edges leaving its group");
    gen->add_option("--wmu", g_wmu, "weighted mixing; enables weighted output");
    gen->add_option("--seed", g_seed);
    gen->add_option("--out", g_out, "output directory")->required();

    // betweenness
    std::string b_graph, b_out;
    unsigned b_depth = 2;
    int b_threads = 1;
    bool b_full = false;
    auto* betw = app.add_subcommand("betweenness", "dump per-edge betweenness scores");
    betw->add_option("--graph", b_graph)->required();
    betw->add_option("--depth", b_depth)->check(CLI::PositiveNumber);
    betw->add_flag("--full", b_full, "exact betweenness over all pairs");
    betw->add_option("--threads", b_threads);
    betw->add_option("--out", b_out)->required();

    // bench
    std::vector<std::size_t> n_sizes;
    std::vector<int> n_threads{1};
    std::vector<std::string> n_algos{"lpa", "wlpa-leb"};
    std::vector<unsigned> n_depths{2};
    bool n_betweenness_only = false;
    double n_degree = 15.0, n_mu = 0.4;
    std::uint32_t n_group = 50;
    std::uint64_t n_seed = 1;
    std::size_t n_repeats = 1;
    std::string n_out;
    auto* bench = app.add_subcommand("bench", "scaling benchmark on planted graphs");
    bench->add_option("--sizes", n_sizes, "node counts")->required()->delimiter(',');
    bench->add_option("--threads", n_threads)->delimiter(',');
    bench->add_option("--algos", n_algos)->delimiter(',');
    bench->add_option("--depths", n_depths)->delimiter(',');
    bench->add_flag("--betweenness-only", n_betweenness_only,
                    "time the betweenness phase alone (plus the serial reference)");
    bench->add_option("--degree", n_degree);
    bench->add_option("--mu", n_mu);
    bench->add_option("--group-size", n_group);
    bench->add_option("--seed", n_seed);
    bench->add_option("--repeats", n_repeats, "median over this many repeats")
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", n_out, "CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed()) {
            return cmd_detect(d_algo, d_graph, d_truth, d_out, d_runs, d_seed, d_max_passes,
                              d_depth, d_threads, d_weighted, d_format, !d_no_timing,
                              d_gn_limit);
        }
        if (eval->parsed()) return cmd_eval(e_graph, e_part, e_truth);
        if (gen->parsed()) {
            return cmd_generate(g_preset, g_groups, g_size, g_degree, g_mu, g_wmu, g_seed,
                                g_out);
        }
        if (betw->parsed()) return cmd_betweenness(b_graph, b_depth, b_full, b_threads, b_out);
        if (bench->parsed()) {
            return cmd_bench(n_sizes, n_threads, n_algos, n_depths, n_betweenness_only,
                             n_degree, n_mu, n_group, n_seed, n_repeats, n_out);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
