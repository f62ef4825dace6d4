#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnd/baselines.hpp"
#include "gnd/cost.hpp"
#include "gnd/dismantle.hpp"
#include "gnd/graph.hpp"
#include "gnd/output.hpp"

namespace {

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\nrun with --help for usage\n";
    return 2;
}

std::filesystem::path summary_path_for(const std::filesystem::path& out) {
    std::filesystem::path json_path = out;
    json_path.replace_extension(".json");
    if (json_path == out) json_path += ".json";
    return json_path;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost-aware network dismantling: spectral node-weighted cuts, reinsertion"
                 " refinement, and baselines"};

    std::string input, weights_path, out_path, plot_path;
    std::string cost_name = "degree", method, cover_name = "wvc", recompute_name = "current";
    double target_fraction = 0.01;
    std::int64_t target_size_opt = -1;
    std::uint64_t seed = 1;
    std::int64_t seeds = 1;
    double epsilon = 1.0;
    std::int64_t min_iters = 1000;

    app.add_option("--input", input, "edge list file (one 'u v' pair per line)")->required();
    app.add_option("--weights", weights_path, "per-node weight file, requires --cost file");
    app.add_option("--cost", cost_name, "removal cost model")
        ->check(CLI::IsMember({"unit", "degree", "file"}))
        ->capture_default_str();
    app.add_option("--method", method, "dismantling strategy")
        ->required()
        ->check(CLI::IsMember({"gnd", "gndr", "random", "degree-attack"}));
    auto* tf_opt = app.add_option("--target-fraction", target_fraction,
                                  "dismantle until every component has at most"
                                  " ceil(fraction*n) nodes")
                       ->capture_default_str();
    auto* ts_opt = app.add_option("--target-size", target_size_opt,
                                  "dismantle until every component has at most this many nodes");
    tf_opt->excludes(ts_opt);
    ts_opt->excludes(tf_opt);
    app.add_option("--seed", seed, "rng seed")->capture_default_str();
    app.add_option("--seeds", seeds, "number of seeds to aggregate (random method only)")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon, "power iteration budget exponent")->capture_default_str();
    app.add_option("--min-iters", min_iters, "power iteration floor")->capture_default_str();
    app.add_option("--out", out_path, "trajectory csv path; a json summary lands next to it")
        ->required();
    app.add_option("--plot", plot_path, "optional svg plot path");
    app.add_option("--cover", cover_name, "boundary fine-tuning strategy")
        ->check(CLI::IsMember({"wvc", "naive"}))
        ->capture_default_str();
    app.add_option("--weight-recompute", recompute_name,
                   "degree weights inside the spectral objective track the current"
                   " subgraph or stay at the input graph's degrees")
        ->check(CLI::IsMember({"current", "original"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    if (cost_name == "file" && weights_path.empty())
        return usage_error("--cost file requires --weights");
    if (cost_name != "file" && !weights_path.empty())
        return usage_error("--weights only makes sense with --cost file");
    if (seeds < 1) return usage_error("--seeds must be at least 1");
    if (seeds > 1 && method != "random")
        return usage_error("--seeds above 1 is only supported with --method random");
    if (ts_opt->count() > 0 && target_size_opt < 1)
        return usage_error("--target-size must be at least 1");
    if (tf_opt->count() > 0 && !(target_fraction > 0.0 && target_fraction <= 1.0))
        return usage_error("--target-fraction must be in (0, 1]");
    if (min_iters < 1) return usage_error("--min-iters must be at least 1");
    if (!(epsilon >= 0.0)) return usage_error("--epsilon must be non-negative");

    try {
        gnd::ParseResult loaded = gnd::load_edge_list(input);
        const gnd::Graph& g = loaded.graph;
        if (loaded.stats.self_loops_dropped > 0)
            std::cerr << "warning: dropped " << loaded.stats.self_loops_dropped
                      << " self-loop(s) from " << input << "\n";
        if (loaded.stats.duplicate_edges_collapsed > 0)
            std::cerr << "warning: collapsed " << loaded.stats.duplicate_edges_collapsed
                      << " duplicate edge(s) from " << input << "\n";

        gnd::CostModel model = gnd::CostModel::unit();
        if (cost_name == "degree") {
            model = gnd::CostModel::degree();
        } else if (cost_name == "file") {
            model = gnd::CostModel::external(gnd::load_weights(weights_path));
        }

        std::size_t target_size;
        if (ts_opt->count() > 0) {
            target_size = static_cast<std::size_t>(target_size_opt);
        } else {
            const double raw = std::ceil(target_fraction * static_cast<double>(g.node_count()));
            target_size = std::max<std::size_t>(1, static_cast<std::size_t>(raw));
        }

        gnd::GndOptions opts;
        opts.spectral.epsilon = epsilon;
        opts.spectral.min_iterations = static_cast<std::size_t>(min_iters);
        opts.spectral.rng_seed = seed;
        opts.cover = cover_name == "naive" ? gnd::CoverStrategy::Naive : gnd::CoverStrategy::Wvc;
        opts.weight_recompute = recompute_name == "original" ? gnd::WeightRecompute::Original
                                                             : gnd::WeightRecompute::Current;

        const double normalizer = model.normalizer(g);
        const std::filesystem::path out_file(out_path);
        const std::filesystem::path json_file = summary_path_for(out_file);
        const auto t0 = std::chrono::steady_clock::now();

        if (method == "random" && seeds > 1) {
            // aggregate run: one plan per seed, mean/std curve over the cost grid
            std::vector<std::vector<gnd::TrajectoryPoint>> curves;
            curves.reserve(static_cast<std::size_t>(seeds));
            double total_cost_sum = 0.0;
            for (std::int64_t i = 0; i < seeds; ++i) {
                gnd::DismantlingPlan plan =
                    gnd::random_removal_plan(g, target_size, seed + static_cast<std::uint64_t>(i), model);
                for (const gnd::Removal& r : plan.removals) total_cost_sum += r.cost;
                curves.push_back(gnd::fragmentation_curve(g, plan, model));
            }
            gnd::AggregateCurve agg = gnd::aggregate_curves(curves);
            const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            std::ofstream csv(out_file, std::ios::binary);
            if (!csv) throw std::runtime_error("cannot open " + out_file.string() + " for writing");
            gnd::write_aggregate_csv(csv, agg);
            if (!csv) throw std::runtime_error("failed writing " + out_file.string());

            nlohmann::ordered_json j;
            j["method"] = "baseline-random";
            j["target_size"] = target_size;
            j["cost_model"] = model.name();
            j["seed"] = seed;
            j["seeds"] = seeds;
            j["epsilon"] = epsilon;
            j["mean_total_cost"] = total_cost_sum / static_cast<double>(seeds);
            j["mean_normalized_cost"] = total_cost_sum / static_cast<double>(seeds) / normalizer;
            j["wall_time_seconds"] = wall;
            write_text_file(json_file, j.dump(2) + "\n");

            if (!plot_path.empty()) {
                std::vector<gnd::TrajectoryPoint> mean_curve(agg.cost.size());
                for (std::size_t i = 0; i < agg.cost.size(); ++i)
                    mean_curve[i] = {i, agg.cost[i], agg.mean[i], 0};
                write_text_file(plot_path, gnd::curve_svg(mean_curve));
            }
            return 0;
        }

        gnd::DismantlingPlan plan;
        if (method == "gnd") {
            plan = gnd::gnd(g, model, target_size, opts);
        } else if (method == "gndr") {
            plan = gnd::gndr(g, gnd::gnd(g, model, target_size, opts), model, target_size);
        } else if (method == "random") {
            plan = gnd::random_removal_plan(g, target_size, seed, model);
        } else {
            plan = gnd::adaptive_degree_plan(g, target_size, model);
        }
        std::vector<gnd::TrajectoryPoint> curve = gnd::fragmentation_curve(g, plan, model);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::ofstream csv(out_file, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot open " + out_file.string() + " for writing");
        gnd::write_curve_csv(csv, plan, curve, normalizer);
        if (!csv) throw std::runtime_error("failed writing " + out_file.string());

        gnd::SummaryInfo info;
        info.method = plan.method;
        info.target_size = target_size;
        info.cost_model = model.name();
        info.seed = seed;
        info.epsilon = epsilon;
        info.wall_time_seconds = wall;
        write_text_file(json_file, gnd::summary_json(info, plan, normalizer));

        if (!plot_path.empty()) write_text_file(plot_path, gnd::curve_svg(curve));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
