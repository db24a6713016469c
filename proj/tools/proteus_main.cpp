// proteus: regime-switching market data stream generator.
//
// Subcommands mirror the pipeline stages: fit, gen-map, simulate,
// featurize, analyze, plus verify for manifest checks. Every command
// writes a manifest of its outputs and re-verifies it before exiting.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "proteus/analysis/embedding.hpp"
#include "proteus/analysis/kmeans.hpp"
#include "proteus/analysis/stats.hpp"
#include "proteus/econometrics/fit.hpp"
#include "proteus/io/bars.hpp"
#include "proteus/io/csv.hpp"
#include "proteus/io/manifest.hpp"
#include "proteus/io/map_io.hpp"
#include "proteus/io/model_io.hpp"
#include "proteus/io/stream_io.hpp"
#include "proteus/marketfeatures/featurize.hpp"
#include "proteus/regimegen/stream.hpp"
#include "proteus/regimegen/transition.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace proteus;

namespace {

struct GridRange {
    int lo = 0;
    int hi = 0;
};

GridRange parse_range(const std::string& text, const std::string& flag) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError(flag, "expected a range like 0..5, got '" + text + "'");
    GridRange range;
    range.lo = std::stoi(text.substr(0, pos));
    range.hi = std::stoi(text.substr(pos + 2));
    if (range.lo > range.hi)
        throw CLI::ValidationError(flag, "range must be ascending: '" + text + "'");
    return range;
}

std::string config_digest(const json& doc) { return io::sha256_hex(doc.dump()); }

// Writes, saves and verifies the manifest next to the outputs.
void finish_manifest(const fs::path& manifest_path, std::uint64_t seed,
                     const std::map<std::string, std::string>& digests,
                     const std::vector<std::pair<std::string, std::int64_t>>& files,
                     std::int64_t split_index) {
    const fs::path base = manifest_path.has_parent_path() ? manifest_path.parent_path()
                                                          : fs::path(".");
    io::save_manifest(manifest_path,
                      io::make_manifest(seed, digests, files, split_index, base));
    io::verify_manifest(manifest_path);
}

fs::path default_manifest_for(const fs::path& output) {
    return output.string() + ".manifest.json";
}

int run_fit(const std::string& input, std::int64_t take, const std::string& arma_range,
            const std::string& garch_range, const std::string& out, int state_id,
            int min_length, int threads, const std::string& manifest_override) {
    const GridRange arma = parse_range(arma_range, "--grid-arma");
    const GridRange garch = parse_range(garch_range, "--grid-garch");

    const io::BarFile bars =
        io::load_bars(input, take > 0 ? std::optional<std::int64_t>(take) : std::nullopt);
    const std::vector<double> returns = bars.log_returns();

    econometrics::OrderGrid grid;
    grid.p_min = arma.lo;
    grid.p_max = arma.hi;
    grid.q_min = arma.lo;
    grid.q_max = arma.hi;
    grid.pg_min = garch.lo;
    grid.pg_max = garch.hi;
    grid.qg_min = garch.lo;
    grid.qg_max = garch.hi;

    econometrics::FitOptions options;
    options.min_length = min_length;
    options.state_id = state_id;
    options.threads = threads;
    options.series_label = input;

    const econometrics::FitReport report = econometrics::fit(returns, grid, options);

    std::cout << "grid search over " << report.grid.size() << " candidates ("
              << returns.size() << " returns from " << input << ")\n";
    std::cout << "p,q,p_garch,q_garch,k,log_likelihood,aic,converged\n";
    for (const auto& cand : report.grid) {
        std::cout << cand.p << ',' << cand.q << ',' << cand.p_garch << ',' << cand.q_garch << ','
                  << cand.k << ',' << io::format_double(cand.log_likelihood) << ','
                  << io::format_double(cand.aic) << ',' << (cand.converged ? 1 : 0) << "\n";
    }
    std::cout << "selected ARMA(" << report.model.arma.p() << "," << report.model.arma.q()
              << ") GARCH(" << report.model.garch.p() << "," << report.model.garch.q()
              << ") k=" << report.k << " log_likelihood=" << io::format_double(report.log_likelihood)
              << " aic=" << io::format_double(report.aic) << "\n";

    io::save_model(out, io::model_file_from_report(report));

    // Digests identify inputs by content so a relocated run reproduces
    // the same manifest bytes.
    const json config = {{"command", "fit"},       {"input_sha256", io::sha256_file(input)},
                         {"take", take},           {"grid_arma", arma_range},
                         {"grid_garch", garch_range}, {"state_id", state_id},
                         {"min_length", min_length}};
    const fs::path manifest_path =
        manifest_override.empty() ? default_manifest_for(out) : fs::path(manifest_override);
    finish_manifest(manifest_path, 0, {{"fit", config_digest(config)}},
                    {{fs::path(out).filename().string(), 0}}, 0);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_gen_map(std::int64_t length, std::int64_t interval, int states, std::uint64_t seed,
                std::int64_t gradual, std::int64_t abrupt, int initial_state,
                const std::string& out, const std::string& manifest_override) {
    regimegen::StreamConfig config;
    config.length = length;
    config.interval = interval;
    config.seed = seed;
    config.gradual_duration = gradual;
    config.abrupt_duration = abrupt;
    config.initial_state = initial_state;

    for (const auto& warning : regimegen::config_warnings(config))
        std::cerr << "warning: " << warning << "\n";

    const regimegen::TransitionMap map = regimegen::generate_map(config, states);
    io::save_map(out, map);

    std::int64_t n_abrupt = 0;
    for (const auto& ev : map.events)
        if (regimegen::classify_duration(ev.duration, gradual) == regimegen::DriftType::abrupt)
            ++n_abrupt;
    std::cout << "wrote " << map.events.size() << " events (" << n_abrupt << " abrupt, "
              << (static_cast<std::int64_t>(map.events.size()) - n_abrupt) << " gradual) to "
              << out << "\n";

    const json config_doc = {{"command", "gen-map"},   {"length", length},
                             {"interval", interval},   {"states", states},
                             {"gradual", gradual},     {"abrupt", abrupt},
                             {"initial_state", initial_state}};
    const fs::path manifest_path =
        manifest_override.empty() ? default_manifest_for(out) : fs::path(manifest_override);
    finish_manifest(manifest_path, seed, {{"gen-map", config_digest(config_doc)}},
                    {{fs::path(out).filename().string(),
                      static_cast<std::int64_t>(map.events.size())}},
                    0);
    return 0;
}

int run_simulate(const std::string& models_dir, const std::string& map_path,
                 std::int64_t length, int streams, std::uint64_t seed,
                 const std::string& out_dir, int threads, bool mean_neutralize,
                 bool independent_innovations, int burn_in, std::int64_t split_index) {
    const auto model_files = io::load_model_dir(models_dir);
    std::vector<econometrics::RegimeModel> models;
    models.reserve(model_files.size());
    for (const auto& file : model_files) models.push_back(file.model);

    const regimegen::TransitionMap map = io::load_map(map_path, length);
    if (map.stream_length <= 0)
        throw std::runtime_error("simulate: stream length unknown; pass --length");

    regimegen::StreamConfig config;
    config.length = map.stream_length;
    config.seed = seed;
    config.mean_neutralize = mean_neutralize;
    config.shared_innovations = !independent_innovations;
    config.burn_in_steps = burn_in;

    fs::create_directories(out_dir);
    std::mutex io_lock;
    regimegen::simulate_batch(
        models, map, config, streams, seed, threads, [&](int i, regimegen::StreamResult&& stream) {
            const std::string stream_name = "stream_" + std::to_string(i) + ".csv";
            const std::string gt_name = "ground_truth_" + std::to_string(i) + ".csv";
            io::save_stream(fs::path(out_dir) / stream_name, stream.returns,
                            stream.log.instances);
            io::save_ground_truth_events(fs::path(out_dir) / gt_name, stream.log.events);
            std::scoped_lock guard(io_lock);
            std::cout << "stream " << i << ": wrote " << stream_name << " and " << gt_name
                      << "\n";
        });

    std::vector<std::pair<std::string, std::int64_t>> inventory;
    for (int i = 0; i < streams; ++i) {
        inventory.emplace_back("stream_" + std::to_string(i) + ".csv", map.stream_length);
        inventory.emplace_back("ground_truth_" + std::to_string(i) + ".csv",
                               static_cast<std::int64_t>(map.events.size()));
    }

    std::vector<fs::path> model_paths;
    for (const auto& entry : std::filesystem::directory_iterator(models_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            model_paths.push_back(entry.path());
    std::sort(model_paths.begin(), model_paths.end());
    std::string model_digests;
    for (const auto& path : model_paths) model_digests += io::sha256_file(path);
    const json config_doc = {{"command", "simulate"},
                             {"models_sha256", io::sha256_hex(model_digests)},
                             {"map_sha256", io::sha256_file(map_path)},
                             {"length", map.stream_length},
                             {"streams", streams},
                             {"mean_neutralize", mean_neutralize},
                             {"independent_innovations", independent_innovations},
                             {"burn_in", burn_in}};
    finish_manifest(fs::path(out_dir) / "manifest.json", seed,
                    {{"simulate", config_digest(config_doc)}}, inventory, split_index);
    return 0;
}

int run_featurize(const std::string& stream_path, double initial_price, const std::string& out,
                  const marketfeatures::IndicatorConfig& indicators,
                  const std::string& manifest_override) {
    const io::StreamFile stream = io::load_stream(stream_path);
    const marketfeatures::FeatureTable table =
        marketfeatures::featurize(stream.returns, initial_price, indicators);
    io::save_features(out, table);
    std::cout << "wrote " << table.rows.size() << " feature rows (warm-up "
              << table.first_index << ") to " << out << "\n";

    const json config_doc = {{"command", "featurize"},
                             {"stream_sha256", io::sha256_file(stream_path)},
                             {"initial_price", initial_price},
                             {"warm_up", table.first_index},
                             {"rsi_n", indicators.rsi_n},
                             {"willr_n", indicators.willr_n},
                             {"macd", {indicators.macd_fast, indicators.macd_slow,
                                       indicators.macd_signal}},
                             {"cci_n", indicators.cci_n},
                             {"mom_n", indicators.mom_n},
                             {"roc_n", indicators.roc_n},
                             {"stochastic", {indicators.sk_n, indicators.sd_period}},
                             {"sma", {indicators.sma_fast_n, indicators.sma_slow_n}},
                             {"wma_n", indicators.wma_n},
                             {"ema_n", indicators.ema_n},
                             {"trima_n", indicators.trima_n},
                             {"adx_n", indicators.adx_n},
                             {"bollinger", {indicators.bollinger_n, indicators.bollinger_k}},
                             {"aroon_n", indicators.aroon_n}};
    const fs::path manifest_path =
        manifest_override.empty() ? default_manifest_for(out) : fs::path(manifest_override);
    finish_manifest(manifest_path, 0, {{"featurize", config_digest(config_doc)}},
                    {{fs::path(out).filename().string(),
                      static_cast<std::int64_t>(table.rows.size())}},
                    0);
    return 0;
}

int run_analyze(const std::string& features_path, const std::string& returns_path,
                const std::string& ground_truth_path, int k, std::uint64_t seed,
                const std::string& out_dir, int embed_window, int bins) {
    const marketfeatures::FeatureTable features = io::load_features(features_path);
    const io::StreamFile stream = io::load_stream(returns_path);
    const io::GroundTruthEvents ground_truth = io::load_ground_truth_events(ground_truth_path);

    // The per-instance annotations must agree with the event file.
    std::vector<regimegen::TransitionEvent> recovered;
    for (std::size_t t = 0; t < stream.annotations.size(); ++t) {
        const auto& a = stream.annotations[t];
        if (!a.in_transition()) continue;
        if (recovered.empty() || !stream.annotations[t - 1].in_transition() ||
            stream.annotations[t - 1].state_to != a.state_to ||
            stream.annotations[t - 1].state_from != a.state_from)
            recovered.push_back({static_cast<std::int64_t>(t), 0, a.state_from, a.state_to});
        ++recovered.back().duration;
    }
    if (recovered != ground_truth.events)
        throw std::runtime_error("analyze: " + ground_truth_path +
                                 " disagrees with the stream annotations in " + returns_path);

    fs::create_directories(out_dir);
    std::vector<std::pair<std::string, std::int64_t>> inventory;

    // Descriptive statistics over the feature columns.
    {
        std::string out = "feature,mean,std,min,q25,q50,q75,max\n";
        std::vector<double> column(features.rows.size());
        for (int c = 0; c < marketfeatures::kFeatureCount; ++c) {
            for (std::size_t i = 0; i < features.rows.size(); ++i)
                column[i] = features.rows[i].feature(c);
            const analysis::ColumnStats stats = analysis::describe_column(
                marketfeatures::kFeatureNames[static_cast<std::size_t>(c)], column);
            out += stats.name;
            out += ',';
            io::append_double(out, stats.mean);
            out += ',';
            io::append_double(out, stats.std_dev);
            out += ',';
            io::append_double(out, stats.min);
            out += ',';
            io::append_double(out, stats.q25);
            out += ',';
            io::append_double(out, stats.q50);
            out += ',';
            io::append_double(out, stats.q75);
            out += ',';
            io::append_double(out, stats.max);
            out += '\n';
        }
        io::write_text_file(fs::path(out_dir) / "stats.csv", out);
        inventory.emplace_back("stats.csv", marketfeatures::kFeatureCount);
    }

    // Per-state return histograms over a common range.
    std::set<int> state_set;
    for (const auto& a : stream.annotations) state_set.insert(a.state_from);
    const std::vector<int> states(state_set.begin(), state_set.end());
    {
        const auto [lo_it, hi_it] =
            std::minmax_element(stream.returns.begin(), stream.returns.end());
        const double lo = *lo_it;
        const double hi = *hi_it > lo ? *hi_it : lo + 1e-12;
        std::vector<analysis::Histogram> histograms;
        for (int state : states) {
            std::vector<double> per_state;
            for (std::size_t t = 0; t < stream.returns.size(); ++t)
                if (stream.annotations[t].state_from == state)
                    per_state.push_back(stream.returns[t]);
            histograms.push_back(analysis::histogram(per_state, bins, lo, hi));
        }
        std::string out = "bin_lo,bin_hi";
        for (int state : states) out += ",count_state_" + std::to_string(state);
        out += '\n';
        for (int b = 0; b < bins; ++b) {
            io::append_double(out, histograms[0].edges[static_cast<std::size_t>(b)]);
            out += ',';
            io::append_double(out, histograms[0].edges[static_cast<std::size_t>(b) + 1]);
            for (std::size_t s = 0; s < states.size(); ++s) {
                out += ',';
                io::append_int(out, histograms[s].counts[static_cast<std::size_t>(b)]);
            }
            out += '\n';
        }
        io::write_text_file(fs::path(out_dir) / "histogram.csv", out);
        inventory.emplace_back("histogram.csv", bins);
    }

    // Velocity/volatility embedding and its clustering.
    const analysis::StateEmbedding embedding =
        analysis::embed_states(stream.returns, stream.annotations, embed_window);
    {
        std::string out = "velocity,volatility,state,in_transition\n";
        for (const auto& p : embedding.points) {
            io::append_double(out, p.velocity);
            out += ',';
            io::append_double(out, p.volatility);
            out += ',';
            io::append_int(out, p.state);
            out += ',';
            out += p.in_transition ? '1' : '0';
            out += '\n';
        }
        io::write_text_file(fs::path(out_dir) / "embedding.csv", out);
        inventory.emplace_back("embedding.csv",
                               static_cast<std::int64_t>(embedding.points.size()));
    }

    std::vector<analysis::Point2> points;
    std::vector<int> point_states;
    points.reserve(embedding.points.size());
    for (const auto& p : embedding.points) {
        points.push_back({p.velocity, p.volatility});
        point_states.push_back(p.state);
    }
    const analysis::ClusterResult clusters = analysis::kmeans(points, k, seed);
    const double cluster_purity = analysis::purity(clusters.assignments, point_states, k);
    {
        std::string out = "cluster,velocity,volatility\n";
        for (int c = 0; c < k; ++c) {
            io::append_int(out, c);
            out += ',';
            io::append_double(out, clusters.centroids[static_cast<std::size_t>(c)].x);
            out += ',';
            io::append_double(out, clusters.centroids[static_cast<std::size_t>(c)].y);
            out += '\n';
        }
        io::write_text_file(fs::path(out_dir) / "centroids.csv", out);
        inventory.emplace_back("centroids.csv", k);

        std::string assignments = "point_index,cluster\n";
        for (std::size_t i = 0; i < clusters.assignments.size(); ++i) {
            io::append_int(assignments, static_cast<std::int64_t>(i));
            assignments += ',';
            io::append_int(assignments, clusters.assignments[i]);
            assignments += '\n';
        }
        io::write_text_file(fs::path(out_dir) / "assignments.csv", assignments);
        inventory.emplace_back("assignments.csv",
                               static_cast<std::int64_t>(clusters.assignments.size()));
    }

    std::vector<int> labels;
    labels.reserve(features.rows.size());
    for (const auto& row : features.rows) labels.push_back(row.label);
    const double label0 = analysis::class_balance(labels);

    {
        json summary;
        summary["label0_fraction"] = label0;
        summary["kmeans"] = {{"k", k},
                             {"inertia", clusters.inertia},
                             {"iterations", clusters.iterations},
                             {"purity", cluster_purity}};
        summary["embed_window"] = embed_window;
        summary["bins"] = bins;
        summary["states"] = states;
        io::write_text_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
        inventory.emplace_back("summary.json", 0);
    }

    std::cout << "label0_fraction=" << io::format_double(label0) << "\n";
    std::cout << "kmeans k=" << k << " inertia=" << io::format_double(clusters.inertia)
              << " purity=" << io::format_double(cluster_purity) << "\n";
    std::cout << "wrote stats.csv histogram.csv embedding.csv centroids.csv assignments.csv "
                 "summary.json to "
              << out_dir << "\n";

    const json config_doc = {{"command", "analyze"},
                             {"features_sha256", io::sha256_file(features_path)},
                             {"returns_sha256", io::sha256_file(returns_path)},
                             {"ground_truth_sha256", io::sha256_file(ground_truth_path)},
                             {"kmeans", k},
                             {"embed_window", embed_window},
                             {"bins", bins}};
    finish_manifest(fs::path(out_dir) / "manifest.json", seed,
                    {{"analyze", config_digest(config_doc)}}, inventory, 0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regime-switching market data stream generator"};
    app.require_subcommand(1);

    // fit
    std::string fit_input;
    std::int64_t fit_take = 0;
    std::string fit_grid_arma = "0..5";
    std::string fit_grid_garch = "1..3";
    std::string fit_out = "model.json";
    int fit_state_id = 1;
    int fit_min_length = 200;
    int fit_threads = 1;
    std::string fit_manifest;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a model to a bar file by AIC grid search");
    fit_cmd->add_option("--input", fit_input, "Bar CSV file")->required();
    fit_cmd->add_option("--take", fit_take, "Use only the first N bars (0 = all)");
    fit_cmd->add_option("--grid-arma", fit_grid_arma, "AR/MA order range, e.g. 0..5");
    fit_cmd->add_option("--grid-garch", fit_grid_garch, "ARCH/GARCH order range, e.g. 1..3");
    fit_cmd->add_option("--out", fit_out, "Output model JSON");
    fit_cmd->add_option("--state-id", fit_state_id, "State id stored in the model");
    fit_cmd->add_option("--min-length", fit_min_length, "Minimum series length");
    fit_cmd->add_option("--threads", fit_threads, "Parallel grid workers");
    fit_cmd->add_option("--manifest", fit_manifest, "Manifest path override");

    // gen-map
    std::int64_t map_length = 1'500'000;
    std::int64_t map_interval = 5'000;
    int map_states = 4;
    std::uint64_t map_seed = 0;
    std::int64_t map_gradual = 1'000;
    std::int64_t map_abrupt = 100;
    int map_initial = 1;
    std::string map_out = "map.csv";
    std::string map_manifest;
    auto* map_cmd = app.add_subcommand("gen-map", "Generate a randomized transition map");
    map_cmd->add_option("--length", map_length, "Stream length in instances");
    map_cmd->add_option("--interval", map_interval, "Instances between drift starts");
    map_cmd->add_option("--states", map_states, "Number of states");
    map_cmd->add_option("--seed", map_seed, "Map seed");
    map_cmd->add_option("--gradual", map_gradual, "Gradual drift duration");
    map_cmd->add_option("--abrupt", map_abrupt, "Abrupt drift duration");
    map_cmd->add_option("--initial-state", map_initial, "State active at instance 0");
    map_cmd->add_option("--out", map_out, "Output map CSV");
    map_cmd->add_option("--manifest", map_manifest, "Manifest path override");

    // simulate
    std::string sim_models;
    std::string sim_map;
    std::int64_t sim_length = 0;
    int sim_streams = 1;
    std::uint64_t sim_seed = 0;
    std::string sim_out_dir = "out";
    int sim_threads = 1;
    bool sim_mean_neutralize = false;
    bool sim_independent = false;
    int sim_burn_in = 500;
    std::int64_t sim_split = 500'000;
    auto* sim_cmd = app.add_subcommand("simulate", "Simulate drift-annotated return streams");
    sim_cmd->add_option("--models", sim_models, "Directory of model JSON files")->required();
    sim_cmd->add_option("--map", sim_map, "Transition map CSV")->required();
    sim_cmd->add_option("--length", sim_length,
                        "Stream length (default: end of the map's last event)");
    sim_cmd->add_option("--streams", sim_streams, "Number of independent streams");
    sim_cmd->add_option("--seed", sim_seed, "Base seed; stream i runs at mix(seed, i)");
    sim_cmd->add_option("--out-dir", sim_out_dir, "Output directory");
    sim_cmd->add_option("--threads", sim_threads, "Parallel stream workers");
    sim_cmd->add_flag("--mean-neutralize", sim_mean_neutralize,
                      "Zero every model's mean before simulating");
    sim_cmd->add_flag("--independent-innovations", sim_independent,
                      "Draw separate innovations for the two blended models");
    sim_cmd->add_option("--burn-in", sim_burn_in, "Private warm-up steps per model");
    sim_cmd->add_option("--split-index", sim_split,
                        "Pre-train/evaluation boundary recorded in the manifest");

    // featurize
    std::string feat_stream;
    double feat_price = 250.0;
    std::string feat_out = "features.csv";
    std::string feat_manifest;
    marketfeatures::IndicatorConfig indicators;
    auto* feat_cmd = app.add_subcommand("featurize", "Compute indicator features and labels");
    feat_cmd->add_option("--stream", feat_stream, "Simulated stream CSV")->required();
    feat_cmd->add_option("--initial-price", feat_price, "Price level at reconstruction start");
    feat_cmd->add_option("--out", feat_out, "Output feature CSV");
    feat_cmd->add_option("--manifest", feat_manifest, "Manifest path override");
    feat_cmd->add_option("--rsi-n", indicators.rsi_n, "RSI window");
    feat_cmd->add_option("--willr-n", indicators.willr_n, "Williams %R window");
    feat_cmd->add_option("--macd-fast", indicators.macd_fast, "MACD fast EMA");
    feat_cmd->add_option("--macd-slow", indicators.macd_slow, "MACD slow EMA");
    feat_cmd->add_option("--macd-signal", indicators.macd_signal, "MACD signal EMA");
    feat_cmd->add_option("--cci-n", indicators.cci_n, "CCI window");
    feat_cmd->add_option("--mom-n", indicators.mom_n, "Momentum lag");
    feat_cmd->add_option("--roc-n", indicators.roc_n, "Rate-of-change lag");
    feat_cmd->add_option("--sk-n", indicators.sk_n, "Stochastic %K window");
    feat_cmd->add_option("--sd-period", indicators.sd_period, "Stochastic %D period");
    feat_cmd->add_option("--sma-fast", indicators.sma_fast_n, "Fast SMA window");
    feat_cmd->add_option("--sma-slow", indicators.sma_slow_n, "Slow SMA window");
    feat_cmd->add_option("--wma-n", indicators.wma_n, "WMA window");
    feat_cmd->add_option("--ema-n", indicators.ema_n, "EMA window");
    feat_cmd->add_option("--trima-n", indicators.trima_n, "TRIMA window");
    feat_cmd->add_option("--adx-n", indicators.adx_n, "ADX window");
    feat_cmd->add_option("--boll-n", indicators.bollinger_n, "Bollinger window");
    feat_cmd->add_option("--boll-k", indicators.bollinger_k, "Bollinger band width");
    feat_cmd->add_option("--aroon-n", indicators.aroon_n, "Aroon window");

    // analyze
    std::string an_features;
    std::string an_returns;
    std::string an_ground_truth;
    int an_k = 4;
    std::uint64_t an_seed = 0;
    std::string an_out_dir = "analysis";
    int an_window = 50;
    int an_bins = 100;
    auto* an_cmd = app.add_subcommand("analyze", "Descriptive stats, embedding and clustering");
    an_cmd->add_option("--features", an_features, "Feature CSV")->required();
    an_cmd->add_option("--returns", an_returns, "Simulated stream CSV")->required();
    an_cmd->add_option("--ground-truth", an_ground_truth, "Ground-truth event CSV")->required();
    an_cmd->add_option("--kmeans", an_k, "Number of clusters");
    an_cmd->add_option("--seed", an_seed, "Clustering seed");
    an_cmd->add_option("--out-dir", an_out_dir, "Output directory");
    an_cmd->add_option("--embed-window", an_window, "Rolling window of the state embedding");
    an_cmd->add_option("--bins", an_bins, "Histogram bins");

    // verify
    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a manifest's file hashes");
    verify_cmd->add_option("--manifest", verify_path, "Manifest JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit_cmd->parsed())
            return run_fit(fit_input, fit_take, fit_grid_arma, fit_grid_garch, fit_out,
                           fit_state_id, fit_min_length, fit_threads, fit_manifest);
        if (map_cmd->parsed())
            return run_gen_map(map_length, map_interval, map_states, map_seed, map_gradual,
                               map_abrupt, map_initial, map_out, map_manifest);
        if (sim_cmd->parsed())
            return run_simulate(sim_models, sim_map, sim_length, sim_streams, sim_seed,
                                sim_out_dir, sim_threads, sim_mean_neutralize, sim_independent,
                                sim_burn_in, sim_split);
        if (feat_cmd->parsed())
            return run_featurize(feat_stream, feat_price, feat_out, indicators, feat_manifest);
        if (an_cmd->parsed())
            return run_analyze(an_features, an_returns, an_ground_truth, an_k, an_seed,
                               an_out_dir, an_window, an_bins);
        if (verify_cmd->parsed()) {
            io::verify_manifest(verify_path);
            std::cout << "manifest ok: " << verify_path << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
