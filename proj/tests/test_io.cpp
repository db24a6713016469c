#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <stdexcept>

#include "proteus/io/bars.hpp"
#include "proteus/io/csv.hpp"
#include "proteus/io/manifest.hpp"
#include "proteus/io/map_io.hpp"
#include "proteus/io/model_io.hpp"
#include "proteus/io/stream_io.hpp"
#include "proteus/marketfeatures/featurize.hpp"
#include "proteus/regimegen/stream.hpp"
#include "proteus/rng.hpp"
#include "test_support.hpp"

using namespace proteus;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = PROTEUS_TEST_DATA_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("proteus_io_" + std::to_string(NormalSampler(std::random_device{}())
                                                   .next_below(1'000'000'000)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("doubles survive the text round trip") {
    NormalSampler sampler(17);
    for (int i = 0; i < 1000; ++i) {
        const double value = std::exp(20.0 * sampler.next()) * sampler.next();
        const std::string text = io::format_double(value);
        CHECK(io::parse_double(text, "round trip") == value);
    }
    CHECK(io::format_double(0.0) == "0");
}

TEST_CASE("bar files parse, truncate, and reject malformed rows") {
    SUBCASE("well-formed file with volume") {
        TempDir tmp;
        write_file(tmp.path / "bars.csv",
                   "timestamp,open,high,low,close,volume\n"
                   "2020-01-02T09:30:00,100,101,99,100.5,1000\n"
                   "2020-01-02T09:35:00,100.5,102,100,101.5,1100\n"
                   "2020-01-02T09:40:00,101.5,102,100.6,100.8,900\n");
        const io::BarFile bars = io::load_bars(tmp.path / "bars.csv");
        REQUIRE(bars.bars.size() == 3);
        CHECK(bars.bars[1].close == 101.5);
        CHECK(bars.bars[0].volume == 1000.0);
        const auto returns = bars.log_returns();
        REQUIRE(returns.size() == 2);
        CHECK(returns[0] == doctest::Approx(std::log(101.5 / 100.5)).epsilon(1e-15));
    }
    SUBCASE("fixture file honors take") {
        const io::BarFile all = io::load_bars(kDataDir / "spy_like_5min.csv");
        CHECK(all.bars.size() == 1200);
        const io::BarFile taken = io::load_bars(kDataDir / "spy_like_5min.csv", 1000);
        CHECK(taken.bars.size() == 1000);
        CHECK(taken.log_returns().size() == 999);
    }
    SUBCASE("duplicate timestamps name the row") {
        TempDir tmp;
        write_file(tmp.path / "bad.csv",
                   "timestamp,open,high,low,close\n"
                   "2020-01-02T09:30:00,100,101,99,100.5\n"
                   "2020-01-02T09:30:00,100.5,102,100,101.5\n");
        CHECK_THROWS_WITH_AS(io::load_bars(tmp.path / "bad.csv"), doctest::Contains("row 2"),
                             std::runtime_error);
    }
    SUBCASE("non-positive price is rejected") {
        TempDir tmp;
        write_file(tmp.path / "bad.csv",
                   "timestamp,open,high,low,close\n"
                   "2020-01-02T09:30:00,100,101,99,100.5\n"
                   "2020-01-02T09:35:00,-1,102,100,101.5\n");
        CHECK_THROWS_WITH_AS(io::load_bars(tmp.path / "bad.csv"),
                             doctest::Contains("positive"), std::runtime_error);
    }
    SUBCASE("high below close is rejected") {
        TempDir tmp;
        write_file(tmp.path / "bad.csv",
                   "timestamp,open,high,low,close\n"
                   "2020-01-02T09:30:00,100,100.4,99,100.5\n"
                   "2020-01-02T09:35:00,100.5,102,100,101.5\n");
        CHECK_THROWS_WITH_AS(io::load_bars(tmp.path / "bad.csv"),
                             doctest::Contains("bracket"), std::runtime_error);
    }
    SUBCASE("writer and parser agree") {
        TempDir tmp;
        const io::BarFile bars = io::load_bars(kDataDir / "spy_like_5min.csv", 50);
        io::save_bars(tmp.path / "copy.csv", bars);
        const io::BarFile reloaded = io::load_bars(tmp.path / "copy.csv");
        CHECK(reloaded.bars == bars.bars);
    }
}

TEST_CASE("model files round trip exactly") {
    TempDir tmp;
    io::ModelFile file;
    file.model = testsupport::ar1_garch11_model(0.4321000000000001, 1.25e-6, 0.1, 0.85, 3);
    file.model.arma.theta = {-0.123456789012345678};
    file.fit = io::FitSummary{-12345.678901234567, 6, 24703.357802469134};

    io::save_model(tmp.path / "model.json", file);
    const io::ModelFile loaded = io::load_model(tmp.path / "model.json");
    CHECK(loaded == file);

    SUBCASE("fit block optional") {
        file.fit.reset();
        io::save_model(tmp.path / "plain.json", file);
        CHECK(io::load_model(tmp.path / "plain.json") == file);
    }
    SUBCASE("invalid parameters rejected on load") {
        write_file(tmp.path / "bad.json",
                   R"({"state_id":1,"mu":0,"phi":[1.5],"theta":[],"omega":1e-6,)"
                   R"("alpha":[0.1],"beta":[0.8],"innovation":"normal"})");
        CHECK_THROWS_AS(io::load_model(tmp.path / "bad.json"), std::runtime_error);
    }
    SUBCASE("unknown innovation rejected") {
        write_file(tmp.path / "bad.json",
                   R"({"state_id":1,"mu":0,"phi":[],"theta":[],"omega":1e-6,)"
                   R"("alpha":[0.1],"beta":[0.8],"innovation":"cauchy"})");
        CHECK_THROWS_AS(io::load_model(tmp.path / "bad.json"), std::runtime_error);
    }
}

TEST_CASE("fixture model directory loads four distinct states") {
    const auto models = io::load_model_dir(kDataDir / "models");
    REQUIRE(models.size() == 4);
    for (int s = 1; s <= 4; ++s) CHECK(models[static_cast<std::size_t>(s - 1)].model.state_id == s);
}

TEST_CASE("transition map files round trip and validate") {
    TempDir tmp;
    regimegen::StreamConfig config;
    config.length = 1'500'000;
    config.interval = 5'000;
    config.seed = 9;
    const auto map = regimegen::generate_map(config, 4);

    io::save_map(tmp.path / "map.csv", map);
    const auto loaded = io::load_map(tmp.path / "map.csv", config.length);
    CHECK(loaded == map);

    // Write-after-parse reproduces the file bytes.
    io::save_map(tmp.path / "again.csv", loaded);
    CHECK(io::read_text_file(tmp.path / "map.csv") == io::read_text_file(tmp.path / "again.csv"));

    SUBCASE("stream length inferred from the last event") {
        const auto inferred = io::load_map(tmp.path / "map.csv");
        CHECK(inferred.stream_length == map.events.back().end_index());
    }
    SUBCASE("the canonical first event parses") {
        write_file(tmp.path / "one.csv",
                   "start_index,duration,from_state,to_state\n5000,100,1,2\n");
        const auto one = io::load_map(tmp.path / "one.csv");
        REQUIRE(one.events.size() == 1);
        CHECK(one.events[0] == regimegen::TransitionEvent{5000, 100, 1, 2});
        CHECK(one.initial_state == 1);
    }
    SUBCASE("chain breaks name the offending row") {
        write_file(tmp.path / "broken.csv",
                   "start_index,duration,from_state,to_state\n"
                   "5000,100,1,2\n10000,100,3,4\n");
        CHECK_THROWS_WITH_AS(io::load_map(tmp.path / "broken.csv"),
                             doctest::Contains("event 2"), std::runtime_error);
    }
    SUBCASE("overlaps are rejected") {
        write_file(tmp.path / "overlap.csv",
                   "start_index,duration,from_state,to_state\n"
                   "5000,1000,1,2\n5500,100,2,1\n");
        CHECK_THROWS_WITH_AS(io::load_map(tmp.path / "overlap.csv"),
                             doctest::Contains("overlap"), std::runtime_error);
    }
}

TEST_CASE("ground-truth event files carry the drift type") {
    TempDir tmp;
    std::vector<regimegen::TransitionEvent> events = {{5000, 100, 1, 2}, {10000, 1000, 2, 1}};
    io::save_ground_truth_events(tmp.path / "gt.csv", events);
    const auto loaded = io::load_ground_truth_events(tmp.path / "gt.csv");
    CHECK(loaded.events == events);
    REQUIRE(loaded.types.size() == 2);
    CHECK(loaded.types[0] == regimegen::DriftType::abrupt);
    CHECK(loaded.types[1] == regimegen::DriftType::gradual);
    CHECK(loaded.stream_length == 11000);
}

TEST_CASE("stream files round trip returns and annotations") {
    TempDir tmp;
    regimegen::StreamConfig config;
    config.length = 12'000;
    config.interval = 5'000;
    config.seed = 5;
    const auto map = regimegen::generate_map(config, 2);
    const auto stream = regimegen::simulate_stream(
        {testsupport::ar1_garch11_model(0.2, 1e-6, 0.1, 0.8, 1),
         testsupport::ar1_garch11_model(-0.1, 2e-6, 0.05, 0.9, 2)},
        map, config);

    io::save_stream(tmp.path / "stream.csv", stream.returns, stream.log.instances);
    const io::StreamFile loaded = io::load_stream(tmp.path / "stream.csv");
    CHECK(loaded.returns == stream.returns);
    CHECK(loaded.annotations == stream.log.instances);
}

TEST_CASE("feature files round trip bit for bit") {
    TempDir tmp;
    NormalSampler sampler(23);
    std::vector<double> returns(300);
    for (auto& r : returns) r = 0.003 * sampler.next();
    const auto table = marketfeatures::featurize(returns, 250.0);

    io::save_features(tmp.path / "features.csv", table);
    const auto loaded = io::load_features(tmp.path / "features.csv");
    CHECK(loaded == table);

    // Identical inputs produce identical bytes.
    io::save_features(tmp.path / "again.csv", marketfeatures::featurize(returns, 250.0));
    CHECK(io::read_text_file(tmp.path / "features.csv") ==
          io::read_text_file(tmp.path / "again.csv"));
}

TEST_CASE("manifests verify and catch single-byte corruption") {
    TempDir tmp;
    write_file(tmp.path / "a.csv", "index,x\n0,1\n1,2\n");
    write_file(tmp.path / "b.csv", "index,x\n0,9\n");

    const io::RunManifest manifest = io::make_manifest(
        1234, {{"stage", io::sha256_hex("config")}}, {{"a.csv", 2}, {"b.csv", 1}}, 500000,
        tmp.path);
    io::save_manifest(tmp.path / "manifest.json", manifest);

    CHECK_NOTHROW(io::verify_manifest(tmp.path / "manifest.json"));
    CHECK(io::load_manifest(tmp.path / "manifest.json") == manifest);

    SUBCASE("flipped byte names the file") {
        write_file(tmp.path / "b.csv", "index,x\n0,8\n");
        CHECK_THROWS_WITH_AS(io::verify_manifest(tmp.path / "manifest.json"),
                             doctest::Contains("b.csv"), std::runtime_error);
    }
    SUBCASE("missing file names the file") {
        fs::remove(tmp.path / "a.csv");
        CHECK_THROWS_WITH_AS(io::verify_manifest(tmp.path / "manifest.json"),
                             doctest::Contains("a.csv"), std::runtime_error);
    }
}

TEST_CASE("batch inventory lists stream, ground-truth, and feature files per stream") {
    TempDir tmp;
    std::vector<proteus::econometrics::RegimeModel> models = {
        testsupport::ar1_garch11_model(0.2, 1e-6, 0.1, 0.8, 1),
        testsupport::ar1_garch11_model(-0.1, 2e-6, 0.05, 0.9, 2)};
    regimegen::StreamConfig config;
    config.length = 6'000;
    config.interval = 5'000;
    config.seed = 0;
    const auto map = regimegen::generate_map(config, 2);

    std::vector<std::pair<std::string, std::int64_t>> inventory;
    std::mutex lock;
    regimegen::simulate_batch(models, map, config, 30, 99, 2, [&](int i, auto&& stream) {
        const std::string stream_name = "stream_" + std::to_string(i) + ".csv";
        const std::string gt_name = "ground_truth_" + std::to_string(i) + ".csv";
        const std::string feature_name = "features_" + std::to_string(i) + ".csv";
        io::save_stream(tmp.path / stream_name, stream.returns, stream.log.instances);
        io::save_ground_truth_events(tmp.path / gt_name, stream.log.events);
        const auto features = marketfeatures::featurize(stream.returns, 250.0);
        io::save_features(tmp.path / feature_name, features);
        std::scoped_lock guard(lock);
        inventory.emplace_back(stream_name, static_cast<std::int64_t>(stream.returns.size()));
        inventory.emplace_back(gt_name, static_cast<std::int64_t>(stream.log.events.size()));
        inventory.emplace_back(feature_name, static_cast<std::int64_t>(features.rows.size()));
    });
    std::sort(inventory.begin(), inventory.end());

    const auto manifest = io::make_manifest(99, {}, inventory, 500000, tmp.path);
    io::save_manifest(tmp.path / "manifest.json", manifest);
    CHECK(manifest.files.size() == 90);
    CHECK(manifest.split_index == 500000);
    CHECK_NOTHROW(io::verify_manifest(tmp.path / "manifest.json"));
}
