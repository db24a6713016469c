#include <doctest.h>

#include <cmath>
#include <cstring>
#include <set>
#include <stdexcept>

#include "proteus/regimegen/stream.hpp"
#include "proteus/regimegen/transition.hpp"
#include "proteus/rng.hpp"
#include "test_support.hpp"

using namespace proteus;
using namespace proteus::regimegen;

namespace {

// Recovers the event list from the per-instance annotations alone.
std::vector<TransitionEvent> events_from_annotations(const std::vector<InstanceAnnotation>& a) {
    std::vector<TransitionEvent> events;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (!a[t].in_transition()) continue;
        if (events.empty() || !a[t - 1].in_transition() ||
            a[t - 1].state_to != a[t].state_to || a[t - 1].state_from != a[t].state_from) {
            events.push_back({static_cast<std::int64_t>(t), 0, a[t].state_from, a[t].state_to});
        }
        ++events.back().duration;
    }
    return events;
}

StreamConfig desk_config(std::int64_t length, std::uint64_t seed) {
    StreamConfig config;
    config.length = length;
    config.interval = 5000;
    config.seed = seed;
    return config;
}

double kurtosis_of(const std::vector<double>& xs) {
    const double m = testsupport::mean_of(xs);
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : xs) {
        const double d = x - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(xs.size());
    m4 /= static_cast<double>(xs.size());
    return m4 / (m2 * m2);
}

}  // namespace

TEST_CASE("sigmoid weight obeys its clamping and midpoint contract") {
    CHECK(sigmoid_weight(4999, 5000, 100) == 0.0);
    CHECK(sigmoid_weight(5100, 5000, 100) == 1.0);
    CHECK(sigmoid_weight(6000, 5000, 100) == 1.0);
    CHECK(sigmoid_weight(5050, 5000, 100) == 0.5);

    // First in-window weight of a 100-step transition.
    const double expected = 1.0 / (1.0 + std::exp(5.0));
    CHECK(sigmoid_weight(5000, 5000, 100) == doctest::Approx(expected).epsilon(1e-12));

    NormalSampler rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t duration = 1 + static_cast<std::int64_t>(rng.next_below(2000));
        double prev = -1.0;
        for (std::int64_t t = 0; t < duration; ++t) {
            const double w = sigmoid_weight(t, 0, duration);
            CHECK(w > prev);
            CHECK(w > 0.0);
            CHECK(w < 1.0);
            prev = w;
        }
        CHECK(sigmoid_weight(duration, 0, duration) == 1.0);
    }
}

TEST_CASE("generate_map produces one balanced event per interval") {
    SUBCASE("benchmark scale") {
        StreamConfig config = desk_config(1'500'000, 42);
        const TransitionMap map = generate_map(config, 4);
        REQUIRE(map.events.size() == 300);
        int abrupt = 0;
        int gradual = 0;
        for (const auto& ev : map.events)
            (classify_duration(ev.duration) == DriftType::abrupt ? abrupt : gradual)++;
        CHECK(abrupt == 150);
        CHECK(gradual == 150);
        CHECK(validate_map(map, 4).empty());
        CHECK(map.events.back().end_index() <= map.stream_length);
    }

    SUBCASE("two-state minimum forces the chain and the duration deck") {
        StreamConfig config = desk_config(10'000, 7);
        const TransitionMap map = generate_map(config, 2);
        REQUIRE(map.events.size() == 2);
        CHECK(map.events[0].from_state == 1);
        CHECK(map.events[0].to_state == 2);
        CHECK(map.events[1].from_state == 2);
        CHECK(map.events[1].to_state == 1);
        std::multiset<std::int64_t> durations = {map.events[0].duration, map.events[1].duration};
        CHECK(durations == std::multiset<std::int64_t>{100, 1000});
    }

    SUBCASE("deterministic in the seed") {
        StreamConfig config = desk_config(200'000, 99);
        CHECK(generate_map(config, 4) == generate_map(config, 4));
        config.seed = 100;
        CHECK(generate_map(config, 4) != generate_map(desk_config(200'000, 99), 4));
    }

    SUBCASE("interval must exceed the gradual duration") {
        StreamConfig config = desk_config(10'000, 1);
        config.interval = 1000;
        CHECK_THROWS_AS(generate_map(config, 2), std::invalid_argument);
    }

    SUBCASE("non-multiple lengths warn") {
        StreamConfig config = desk_config(10'500, 1);
        CHECK_FALSE(config_warnings(config).empty());
        CHECK(config_warnings(desk_config(10'000, 1)).empty());
    }
}

TEST_CASE("validate_map names the offending event") {
    TransitionMap map;
    map.initial_state = 1;
    map.stream_length = 20'000;
    map.events = {{5000, 100, 1, 2}, {10'000, 1000, 3, 1}};
    const auto problems = validate_map(map, 4);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("event 2") != std::string::npos);
    CHECK(problems[0].find("chain break") != std::string::npos);

    map.events[1] = {5050, 100, 2, 3};  // overlaps event 1
    const auto overlap = validate_map(map, 4);
    REQUIRE_FALSE(overlap.empty());
    CHECK(overlap[0].find("overlap") != std::string::npos);
}

TEST_CASE("annotations reconstruct the map and respect the weight contract") {
    StreamConfig config = desk_config(60'000, 21);
    const TransitionMap map = generate_map(config, 4);
    const auto annotations = annotate_instances(map, config.length);
    REQUIRE(annotations.size() == static_cast<std::size_t>(config.length));

    CHECK(events_from_annotations(annotations) == map.events);

    for (std::size_t t = 0; t < annotations.size(); ++t) {
        const auto& a = annotations[t];
        if (a.in_transition()) {
            CHECK(a.blend_weight > 0.0);
            CHECK(a.blend_weight < 1.0);
            if (t > 0 && annotations[t - 1].in_transition())
                CHECK(a.blend_weight > annotations[t - 1].blend_weight);
        } else {
            CHECK(a.blend_weight == 0.0);
            CHECK(a.state_to == 0);
        }
    }
}

TEST_CASE("shortening one event changes only the annotations inside its window") {
    StreamConfig config = desk_config(30'000, 3);
    TransitionMap map = generate_map(config, 4);
    TransitionMap shortened = map;
    std::size_t target = 0;
    for (std::size_t i = 0; i < map.events.size(); ++i)
        if (map.events[i].duration == 100) target = i;
    shortened.events[target].duration = 1;

    const auto before = annotate_instances(map, config.length);
    const auto after = annotate_instances(shortened, config.length);
    std::int64_t changed = 0;
    for (std::size_t t = 0; t < before.size(); ++t)
        if (!(before[t] == after[t])) ++changed;
    CHECK(changed <= 100);
    CHECK(changed >= 1);
}

TEST_CASE("identical models make transitions invisible bit for bit") {
    // Same parameters registered under two state ids; shared innovations.
    const auto base = testsupport::ar1_garch11_model(0.3, 1e-6, 0.08, 0.85, 1);
    auto twin = base;
    twin.state_id = 2;

    StreamConfig config = desk_config(20'000, 1234);
    const TransitionMap with_drifts = generate_map(config, 2);
    TransitionMap without_drifts;
    without_drifts.initial_state = 1;
    without_drifts.stream_length = config.length;

    const StreamResult a = simulate_stream({base, twin}, with_drifts, config);
    const StreamResult b = simulate_stream({base, twin}, without_drifts, config);
    REQUIRE(a.returns.size() == b.returns.size());
    CHECK(std::memcmp(a.returns.data(), b.returns.data(),
                      a.returns.size() * sizeof(double)) == 0);
    CHECK(a.log.events.size() == with_drifts.events.size());
}

TEST_CASE("no-drift noise stream has the expected mean and normality") {
    const double variance = 2.5e-5;
    TransitionMap map;
    map.initial_state = 1;
    map.stream_length = 100'000;

    StreamConfig config;
    config.length = 100'000;
    config.seed = 8;
    const StreamResult stream =
        simulate_stream({testsupport::noise_model(variance)}, map, config);
    const double bound = 3.0 * std::sqrt(variance / static_cast<double>(config.length));
    CHECK(std::abs(testsupport::mean_of(stream.returns)) < bound);

    for (const auto& a : stream.log.instances) {
        CHECK(a.state_from == 1);
        CHECK_FALSE(a.in_transition());
    }
}

TEST_CASE("four identical noise processes blend into a normal stream") {
    std::vector<proteus::econometrics::RegimeModel> models;
    for (int s = 1; s <= 4; ++s) models.push_back(testsupport::noise_model(1e-4, s));

    StreamConfig config = desk_config(200'000, 31);
    const TransitionMap map = generate_map(config, 4);
    const StreamResult stream = simulate_stream(models, map, config);
    const double kurtosis = kurtosis_of(stream.returns);
    CHECK(kurtosis > 2.8);
    CHECK(kurtosis < 3.2);
}

TEST_CASE("benchmark-scale simulation annotates every instance and event") {
    std::vector<proteus::econometrics::RegimeModel> models;
    models.push_back(testsupport::ar1_garch11_model(0.20, 4e-8, 0.07, 0.85, 1));
    models.push_back(testsupport::ar1_garch11_model(0.10, 1e-8, 0.05, 0.90, 2));
    models.push_back(testsupport::ar1_garch11_model(-0.15, 2e-7, 0.12, 0.80, 3));
    models.push_back(testsupport::ar1_garch11_model(0.05, 5e-9, 0.03, 0.90, 4));

    StreamConfig config = desk_config(1'500'000, 77);
    const TransitionMap map = generate_map(config, 4);
    const StreamResult stream = simulate_stream(models, map, config);

    REQUIRE(stream.log.events.size() == 300);
    int abrupt = 0;
    for (const auto& ev : stream.log.events)
        if (classify_duration(ev.duration) == DriftType::abrupt) ++abrupt;
    CHECK(abrupt == 150);
    CHECK(stream.log.instances.size() == 1'500'000);
    CHECK(events_from_annotations(stream.log.instances) == map.events);
    for (double r : stream.returns) REQUIRE(std::isfinite(r));
}

TEST_CASE("missing or invalid models are rejected up front") {
    StreamConfig config = desk_config(10'000, 5);
    const TransitionMap map = generate_map(config, 2);

    SUBCASE("missing state") {
        CHECK_THROWS_WITH_AS(simulate_stream({testsupport::noise_model(1e-4, 1)}, map, config),
                             doctest::Contains("no model for state 2"), std::invalid_argument);
    }
    SUBCASE("invalid parameters") {
        auto bad = testsupport::noise_model(1e-4, 2);
        bad.arma.phi = {1.5};
        CHECK_THROWS_AS(
            simulate_stream({testsupport::noise_model(1e-4, 1), bad}, map, config),
            std::invalid_argument);
    }
}

TEST_CASE("batch streams are deterministic, distinct, and thread-count independent") {
    std::vector<proteus::econometrics::RegimeModel> models = {
        testsupport::ar1_garch11_model(0.2, 1e-6, 0.1, 0.8, 1),
        testsupport::ar1_garch11_model(-0.1, 2e-6, 0.05, 0.9, 2)};
    StreamConfig config = desk_config(10'000, 0);
    const TransitionMap map = generate_map(config, 2);

    const auto batch1 = simulate_batch(models, map, config, 6, 5150, 1);
    const auto batch4 = simulate_batch(models, map, config, 6, 5150, 4);
    REQUIRE(batch1.size() == 6);
    for (std::size_t i = 0; i < batch1.size(); ++i) {
        REQUIRE(batch1[i].returns.size() == batch4[i].returns.size());
        CHECK(std::memcmp(batch1[i].returns.data(), batch4[i].returns.data(),
                          batch1[i].returns.size() * sizeof(double)) == 0);
    }
    for (std::size_t i = 0; i < batch1.size(); ++i)
        for (std::size_t j = i + 1; j < batch1.size(); ++j)
            CHECK(batch1[i].returns != batch1[j].returns);

    // A single-stream batch equals a direct run with the mixed seed.
    StreamConfig direct = config;
    direct.seed = mix_seed(5150, 0);
    const auto lone = simulate_batch(models, map, config, 1, 5150, 1);
    const StreamResult reference = simulate_stream(models, map, direct);
    CHECK(lone[0].returns == reference.returns);

    // Different base seeds diverge immediately.
    const auto other = simulate_batch(models, map, config, 1, 5151, 1);
    bool differs = false;
    for (std::size_t t = 0; t < 100; ++t)
        differs = differs || other[0].returns[t] != lone[0].returns[t];
    CHECK(differs);
}
