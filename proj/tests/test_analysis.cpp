#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "proteus/analysis/embedding.hpp"
#include "proteus/analysis/kmeans.hpp"
#include "proteus/analysis/stats.hpp"
#include "proteus/regimegen/stream.hpp"
#include "proteus/rng.hpp"
#include "test_support.hpp"

using namespace proteus;
using namespace proteus::analysis;

TEST_CASE("describe_column computes interpolated quantiles and sample std") {
    SUBCASE("integer ramp") {
        const std::vector<double> column = {1, 2, 3, 4, 5};
        const ColumnStats stats = describe_column("ramp", column);
        CHECK(stats.mean == 3.0);
        CHECK(stats.q50 == 3.0);
        CHECK(stats.q25 == 2.0);
        CHECK(stats.q75 == 4.0);
        CHECK(stats.min == 1.0);
        CHECK(stats.max == 5.0);
        CHECK(stats.std_dev == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    }
    SUBCASE("constant column") {
        const std::vector<double> column(40, 6.25);
        const ColumnStats stats = describe_column("flat", column);
        CHECK(stats.std_dev == 0.0);
        CHECK(stats.min == 6.25);
        CHECK(stats.q25 == 6.25);
        CHECK(stats.q50 == 6.25);
        CHECK(stats.q75 == 6.25);
        CHECK(stats.max == 6.25);
    }
    SUBCASE("order statistics are monotone and permutation-invariant") {
        NormalSampler sampler(3);
        std::vector<double> column(997);
        for (auto& v : column) v = sampler.next();

        const ColumnStats a = describe_column("x", column);
        CHECK(a.min <= a.q25);
        CHECK(a.q25 <= a.q50);
        CHECK(a.q50 <= a.q75);
        CHECK(a.q75 <= a.max);

        std::vector<double> shuffled = column;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[sampler.next_below(i)]);
        const ColumnStats b = describe_column("x", shuffled);
        CHECK(a.mean == b.mean);
        CHECK(a.std_dev == b.std_dev);
        CHECK(a.q25 == b.q25);
        CHECK(a.q50 == b.q50);
        CHECK(a.q75 == b.q75);
    }
    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(describe_column("none", std::vector<double>{}), std::invalid_argument);
    }
}

TEST_CASE("histogram covers its range with fixed edges") {
    SUBCASE("single value lands in one bin") {
        const std::vector<double> one = {0.5};
        const Histogram h = histogram(one, 10, 0.0, 1.0);
        std::int64_t total = 0;
        for (auto c : h.counts) total += c;
        CHECK(total == 1);
        CHECK(h.counts[5] == 1);
        CHECK(h.edges.size() == 11);
    }
    SUBCASE("uniform grid spreads evenly") {
        std::vector<double> grid(1000);
        for (std::size_t i = 0; i < grid.size(); ++i)
            grid[i] = static_cast<double>(i) / 999.0;
        const Histogram h = histogram(grid, 10, 0.0, 1.0);
        for (auto c : h.counts) {
            CHECK(c >= 99);
            CHECK(c <= 101);
        }
    }
    SUBCASE("middle-bin mass of a standard normal sample matches the cdf") {
        NormalSampler sampler(55);
        std::vector<double> sample(100000);
        for (auto& v : sample) v = sampler.next();
        const Histogram h = histogram(sample, 8, -4.0, 4.0);
        // Bins 3 and 4 cover [-1, 1].
        const double mass =
            static_cast<double>(h.counts[3] + h.counts[4]) / static_cast<double>(sample.size());
        const double expected = std::erf(1.0 / std::sqrt(2.0));
        CHECK(mass == doctest::Approx(expected).epsilon(0.02));
    }
    SUBCASE("inverted range is an error") {
        const std::vector<double> xs = {1.0};
        CHECK_THROWS_AS(histogram(xs, 4, 1.0, -1.0), std::invalid_argument);
    }
}

TEST_CASE("class balance is the zero fraction") {
    CHECK(class_balance(std::vector<int>{0, 1, 0, 1}) == 0.5);
    CHECK(class_balance(std::vector<int>{1, 1, 1}) == 0.0);
    CHECK_THROWS_AS(class_balance(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("state embedding computes rolling moments with ground-truth tags") {
    SUBCASE("constant returns collapse to a single point") {
        const std::vector<double> returns(200, 0.01);
        std::vector<regimegen::InstanceAnnotation> annotations(200);
        for (auto& a : annotations) a.state_from = 3;
        const StateEmbedding embedding = embed_states(returns, annotations, 50);
        CHECK(embedding.points.size() == 151);
        for (const auto& p : embedding.points) {
            CHECK(p.velocity == doctest::Approx(0.01).epsilon(1e-12));
            CHECK(p.volatility < 1e-15);  // up to window-sum rounding
            CHECK(p.state == 3);
            CHECK_FALSE(p.in_transition);
        }
    }
    SUBCASE("well-separated variances produce separated volatility clouds") {
        const double low_var = 1e-6;
        const double high_var = 1e-2;
        NormalSampler sampler(8);
        std::vector<double> returns(20000);
        std::vector<regimegen::InstanceAnnotation> annotations(20000);
        for (std::size_t t = 0; t < returns.size(); ++t) {
            const bool second = t >= 10000;
            returns[t] = std::sqrt(second ? high_var : low_var) * sampler.next();
            annotations[t].state_from = second ? 2 : 1;
        }
        const StateEmbedding embedding = embed_states(returns, annotations, 50);

        double mean1 = 0.0, mean2 = 0.0, var1 = 0.0, var2 = 0.0;
        std::int64_t n1 = 0, n2 = 0;
        for (const auto& p : embedding.points) {
            if (p.state == 1) {
                mean1 += p.volatility;
                ++n1;
            } else {
                mean2 += p.volatility;
                ++n2;
            }
        }
        mean1 /= static_cast<double>(n1);
        mean2 /= static_cast<double>(n2);
        for (const auto& p : embedding.points) {
            const double d = p.volatility - (p.state == 1 ? mean1 : mean2);
            (p.state == 1 ? var1 : var2) += d * d;
        }
        const double pooled = std::sqrt((var1 + var2) / static_cast<double>(n1 + n2 - 2));
        CHECK(mean2 - mean1 > 3.0 * pooled);
    }
    SUBCASE("tagging matches the annotations exactly") {
        regimegen::StreamConfig config;
        config.length = 30000;
        config.interval = 5000;
        config.seed = 2;
        const auto map = regimegen::generate_map(config, 4);
        const auto annotations = regimegen::annotate_instances(map, config.length);
        std::vector<double> returns(30000, 0.0);
        NormalSampler sampler(3);
        for (auto& r : returns) r = 0.001 * sampler.next();
        const StateEmbedding embedding = embed_states(returns, annotations, 50);
        REQUIRE(embedding.points.size() == returns.size() - 49);
        for (std::size_t i = 0; i < embedding.points.size(); ++i) {
            const auto& annotation = annotations[i + 49];
            CHECK(embedding.points[i].state == annotation.state_from);
            CHECK(embedding.points[i].in_transition == annotation.in_transition());
        }
    }
}

TEST_CASE("kmeans recovers planted well-separated blobs") {
    NormalSampler sampler(99);
    const std::vector<Point2> centers = {{0, 0}, {10, 0}, {0, 10}, {10, 10}};
    std::vector<Point2> points;
    std::vector<int> truth;
    for (int c = 0; c < 4; ++c) {
        for (int i = 0; i < 500; ++i) {
            points.push_back({centers[static_cast<std::size_t>(c)].x + sampler.next(),
                              centers[static_cast<std::size_t>(c)].y + sampler.next()});
            truth.push_back(c);
        }
    }
    const ClusterResult result = kmeans(points, 4, 1234);
    CHECK(purity(result.assignments, truth, 4) > 0.99);

    for (std::size_t i = 1; i < result.inertia_history.size(); ++i)
        CHECK(result.inertia_history[i] <= result.inertia_history[i - 1] + 1e-9);

    // Fixed point: re-assigning against the final centroids changes nothing.
    for (std::size_t i = 0; i < points.size(); ++i) {
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int c = 0; c < 4; ++c) {
            const double dx = points[i].x - result.centroids[static_cast<std::size_t>(c)].x;
            const double dy = points[i].y - result.centroids[static_cast<std::size_t>(c)].y;
            if (dx * dx + dy * dy < best_dist) {
                best_dist = dx * dx + dy * dy;
                best = c;
            }
        }
        CHECK(best == result.assignments[i]);
    }

    const ClusterResult again = kmeans(points, 4, 1234);
    CHECK(again.assignments == result.assignments);
    CHECK(again.centroids == result.centroids);
    CHECK(again.inertia == result.inertia);

    const ClusterResult other_seed = kmeans(points, 4, 77);
    CHECK(purity(other_seed.assignments, truth, 4) > 0.99);
}

TEST_CASE("kmeans handles identical points via the re-seeding policy") {
    const std::vector<Point2> same(50, Point2{1.0, 2.0});
    const ClusterResult result = kmeans(same, 4, 9);
    CHECK(result.inertia == 0.0);
    for (int a : result.assignments) CHECK(a == result.assignments[0]);
}

TEST_CASE("kmeans rejects k larger than the point count") {
    const std::vector<Point2> few = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(kmeans(few, 3, 1), std::invalid_argument);
}
