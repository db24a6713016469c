#include "proteus/analysis/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "proteus/rng.hpp"

namespace proteus::analysis {

namespace {

double squared_distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

std::vector<Point2> plus_plus_init(std::span<const Point2> points, int k, NormalSampler& rng) {
    std::vector<Point2> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    centroids.push_back(points[rng.next_below(points.size())]);

    std::vector<double> best(points.size(), std::numeric_limits<double>::infinity());
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            best[i] = std::min(best[i], squared_distance(points[i], centroids.back()));
            total += best[i];
        }
        std::size_t chosen = 0;
        if (total > 0.0) {
            const double target = rng.next_unit() * total;
            double cumulative = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                cumulative += best[i];
                if (cumulative >= target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = rng.next_below(points.size());  // all mass on existing centroids
        }
        centroids.push_back(points[chosen]);
    }
    return centroids;
}

}  // namespace

ClusterResult kmeans(std::span<const Point2> points, int k, std::uint64_t seed,
                     const KMeansOptions& options) {
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (points.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("kmeans: fewer points than clusters");

    NormalSampler rng(mix_seed(seed, 0x4B4Du));
    ClusterResult result;
    result.centroids = plus_plus_init(points, k, rng);
    result.assignments.assign(points.size(), 0);

    std::vector<Point2> sums(static_cast<std::size_t>(k));
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(k));

    for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
        // Assignment.
        double inertia = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            int best_cluster = 0;
            double best_dist = squared_distance(points[i], result.centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = squared_distance(points[i], result.centroids[static_cast<std::size_t>(c)]);
                if (d < best_dist) {
                    best_dist = d;
                    best_cluster = c;
                }
            }
            result.assignments[i] = best_cluster;
            inertia += best_dist;
        }
        result.inertia_history.push_back(inertia);
        result.inertia = inertia;
        result.iterations = iteration + 1;

        // Mean update.
        std::fill(sums.begin(), sums.end(), Point2{});
        std::fill(sizes.begin(), sizes.end(), 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto c = static_cast<std::size_t>(result.assignments[i]);
            sums[c].x += points[i].x;
            sums[c].y += points[i].y;
            ++sizes[c];
        }
        double shift = 0.0;
        for (int c = 0; c < k; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            Point2 updated;
            if (sizes[ci] > 0) {
                updated = {sums[ci].x / static_cast<double>(sizes[ci]),
                           sums[ci].y / static_cast<double>(sizes[ci])};
            } else {
                // Re-seed an emptied cluster at the worst-served point.
                std::size_t farthest = 0;
                double worst = -1.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const double d = squared_distance(
                        points[i],
                        result.centroids[static_cast<std::size_t>(result.assignments[i])]);
                    if (d > worst) {
                        worst = d;
                        farthest = i;
                    }
                }
                updated = points[farthest];
            }
            shift = std::max(shift, std::sqrt(squared_distance(updated, result.centroids[ci])));
            result.centroids[ci] = updated;
        }
        if (shift < options.tolerance) break;
    }

    // Final assignment against the settled centroids.
    double inertia = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        int best_cluster = 0;
        double best_dist = squared_distance(points[i], result.centroids[0]);
        for (int c = 1; c < k; ++c) {
            const double d = squared_distance(points[i], result.centroids[static_cast<std::size_t>(c)]);
            if (d < best_dist) {
                best_dist = d;
                best_cluster = c;
            }
        }
        result.assignments[i] = best_cluster;
        inertia += best_dist;
    }
    result.inertia_history.push_back(inertia);
    result.inertia = inertia;
    return result;
}

double purity(std::span<const int> assignments, std::span<const int> labels, int k) {
    if (assignments.size() != labels.size())
        throw std::invalid_argument("purity: assignment/label length mismatch");
    if (assignments.empty()) throw std::invalid_argument("purity: empty input");

    std::vector<std::map<int, std::int64_t>> tallies(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assignments.size(); ++i)
        ++tallies[static_cast<std::size_t>(assignments[i])][labels[i]];

    std::int64_t agreed = 0;
    for (const auto& tally : tallies) {
        std::int64_t best = 0;
        for (const auto& [label, count] : tally) best = std::max(best, count);
        agreed += best;
    }
    return static_cast<double>(agreed) / static_cast<double>(assignments.size());
}

}  // namespace proteus::analysis
