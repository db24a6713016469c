#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace proteus::analysis {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

struct ClusterResult {
    std::vector<Point2> centroids;
    std::vector<int> assignments;          // per-point centroid index
    std::vector<double> inertia_history;   // per Lloyd iteration
    double inertia = 0.0;
    int iterations = 0;
};

struct KMeansOptions {
    int max_iterations = 300;
    double tolerance = 1e-6;  // centroid shift below which iteration stops
};

// Lloyd iterations from a seeded k-means++ start. Emptied clusters are
// re-seeded to the point farthest from its assigned centroid.
ClusterResult kmeans(std::span<const Point2> points, int k, std::uint64_t seed,
                     const KMeansOptions& options = {});

// Fraction of points whose cluster's majority label matches their own.
double purity(std::span<const int> assignments, std::span<const int> labels, int k);

}  // namespace proteus::analysis
