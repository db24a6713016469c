#pragma once

#include <span>
#include <string>
#include <vector>

namespace proteus::analysis {

struct ColumnStats {
    std::string name;
    double mean = 0.0;
    double std_dev = 0.0;  // sample (n-1) estimator
    double min = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

struct StatsTable {
    std::vector<ColumnStats> columns;
};

// Quantiles interpolate linearly between order statistics. Values are
// computed on a sorted copy, so any row permutation yields identical
// results bit for bit.
ColumnStats describe_column(std::string name, std::span<const double> values);

struct Histogram {
    std::vector<double> edges;   // bins + 1 ascending edges
    std::vector<std::int64_t> counts;
};

// Equal-width bins over [lo, hi]; the last bin includes its right edge;
// out-of-range points are dropped.
Histogram histogram(std::span<const double> values, int bins, double lo, double hi);

// Fraction of zeros.
double class_balance(std::span<const int> labels);

}  // namespace proteus::analysis
