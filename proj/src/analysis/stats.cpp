#include "proteus/analysis/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace proteus::analysis {

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double position = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lower = static_cast<std::size_t>(position);
    if (lower + 1 >= sorted.size()) return sorted.back();
    const double fraction = position - static_cast<double>(lower);
    return sorted[lower] + fraction * (sorted[lower + 1] - sorted[lower]);
}

}  // namespace

ColumnStats describe_column(std::string name, std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("describe_column: empty column");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    ColumnStats stats;
    stats.name = std::move(name);
    double total = 0.0;
    for (double v : sorted) total += v;
    stats.mean = total / static_cast<double>(sorted.size());

    double squares = 0.0;
    for (double v : sorted) squares += (v - stats.mean) * (v - stats.mean);
    stats.std_dev = sorted.size() > 1
                        ? std::sqrt(squares / static_cast<double>(sorted.size() - 1))
                        : 0.0;

    stats.min = sorted.front();
    stats.q25 = quantile_sorted(sorted, 0.25);
    stats.q50 = quantile_sorted(sorted, 0.50);
    stats.q75 = quantile_sorted(sorted, 0.75);
    stats.max = sorted.back();
    return stats;
}

Histogram histogram(std::span<const double> values, int bins, double lo, double hi) {
    if (bins < 1) throw std::invalid_argument("histogram: need at least one bin");
    if (!(lo < hi)) throw std::invalid_argument("histogram: inverted or empty range");

    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    const double width = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) h.edges[static_cast<std::size_t>(b)] = lo + width * b;
    h.edges.back() = hi;
    h.counts.assign(static_cast<std::size_t>(bins), 0);

    for (double v : values) {
        if (v < lo || v > hi) continue;
        int b = static_cast<int>((v - lo) / width);
        if (b >= bins) b = bins - 1;  // right edge of the last bin
        ++h.counts[static_cast<std::size_t>(b)];
    }
    return h;
}

double class_balance(std::span<const int> labels) {
    if (labels.empty()) throw std::invalid_argument("class_balance: empty label series");
    std::int64_t zeros = 0;
    for (int label : labels) zeros += label == 0 ? 1 : 0;
    return static_cast<double>(zeros) / static_cast<double>(labels.size());
}

}  // namespace proteus::analysis
