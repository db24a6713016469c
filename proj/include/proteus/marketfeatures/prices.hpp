#pragma once

#include <span>
#include <vector>

namespace proteus::marketfeatures {

// Price path recovered from log returns: prices[t] = prices[t-1]*exp(r_t),
// anchored at prices[0] = initial_price*exp(r_0).
struct PriceSeries {
    double initial_price = 0.0;
    std::vector<double> prices;
};

PriceSeries reconstruct_prices(std::span<const double> returns, double initial_price);

// Synthetic bar: the close carries all information, the open is the
// previous close.
struct OhlcBar {
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;

    bool operator==(const OhlcBar&) const = default;
};

std::vector<OhlcBar> to_ohlc(const PriceSeries& series);

// label[j] covers instance j+1: 1 when the close rose from the previous
// step, 0 otherwise.
std::vector<int> label_direction(std::span<const double> closes);

}  // namespace proteus::marketfeatures
