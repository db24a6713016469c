#include "proteus/marketfeatures/prices.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace proteus::marketfeatures {

PriceSeries reconstruct_prices(std::span<const double> returns, double initial_price) {
    if (!(initial_price > 0.0))
        throw std::invalid_argument("reconstruct_prices: initial price must be positive");

    PriceSeries series;
    series.initial_price = initial_price;
    series.prices.reserve(returns.size());
    double price = initial_price;
    for (std::size_t t = 0; t < returns.size(); ++t) {
        if (!std::isfinite(returns[t])) {
            std::ostringstream out;
            out << "reconstruct_prices: non-finite return at instance " << t;
            throw std::invalid_argument(out.str());
        }
        price *= std::exp(returns[t]);
        series.prices.push_back(price);
    }
    return series;
}

std::vector<OhlcBar> to_ohlc(const PriceSeries& series) {
    if (series.prices.empty()) throw std::invalid_argument("to_ohlc: empty price series");
    std::vector<OhlcBar> bars(series.prices.size());
    for (std::size_t t = 0; t < series.prices.size(); ++t) {
        const double close = series.prices[t];
        bars[t].open = t == 0 ? series.initial_price : series.prices[t - 1];
        bars[t].high = close;
        bars[t].low = close;
        bars[t].close = close;
    }
    return bars;
}

std::vector<int> label_direction(std::span<const double> closes) {
    if (closes.size() < 2)
        throw std::invalid_argument("label_direction: need at least two closes");
    std::vector<int> labels(closes.size() - 1);
    for (std::size_t t = 1; t < closes.size(); ++t)
        labels[t - 1] = closes[t] > closes[t - 1] ? 1 : 0;
    return labels;
}

}  // namespace proteus::marketfeatures
