#include "proteus/marketfeatures/featurize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace proteus::marketfeatures {

const std::array<std::string, kFeatureCount> kFeatureNames = {
    "rsi10",   "willr10",    "macd",       "cci10",  "mom10", "sk",
    "sd",      "sma5",       "sma10",      "wma10",  "ema10", "trima10",
    "adx10",   "boll_upper", "boll_lower", "roc10",  "aroon_down", "aroon_up"};

std::int64_t IndicatorConfig::warm_up() const {
    const int trima_half = (trima_n + 2) / 2;
    std::int64_t warm = 0;
    auto consider = [&warm](std::int64_t v) { warm = std::max(warm, v); };
    consider(rsi_n);
    consider(willr_n - 1);
    consider(macd_slow + macd_signal);
    consider(cci_n - 1);
    consider(mom_n);
    consider(roc_n);
    consider(sk_n - 1 + sd_period - 1);
    consider(sma_fast_n - 1);
    consider(sma_slow_n - 1);
    consider(wma_n - 1);
    consider(ema_n);
    consider(2 * (trima_half - 1));
    consider(2 * adx_n - 1);
    consider(bollinger_n - 1);
    consider(aroon_n);
    consider(1);  // labels need a previous close
    return warm;
}

double FeatureRow::feature(int column) const {
    switch (column) {
        case 0: return rsi10;
        case 1: return willr10;
        case 2: return macd;
        case 3: return cci10;
        case 4: return mom10;
        case 5: return sk;
        case 6: return sd;
        case 7: return sma5;
        case 8: return sma10;
        case 9: return wma10;
        case 10: return ema10;
        case 11: return trima10;
        case 12: return adx10;
        case 13: return boll_upper;
        case 14: return boll_lower;
        case 15: return roc10;
        case 16: return aroon_down;
        case 17: return aroon_up;
    }
    throw std::out_of_range("FeatureRow::feature: bad column");
}

FeatureTable featurize(std::span<const double> returns, double initial_price,
                       const IndicatorConfig& config) {
    const std::int64_t warm_up = config.warm_up();
    if (static_cast<std::int64_t>(returns.size()) <= warm_up) {
        std::ostringstream out;
        out << "featurize: need more than " << warm_up << " returns, got " << returns.size();
        throw std::invalid_argument(out.str());
    }

    const PriceSeries series = reconstruct_prices(returns, initial_price);
    const std::span<const double> closes(series.prices);

    const auto rsi_series = rsi(closes, config.rsi_n);
    const auto willr_series = willr(closes, config.willr_n);
    const auto macd_series = macd(closes, config.macd_fast, config.macd_slow, config.macd_signal);
    const auto cci_series = cci(closes, config.cci_n);
    const auto mom_series = mom(closes, config.mom_n);
    const auto [sk_series, sd_series] = stochastics(closes, config.sk_n, config.sd_period);
    const auto sma_fast_series = sma(closes, config.sma_fast_n);
    const auto sma_slow_series = sma(closes, config.sma_slow_n);
    const auto wma_series = wma(closes, config.wma_n);
    const auto ema_series = ema(closes, config.ema_n);
    const auto trima_series = trima(closes, config.trima_n);
    const auto adx_series = adx(closes, config.adx_n);
    const auto [upper_series, lower_series] = bollinger(closes, config.bollinger_n, config.bollinger_k);
    const auto roc_series = roc(closes, config.roc_n);
    const auto [aroon_up_series, aroon_down_series] = aroon(closes, config.aroon_n);
    const auto labels = label_direction(closes);

    FeatureTable table;
    table.first_index = warm_up;
    table.rows.reserve(returns.size() - static_cast<std::size_t>(warm_up));
    for (std::size_t t = static_cast<std::size_t>(warm_up); t < returns.size(); ++t) {
        FeatureRow row;
        row.rsi10 = rsi_series[t];
        row.willr10 = willr_series[t];
        row.macd = macd_series[t];
        row.cci10 = cci_series[t];
        row.mom10 = mom_series[t];
        row.sk = sk_series[t];
        row.sd = sd_series[t];
        row.sma5 = sma_fast_series[t];
        row.sma10 = sma_slow_series[t];
        row.wma10 = wma_series[t];
        row.ema10 = ema_series[t];
        row.trima10 = trima_series[t];
        row.adx10 = adx_series[t];
        row.boll_upper = upper_series[t];
        row.boll_lower = lower_series[t];
        row.roc10 = roc_series[t];
        row.aroon_down = aroon_down_series[t];
        row.aroon_up = aroon_up_series[t];
        row.label = labels[t - 1];
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace proteus::marketfeatures
