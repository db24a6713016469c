#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "proteus/marketfeatures/indicators.hpp"
#include "proteus/marketfeatures/prices.hpp"

namespace proteus::marketfeatures {

struct IndicatorConfig {
    int rsi_n = 10;
    int willr_n = 10;
    int macd_fast = 12;
    int macd_slow = 26;
    int macd_signal = 9;
    int cci_n = 10;
    int mom_n = 10;
    int roc_n = 10;
    int sk_n = 10;
    int sd_period = 10;
    int sma_fast_n = 5;
    int sma_slow_n = 10;
    int wma_n = 10;
    int ema_n = 10;
    int trima_n = 10;
    int adx_n = 10;
    int bollinger_n = 20;
    double bollinger_k = 2.0;
    int aroon_n = 10;

    // First instance index with every column defined (35 with defaults,
    // driven by the MACD signal chain).
    std::int64_t warm_up() const;
};

inline constexpr int kFeatureCount = 18;

// Column order matches the feature-file schema.
extern const std::array<std::string, kFeatureCount> kFeatureNames;

struct FeatureRow {
    double rsi10 = 0.0;
    double willr10 = 0.0;
    double macd = 0.0;
    double cci10 = 0.0;
    double mom10 = 0.0;
    double sk = 0.0;
    double sd = 0.0;
    double sma5 = 0.0;
    double sma10 = 0.0;
    double wma10 = 0.0;
    double ema10 = 0.0;
    double trima10 = 0.0;
    double adx10 = 0.0;
    double boll_upper = 0.0;
    double boll_lower = 0.0;
    double roc10 = 0.0;
    double aroon_down = 0.0;
    double aroon_up = 0.0;
    int label = 0;

    double feature(int column) const;
    bool operator==(const FeatureRow&) const = default;
};

struct FeatureTable {
    std::int64_t first_index = 0;  // stream instance index of rows[0]
    std::vector<FeatureRow> rows;

    bool operator==(const FeatureTable&) const = default;
};

// Full third stage: price reconstruction, indicators, labels, with the
// warm-up rows dropped. Row count = returns.size() - config.warm_up().
FeatureTable featurize(std::span<const double> returns, double initial_price,
                       const IndicatorConfig& config = {});

}  // namespace proteus::marketfeatures
