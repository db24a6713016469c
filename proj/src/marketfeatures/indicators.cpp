#include "proteus/marketfeatures/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace proteus::marketfeatures {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> nan_series(std::size_t n) { return std::vector<double>(n, kNaN); }

void require_window(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": window must be >= 1");
}

}  // namespace

std::vector<double> sma(std::span<const double> closes, int n) {
    require_window(n, "sma");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += closes[t - static_cast<std::size_t>(i)];
        out[t] = sum / n;
    }
    return out;
}

std::vector<double> wma(std::span<const double> closes, int n) {
    require_window(n, "wma");
    auto out = nan_series(closes.size());
    const double denom = n * (n + 1) / 2.0;
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += (n - i) * closes[t - static_cast<std::size_t>(i)];
        out[t] = sum / denom;
    }
    return out;
}

std::vector<double> ema(std::span<const double> closes, int n) {
    require_window(n, "ema");
    auto out = nan_series(closes.size());
    if (closes.size() <= static_cast<std::size_t>(n)) return out;
    double seed = 0.0;
    for (int i = 0; i < n; ++i) seed += closes[static_cast<std::size_t>(i)];
    seed /= n;
    const double smoothing = 2.0 / (n + 1.0);
    double value = seed;
    for (std::size_t t = static_cast<std::size_t>(n); t < closes.size(); ++t) {
        value += smoothing * (closes[t] - value);
        out[t] = value;
    }
    return out;
}

std::vector<double> trima(std::span<const double> closes, int n) {
    require_window(n, "trima");
    const int half = (n + 2) / 2;  // ceil((n+1)/2)
    const auto first = sma(closes, half);
    auto out = nan_series(closes.size());
    const std::size_t start = 2 * (static_cast<std::size_t>(half) - 1);
    for (std::size_t t = start; t < closes.size(); ++t) {
        double sum = 0.0;
        for (int i = 0; i < half; ++i) sum += first[t - static_cast<std::size_t>(i)];
        out[t] = sum / half;
    }
    return out;
}

std::vector<double> moving_average(MovingAverageKind kind, std::span<const double> closes, int n) {
    switch (kind) {
        case MovingAverageKind::sma: return sma(closes, n);
        case MovingAverageKind::wma: return wma(closes, n);
        case MovingAverageKind::ema: return ema(closes, n);
        case MovingAverageKind::trima: return trima(closes, n);
    }
    throw std::invalid_argument("moving_average: unknown kind");
}

std::vector<double> mom(std::span<const double> closes, int n) {
    require_window(n, "mom");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n); t < closes.size(); ++t)
        out[t] = closes[t] - closes[t - static_cast<std::size_t>(n)];
    return out;
}

std::vector<double> roc(std::span<const double> closes, int n) {
    require_window(n, "roc");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n); t < closes.size(); ++t) {
        const double base = closes[t - static_cast<std::size_t>(n)];
        out[t] = 100.0 * (closes[t] - base) / base;
    }
    return out;
}

std::vector<double> momentum(MomentumKind kind, std::span<const double> closes, int n) {
    return kind == MomentumKind::mom ? mom(closes, n) : roc(closes, n);
}

std::vector<double> rsi(std::span<const double> closes, int n) {
    require_window(n, "rsi");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n); t < closes.size(); ++t) {
        double up = 0.0;
        double down = 0.0;
        for (int i = 0; i < n; ++i) {
            const double change = closes[t - static_cast<std::size_t>(i)] -
                                  closes[t - static_cast<std::size_t>(i) - 1];
            if (change > 0.0) up += change;
            else down -= change;
        }
        if (up == 0.0 && down == 0.0) out[t] = 50.0;
        else if (down == 0.0) out[t] = 100.0;
        else out[t] = 100.0 - 100.0 / (1.0 + up / down);
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>> stochastics(std::span<const double> closes,
                                                                int n, int d_period) {
    require_window(n, "stochastics");
    require_window(d_period, "stochastics d");
    auto k = nan_series(closes.size());
    auto d = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double lowest = closes[t];
        double highest = closes[t];
        for (int i = 1; i < n; ++i) {
            const double c = closes[t - static_cast<std::size_t>(i)];
            lowest = std::min(lowest, c);
            highest = std::max(highest, c);
        }
        k[t] = highest == lowest ? 50.0 : 100.0 * (closes[t] - lowest) / (highest - lowest);
    }
    const std::size_t d_start = static_cast<std::size_t>(n) - 1 + static_cast<std::size_t>(d_period) - 1;
    for (std::size_t t = d_start; t < closes.size(); ++t) {
        double sum = 0.0;
        for (int i = 0; i < d_period; ++i) sum += k[t - static_cast<std::size_t>(i)];
        d[t] = sum / d_period;
    }
    return {std::move(k), std::move(d)};
}

std::vector<double> willr(std::span<const double> closes, int n) {
    require_window(n, "willr");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double lowest = closes[t];
        double highest = closes[t];
        for (int i = 1; i < n; ++i) {
            const double c = closes[t - static_cast<std::size_t>(i)];
            lowest = std::min(lowest, c);
            highest = std::max(highest, c);
        }
        out[t] = highest == lowest ? -50.0
                                   : -100.0 * (highest - closes[t]) / (highest - lowest);
    }
    return out;
}

std::vector<double> macd(std::span<const double> closes, int fast, int slow, int signal_n) {
    require_window(fast, "macd fast");
    require_window(slow, "macd slow");
    require_window(signal_n, "macd signal");
    if (fast >= slow) throw std::invalid_argument("macd: fast period must be below slow period");

    const auto fast_ema = ema(closes, fast);
    const auto slow_ema = ema(closes, slow);
    auto out = nan_series(closes.size());
    const std::size_t df_start = static_cast<std::size_t>(slow);
    const std::size_t seed_end = df_start + static_cast<std::size_t>(signal_n);  // exclusive
    if (closes.size() <= seed_end) return out;

    double seed = 0.0;
    for (std::size_t t = df_start; t < seed_end; ++t) seed += fast_ema[t] - slow_ema[t];
    seed /= signal_n;

    const double smoothing = 2.0 / (signal_n + 1.0);
    double value = seed;
    for (std::size_t t = seed_end; t < closes.size(); ++t) {
        value += smoothing * ((fast_ema[t] - slow_ema[t]) - value);
        out[t] = value;
    }
    return out;
}

std::vector<double> cci(std::span<const double> closes, int n) {
    require_window(n, "cci");
    auto out = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += closes[t - static_cast<std::size_t>(i)];
        mean /= n;
        double deviation = 0.0;
        for (int i = 0; i < n; ++i)
            deviation += std::abs(closes[t - static_cast<std::size_t>(i)] - mean);
        deviation /= n;
        out[t] = deviation == 0.0 ? 0.0 : (closes[t] - mean) / (0.015 * deviation);
    }
    return out;
}

std::vector<double> adx(std::span<const double> closes, int n) {
    require_window(n, "adx");
    auto out = nan_series(closes.size());
    if (closes.size() <= 2 * static_cast<std::size_t>(n)) return out;

    // With synthetic bars the true range collapses to |delta close| and
    // only one of +DM / -DM is ever non-zero.
    double smooth_tr = 0.0;
    double smooth_up = 0.0;
    double smooth_down = 0.0;
    for (int t = 1; t <= n; ++t) {
        const double change = closes[static_cast<std::size_t>(t)] -
                              closes[static_cast<std::size_t>(t - 1)];
        smooth_tr += std::abs(change);
        if (change > 0.0) smooth_up += change;
        else smooth_down -= change;
    }

    auto dx_at = [&]() {
        if (smooth_tr == 0.0) return 0.0;
        const double di_up = 100.0 * smooth_up / smooth_tr;
        const double di_down = 100.0 * smooth_down / smooth_tr;
        const double total = di_up + di_down;
        return total == 0.0 ? 0.0 : 100.0 * std::abs(di_up - di_down) / total;
    };

    // First value averages the first n DX readings (emitted at 2n-1);
    // afterwards Wilder's recursion takes over.
    double dx_sum = dx_at();
    int dx_count = 1;
    double value = kNaN;
    for (std::size_t t = static_cast<std::size_t>(n) + 1; t < closes.size(); ++t) {
        const double change = closes[t] - closes[t - 1];
        smooth_tr += -smooth_tr / n + std::abs(change);
        smooth_up += -smooth_up / n + (change > 0.0 ? change : 0.0);
        smooth_down += -smooth_down / n + (change < 0.0 ? -change : 0.0);
        const double dx = dx_at();
        if (dx_count < n) {
            dx_sum += dx;
            if (++dx_count == n) {
                value = dx_sum / n;
                out[t] = value;
            }
        } else {
            value = (value * (n - 1) + dx) / n;
            out[t] = value;
        }
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>> bollinger(std::span<const double> closes,
                                                              int n, double k) {
    require_window(n, "bollinger");
    if (!(k >= 0.0)) throw std::invalid_argument("bollinger: band width must be >= 0");
    auto upper = nan_series(closes.size());
    auto lower = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n) - 1; t < closes.size(); ++t) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += closes[t - static_cast<std::size_t>(i)];
        mean /= n;
        double var = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = closes[t - static_cast<std::size_t>(i)] - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / n);
        upper[t] = mean + k * sd;
        lower[t] = mean - k * sd;
    }
    return {std::move(upper), std::move(lower)};
}

std::pair<std::vector<double>, std::vector<double>> aroon(std::span<const double> closes, int n) {
    require_window(n, "aroon");
    auto up = nan_series(closes.size());
    auto down = nan_series(closes.size());
    for (std::size_t t = static_cast<std::size_t>(n); t < closes.size(); ++t) {
        int since_high = 0;
        int since_low = 0;
        double highest = closes[t];
        double lowest = closes[t];
        for (int i = 1; i <= n; ++i) {
            const double c = closes[t - static_cast<std::size_t>(i)];
            if (c > highest) {
                highest = c;
                since_high = i;
            }
            if (c < lowest) {
                lowest = c;
                since_low = i;
            }
        }
        up[t] = 100.0 * (n - since_high) / n;
        down[t] = 100.0 * (n - since_low) / n;
    }
    return {std::move(up), std::move(down)};
}

}  // namespace proteus::marketfeatures
