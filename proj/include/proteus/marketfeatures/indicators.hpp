#pragma once

#include <span>
#include <utility>
#include <vector>

namespace proteus::marketfeatures {

// Every indicator returns a series aligned with its input; entries before
// the warm-up index are NaN. Bars are synthetic (high = low = close), so
// all formulas reduce to functions of the close series.

enum class MovingAverageKind { sma, wma, ema, trima };
enum class MomentumKind { mom, roc };

std::vector<double> sma(std::span<const double> closes, int n);
std::vector<double> wma(std::span<const double> closes, int n);
// Seeded with the simple average of the first n closes; emits from index n.
std::vector<double> ema(std::span<const double> closes, int n);
// Simple average of a simple average, both over ceil((n+1)/2).
std::vector<double> trima(std::span<const double> closes, int n);
std::vector<double> moving_average(MovingAverageKind kind, std::span<const double> closes, int n);

std::vector<double> mom(std::span<const double> closes, int n);
std::vector<double> roc(std::span<const double> closes, int n);  // percent change
std::vector<double> momentum(MomentumKind kind, std::span<const double> closes, int n);

// Simple-average gain/loss ratio; flat window -> 50.
std::vector<double> rsi(std::span<const double> closes, int n = 10);

// %K over the window extremes and its d_period simple mean. Flat window
// -> K = 50. The %D mean is computed directly per step so it matches a
// recomputation of the %K window bit for bit.
std::pair<std::vector<double>, std::vector<double>> stochastics(std::span<const double> closes,
                                                                int n = 10, int d_period = 10);

// Negative convention: 0 at the window high, -100 at the low, -50 flat.
std::vector<double> willr(std::span<const double> closes, int n = 10);

// Signal-line form: the EMA(signal_n) of EMA(fast) - EMA(slow).
std::vector<double> macd(std::span<const double> closes, int fast = 12, int slow = 26,
                         int signal_n = 9);

// Mean-absolute-deviation form with the 0.015 scale; zero deviation -> 0.
std::vector<double> cci(std::span<const double> closes, int n = 10);

// Wilder smoothing over |delta close| true ranges; zero denominators -> 0.
std::vector<double> adx(std::span<const double> closes, int n = 10);

// SMA(n) +/- k population standard deviations.
std::pair<std::vector<double>, std::vector<double>> bollinger(std::span<const double> closes,
                                                              int n = 20, double k = 2.0);

// 100 * (n - bars since extreme) / n over a window of n+1 closes; ties go
// to the most recent bar. Returns {up, down}.
std::pair<std::vector<double>, std::vector<double>> aroon(std::span<const double> closes,
                                                          int n = 10);

}  // namespace proteus::marketfeatures
