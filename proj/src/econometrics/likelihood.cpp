#include "proteus/econometrics/likelihood.hpp"

#include <cmath>
#include <stdexcept>

namespace proteus::econometrics {

namespace {
constexpr double kLog2Pi = 1.8378770664093454835606594728112;
}

int parameter_count(int p, int q, int p_garch, int q_garch) {
    return 1 + p + q + 1 + p_garch + q_garch;
}

double aic(int k, double log_likelihood) {
    return 2.0 * k - 2.0 * log_likelihood;
}

std::vector<double> arma_residuals(const ArmaParams& arma, std::span<const double> returns) {
    const int p = arma.p();
    const int q = arma.q();
    const int n = static_cast<int>(returns.size());
    if (n <= p) throw std::invalid_argument("arma_residuals: series shorter than AR order");

    std::vector<double> eps(static_cast<std::size_t>(n - p));
    for (int t = p; t < n; ++t) {
        double mean = arma.mu;
        for (int i = 1; i <= p; ++i)
            mean += arma.phi[static_cast<std::size_t>(i - 1)] * returns[static_cast<std::size_t>(t - i)];
        for (int j = 1; j <= q; ++j) {
            const int s = t - j - p;  // index into eps; negative -> pre-sample 0
            if (s >= 0) mean += arma.theta[static_cast<std::size_t>(j - 1)] * eps[static_cast<std::size_t>(s)];
        }
        eps[static_cast<std::size_t>(t - p)] = returns[static_cast<std::size_t>(t)] - mean;
    }
    return eps;
}

std::optional<double> garch_log_likelihood(const GarchParams& garch,
                                           std::span<const double> residuals) {
    const int m = static_cast<int>(residuals.size());
    if (m == 0) throw std::invalid_argument("garch_log_likelihood: empty residual series");
    const int p_g = garch.p();
    const int q_g = garch.q();

    // Pre-sample variance: population variance of the residuals.
    double mean = 0.0;
    for (double e : residuals) mean += e;
    mean /= m;
    double presample_var = 0.0;
    for (double e : residuals) presample_var += (e - mean) * (e - mean);
    presample_var /= m;

    std::vector<double> sig2(static_cast<std::size_t>(m));
    double core = 0.0;  // sum of log(sig2) + eps^2/sig2
    for (int t = 0; t < m; ++t) {
        double v = garch.omega;
        for (int i = 1; i <= p_g; ++i) {
            const int s = t - i;
            const double e = s >= 0 ? residuals[static_cast<std::size_t>(s)] : 0.0;
            v += garch.alpha[static_cast<std::size_t>(i - 1)] * e * e;
        }
        for (int j = 1; j <= q_g; ++j) {
            const int s = t - j;
            v += garch.beta[static_cast<std::size_t>(j - 1)] *
                 (s >= 0 ? sig2[static_cast<std::size_t>(s)] : presample_var);
        }
        if (!(v > 0.0) || !std::isfinite(v)) return std::nullopt;
        sig2[static_cast<std::size_t>(t)] = v;
        const double e = residuals[static_cast<std::size_t>(t)];
        core += std::log(v) + e * e / v;
    }
    if (!std::isfinite(core)) return std::nullopt;
    return -0.5 * (m * kLog2Pi + core);
}

std::optional<double> log_likelihood(const ArmaParams& arma, const GarchParams& garch,
                                     std::span<const double> returns) {
    const int max_order = std::max(std::max(arma.p(), arma.q()), std::max(garch.p(), garch.q()));
    if (static_cast<int>(returns.size()) <= max_order)
        throw std::invalid_argument("log_likelihood: series shorter than the largest model order");

    std::vector<double> eps = arma_residuals(arma, returns);
    for (double e : eps)
        if (!std::isfinite(e)) return std::nullopt;
    return garch_log_likelihood(garch, eps);
}

}  // namespace proteus::econometrics
