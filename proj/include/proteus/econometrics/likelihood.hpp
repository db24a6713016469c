#pragma once

#include <optional>
#include <span>
#include <vector>

#include "proteus/econometrics/model.hpp"

namespace proteus::econometrics {

// Number of free parameters: mu, AR, MA, omega, ARCH, GARCH.
int parameter_count(int p, int q, int p_garch, int q_garch);

// Akaike information criterion, 2*k - 2*log_likelihood.
double aic(int k, double log_likelihood);

// ARMA one-step-ahead residuals over t = p .. n-1 (pre-sample eps = 0).
std::vector<double> arma_residuals(const ArmaParams& arma, std::span<const double> returns);

// Gaussian log likelihood of a GARCH filter over a residual series.
// Pre-sample eps^2 = 0; pre-sample sig2 = population variance of the
// residuals. Returns nullopt when the recursion degenerates (likelihood
// overflow), never throws for numeric blow-ups.
std::optional<double> garch_log_likelihood(const GarchParams& garch,
                                           std::span<const double> residuals);

// Full Gaussian ARMA-GARCH log likelihood over the usable range t >= p.
// nullopt signals likelihood overflow (candidate must be rejected).
std::optional<double> log_likelihood(const ArmaParams& arma, const GarchParams& garch,
                                     std::span<const double> returns);

}  // namespace proteus::econometrics
