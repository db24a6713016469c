#pragma once

#include <span>
#include <string>
#include <vector>

#include "proteus/econometrics/likelihood.hpp"
#include "proteus/econometrics/model.hpp"
#include "proteus/nelder_mead.hpp"

namespace proteus::econometrics {

// Inclusive order ranges for the grid search.
struct OrderGrid {
    int p_min = 0, p_max = 5;          // AR
    int q_min = 0, q_max = 5;          // MA
    int pg_min = 1, pg_max = 3;        // ARCH
    int qg_min = 1, qg_max = 3;        // GARCH

    bool empty() const {
        return p_min > p_max || q_min > q_max || pg_min > pg_max || qg_min > qg_max;
    }
    std::string describe() const;
};

struct FitOptions {
    int min_length = 200;
    int state_id = 1;
    int threads = 1;
    NelderMeadOptions optimizer;
    std::string series_label = "series";
};

// One evaluated grid point. Candidates whose optimization failed or whose
// likelihood overflowed carry aic = +inf and converged = false.
struct GridCandidate {
    int p = 0, q = 0, p_garch = 0, q_garch = 0;
    int k = 0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    bool converged = false;
    int iterations = 0;
};

struct FitReport {
    RegimeModel model;
    double log_likelihood = 0.0;
    int k = 0;
    double aic = 0.0;
    std::vector<GridCandidate> grid;  // in traversal order (p, q, p_g, q_g ascending)
    bool converged = false;
    int iterations = 0;
};

// Two-step maximum likelihood over the order grid: conditional
// sum-of-squares ARMA on the returns, then GARCH MLE on the ARMA
// residuals. The reported likelihood and AIC are recomputed from the
// combined parameters, and the candidate with the lowest AIC wins (ties:
// smaller k, then lexicographic orders).
FitReport fit(std::span<const double> returns, const OrderGrid& grid, const FitOptions& options = {});

namespace detail {
// Monahan map from unconstrained space onto the stationary region.
std::vector<double> pacf_to_ar(const std::vector<double>& partials);
std::vector<double> unconstrained_to_ar(std::span<const double> x);
std::vector<double> unconstrained_to_ma(std::span<const double> x);
}  // namespace detail

}  // namespace proteus::econometrics
