#include "proteus/econometrics/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace proteus::econometrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPartialCap = 1.0 - 1e-6;  // keeps fitted roots off the unit circle

double clamp_partial(double v) { return std::clamp(v, -kPartialCap, kPartialCap); }

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double sample_mean(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size());
}

struct ArmaFit {
    ArmaParams params;
    std::vector<double> residuals;
    bool converged = false;
    int iterations = 0;
};

ArmaFit fit_arma(std::span<const double> returns, int p, int q, const NelderMeadOptions& optimizer) {
    ArmaFit result;
    if (p == 0 && q == 0) {
        result.params.mu = sample_mean(returns);  // exact CSS optimum
        result.residuals = arma_residuals(result.params, returns);
        result.converged = true;
        return result;
    }

    auto decode = [p, q](const std::vector<double>& x) {
        ArmaParams params;
        params.mu = x[0];
        params.phi = detail::unconstrained_to_ar(std::span(x).subspan(1, static_cast<std::size_t>(p)));
        params.theta = detail::unconstrained_to_ma(
            std::span(x).subspan(static_cast<std::size_t>(1 + p), static_cast<std::size_t>(q)));
        return params;
    };

    auto objective = [&](const std::vector<double>& x) {
        const ArmaParams params = decode(x);
        double ssr = 0.0;
        const int n = static_cast<int>(returns.size());
        // Inlined residual recursion; avoids an allocation per evaluation.
        std::vector<double> eps(static_cast<std::size_t>(n - p));
        for (int t = p; t < n; ++t) {
            double mean = params.mu;
            for (int i = 1; i <= p; ++i)
                mean += params.phi[static_cast<std::size_t>(i - 1)] * returns[static_cast<std::size_t>(t - i)];
            for (int j = 1; j <= q; ++j) {
                const int s = t - j - p;
                if (s >= 0) mean += params.theta[static_cast<std::size_t>(j - 1)] * eps[static_cast<std::size_t>(s)];
            }
            const double e = returns[static_cast<std::size_t>(t)] - mean;
            eps[static_cast<std::size_t>(t - p)] = e;
            ssr += e * e;
        }
        return std::isfinite(ssr) ? ssr : kInf;
    };

    std::vector<double> start(static_cast<std::size_t>(1 + p + q), 0.0);
    start[0] = sample_mean(returns);
    std::vector<double> steps(start.size(), 0.5);
    steps[0] = std::max(0.1 * std::sqrt(sample_variance(returns)), 1e-12);

    const NelderMeadResult opt = nelder_mead(objective, start, steps, optimizer);
    result.params = decode(opt.x);
    result.residuals = arma_residuals(result.params, returns);
    result.converged = opt.converged;
    result.iterations = opt.iterations;
    return result;
}

struct GarchFit {
    GarchParams params;
    bool converged = false;
    int iterations = 0;
};

// Unconstrained encoding: x[0] = log omega, x[1] = logit of the total
// persistence, x[2..] = softmax logits splitting it across the alpha/beta
// coefficients (first logit pinned to zero).
GarchParams decode_garch(const std::vector<double>& x, int p_g, int q_g) {
    GarchParams params;
    params.omega = std::exp(x[0]);
    const int m = p_g + q_g;
    if (m == 0) return params;

    const double persistence = kPartialCap * logistic(x[1]);
    double normalizer = 1.0;
    for (int j = 1; j < m; ++j) normalizer += std::exp(x[static_cast<std::size_t>(1 + j)]);
    std::vector<double> coeffs(static_cast<std::size_t>(m));
    coeffs[0] = persistence / normalizer;
    for (int j = 1; j < m; ++j)
        coeffs[static_cast<std::size_t>(j)] =
            persistence * std::exp(x[static_cast<std::size_t>(1 + j)]) / normalizer;

    params.alpha.assign(coeffs.begin(), coeffs.begin() + p_g);
    params.beta.assign(coeffs.begin() + p_g, coeffs.end());
    return params;
}

GarchFit fit_garch(std::span<const double> residuals, int p_g, int q_g,
                   const NelderMeadOptions& optimizer) {
    GarchFit result;
    const int m = p_g + q_g;
    const double var = std::max(sample_variance(residuals), 1e-300);

    if (m == 0) {
        double mean_sq = 0.0;
        for (double e : residuals) mean_sq += e * e;
        mean_sq /= static_cast<double>(residuals.size());
        result.params.omega = std::max(mean_sq, 1e-300);  // exact MLE for constant variance
        result.converged = true;
        return result;
    }

    auto objective = [&](const std::vector<double>& x) {
        const GarchParams params = decode_garch(x, p_g, q_g);
        if (!std::isfinite(params.omega) || !(params.omega > 0.0)) return kInf;
        const auto ll = garch_log_likelihood(params, residuals);
        return ll ? -*ll : kInf;
    };

    // Start at 90% persistence, weighted toward the GARCH block.
    const double start_persistence = 0.9;
    double alpha_total = q_g > 0 ? 0.1 : start_persistence;
    if (p_g == 0) alpha_total = 0.0;
    const double beta_total = start_persistence - alpha_total;

    std::vector<double> weights(static_cast<std::size_t>(m));
    for (int i = 0; i < p_g; ++i) weights[static_cast<std::size_t>(i)] = alpha_total / p_g;
    for (int j = 0; j < q_g; ++j) weights[static_cast<std::size_t>(p_g + j)] = beta_total / q_g;

    std::vector<double> start(static_cast<std::size_t>(1 + m), 0.0);
    start[0] = std::log(var * (1.0 - start_persistence));
    start[1] = std::log(start_persistence / (1.0 - start_persistence));
    for (int j = 1; j < m; ++j)
        start[static_cast<std::size_t>(1 + j)] =
            std::log(weights[static_cast<std::size_t>(j)] / weights[0]);

    std::vector<double> steps(start.size(), 0.5);
    steps[0] = 1.0;

    const NelderMeadResult opt = nelder_mead(objective, start, steps, optimizer);
    result.params = decode_garch(opt.x, p_g, q_g);
    result.converged = opt.converged && std::isfinite(opt.value);
    result.iterations = opt.iterations;
    return result;
}

bool candidate_better(const GridCandidate& a, const GridCandidate& b) {
    if (a.aic != b.aic) return a.aic < b.aic;
    if (a.k != b.k) return a.k < b.k;
    return std::tie(a.p, a.q, a.p_garch, a.q_garch) < std::tie(b.p, b.q, b.p_garch, b.q_garch);
}

}  // namespace

namespace detail {

std::vector<double> pacf_to_ar(const std::vector<double>& partials) {
    const int p = static_cast<int>(partials.size());
    std::vector<double> coeffs(static_cast<std::size_t>(p), 0.0);
    std::vector<double> prev;
    for (int k = 0; k < p; ++k) {
        prev = coeffs;
        coeffs[static_cast<std::size_t>(k)] = partials[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i)
            coeffs[static_cast<std::size_t>(i)] =
                prev[static_cast<std::size_t>(i)] -
                partials[static_cast<std::size_t>(k)] * prev[static_cast<std::size_t>(k - 1 - i)];
    }
    return coeffs;
}

std::vector<double> unconstrained_to_ar(std::span<const double> x) {
    std::vector<double> partials(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) partials[i] = clamp_partial(std::tanh(x[i]));
    return pacf_to_ar(partials);
}

std::vector<double> unconstrained_to_ma(std::span<const double> x) {
    // Same region as the AR map up to a sign flip: 1 + sum theta_j z^j has
    // all roots outside the unit circle.
    std::vector<double> coeffs = unconstrained_to_ar(x);
    for (double& c : coeffs) c = -c;
    return coeffs;
}

}  // namespace detail

std::string OrderGrid::describe() const {
    std::ostringstream out;
    out << "p in [" << p_min << ".." << p_max << "], q in [" << q_min << ".." << q_max
        << "], p_garch in [" << pg_min << ".." << pg_max << "], q_garch in [" << qg_min << ".."
        << qg_max << "]";
    return out.str();
}

FitReport fit(std::span<const double> returns, const OrderGrid& grid, const FitOptions& options) {
    if (grid.empty()) throw std::invalid_argument("fit: empty order grid");
    if (static_cast<int>(returns.size()) < options.min_length) {
        std::ostringstream out;
        out << "fit: series '" << options.series_label << "' has " << returns.size()
            << " observations, need at least " << options.min_length;
        throw std::invalid_argument(out.str());
    }
    const auto [lo, hi] = std::minmax_element(returns.begin(), returns.end());
    if (*lo == *hi) {
        throw std::runtime_error("fit: degenerate input: series '" + options.series_label +
                                 "' has zero variance");
    }
    const int max_order = std::max(std::max(grid.p_max, grid.q_max), std::max(grid.pg_max, grid.qg_max));
    if (static_cast<int>(returns.size()) <= max_order)
        throw std::invalid_argument("fit: series shorter than the largest grid order");

    // ARMA stage is shared across the GARCH sub-grid of each (p, q).
    struct ArmaSlot {
        int p, q;
        ArmaFit fit;
    };
    std::vector<ArmaSlot> arma_fits;
    for (int p = grid.p_min; p <= grid.p_max; ++p)
        for (int q = grid.q_min; q <= grid.q_max; ++q) arma_fits.push_back({p, q, {}});

    const int threads = std::max(1, options.threads);
    auto run_chunk = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            arma_fits[i].fit = fit_arma(returns, arma_fits[i].p, arma_fits[i].q, options.optimizer);
    };
    if (threads == 1 || arma_fits.size() < 2) {
        run_chunk(0, arma_fits.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t per = (arma_fits.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(arma_fits.size(), per * static_cast<std::size_t>(t));
            const std::size_t end = std::min(arma_fits.size(), begin + per);
            if (begin < end) pool.emplace_back(run_chunk, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    struct Evaluated {
        GridCandidate candidate;
        ArmaParams arma;
        GarchParams garch;
    };
    std::vector<Evaluated> evaluated(arma_fits.size() *
                                     static_cast<std::size_t>((grid.pg_max - grid.pg_min + 1) *
                                                              (grid.qg_max - grid.qg_min + 1)));

    auto run_garch_chunk = [&](std::size_t begin, std::size_t end) {
        const int garch_per_arma = (grid.pg_max - grid.pg_min + 1) * (grid.qg_max - grid.qg_min + 1);
        for (std::size_t slot = begin; slot < end; ++slot) {
            const ArmaSlot& arma_slot = arma_fits[slot];
            std::size_t index = slot * static_cast<std::size_t>(garch_per_arma);
            for (int p_g = grid.pg_min; p_g <= grid.pg_max; ++p_g) {
                for (int q_g = grid.qg_min; q_g <= grid.qg_max; ++q_g, ++index) {
                    Evaluated& out = evaluated[index];
                    out.arma = arma_slot.fit.params;
                    GridCandidate& cand = out.candidate;
                    cand.p = arma_slot.p;
                    cand.q = arma_slot.q;
                    cand.p_garch = p_g;
                    cand.q_garch = q_g;
                    cand.k = parameter_count(cand.p, cand.q, p_g, q_g);

                    const GarchFit garch_fit =
                        fit_garch(arma_slot.fit.residuals, p_g, q_g, options.optimizer);
                    out.garch = garch_fit.params;
                    cand.iterations = arma_slot.fit.iterations + garch_fit.iterations;

                    const auto ll = log_likelihood(out.arma, out.garch, returns);
                    if (ll && std::isfinite(*ll)) {
                        cand.log_likelihood = *ll;
                        cand.aic = aic(cand.k, *ll);
                        cand.converged = arma_slot.fit.converged && garch_fit.converged;
                    }
                    if (!cand.converged || !std::isfinite(cand.aic)) {
                        cand.log_likelihood = std::numeric_limits<double>::quiet_NaN();
                        cand.aic = kInf;
                        cand.converged = false;
                    }
                }
            }
        }
    };
    if (threads == 1 || arma_fits.size() < 2) {
        run_garch_chunk(0, arma_fits.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t per = (arma_fits.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(arma_fits.size(), per * static_cast<std::size_t>(t));
            const std::size_t end = std::min(arma_fits.size(), begin + per);
            if (begin < end) pool.emplace_back(run_garch_chunk, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    const Evaluated* best = nullptr;
    for (const Evaluated& e : evaluated) {
        if (!e.candidate.converged) continue;
        if (!best || candidate_better(e.candidate, best->candidate)) best = &e;
    }
    if (!best) {
        throw std::runtime_error("fit: no grid candidate converged for series '" +
                                 options.series_label + "' over grid " + grid.describe());
    }

    FitReport report;
    report.model.state_id = options.state_id;
    report.model.arma = best->arma;
    report.model.garch = best->garch;
    report.model.innovation = Innovation::normal;
    report.log_likelihood = best->candidate.log_likelihood;
    report.k = best->candidate.k;
    report.aic = best->candidate.aic;
    report.converged = best->candidate.converged;
    report.iterations = best->candidate.iterations;
    report.grid.reserve(evaluated.size());
    for (const Evaluated& e : evaluated) report.grid.push_back(e.candidate);
    return report;
}

}  // namespace proteus::econometrics
