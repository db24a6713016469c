#include "proteus/econometrics/simulate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace proteus::econometrics {

ModelState make_state(const RegimeModel& model) {
    ModelState state;
    const int eps_lags = std::max(model.arma.q(), model.garch.p());
    state.eps = LagBuffer(eps_lags, 0.0);
    state.sig2 = LagBuffer(model.garch.q(), model.garch.unconditional_variance());
    return state;
}

StepMoments conditional_moments(const RegimeModel& model, const ModelState& state,
                                const LagBuffer& ar_history) {
    const ArmaParams& arma = model.arma;
    const GarchParams& garch = model.garch;

    double sig2 = garch.omega;
    for (int i = 1; i <= garch.p(); ++i) {
        const double e = state.eps.lag(i);
        sig2 += garch.alpha[static_cast<std::size_t>(i - 1)] * e * e;
    }
    for (int j = 1; j <= garch.q(); ++j)
        sig2 += garch.beta[static_cast<std::size_t>(j - 1)] * state.sig2.lag(j);

    if (!(sig2 > 0.0) || !std::isfinite(sig2)) {
        std::ostringstream out;
        out << "variance explosion in state " << model.state_id << " at model step "
            << state.steps;
        throw std::runtime_error(out.str());
    }

    double mean = arma.mu;
    for (int i = 1; i <= arma.p(); ++i)
        mean += arma.phi[static_cast<std::size_t>(i - 1)] * ar_history.lag(i);
    for (int j = 1; j <= arma.q(); ++j)
        mean += arma.theta[static_cast<std::size_t>(j - 1)] * state.eps.lag(j);

    return {mean, std::sqrt(sig2)};
}

void commit_step(ModelState& state, const StepMoments& moments, double realized_return) {
    state.eps.push(realized_return - moments.mean);
    state.sig2.push(moments.sigma * moments.sigma);
    ++state.steps;
}

StepResult step(const RegimeModel& model, ModelState& state, LagBuffer& own_history, double z) {
    const StepMoments moments = conditional_moments(model, state, own_history);
    const double value = moments.mean + moments.sigma * z;
    commit_step(state, moments, value);
    own_history.push(value);
    return {moments.mean, moments.sigma, value};
}

void burn_in(const RegimeModel& model, ModelState& state, LagBuffer& history,
             NormalSampler& sampler, int steps) {
    // Start the private path at the stationary mean so early AR terms are
    // centered; the burn-in itself washes the choice out.
    double phi_sum = 0.0;
    for (double c : model.arma.phi) phi_sum += c;
    const double stationary_mean = model.arma.mu / (1.0 - phi_sum);
    for (int k = 1; k <= history.capacity(); ++k) history.push(stationary_mean);

    for (int s = 0; s < steps; ++s) step(model, state, history, sampler.next());
}

}  // namespace proteus::econometrics
