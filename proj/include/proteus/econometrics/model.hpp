#pragma once

#include <string>
#include <vector>

namespace proteus::econometrics {

// Conditional-mean parameters. The intercept form is used throughout:
//   mean_t = mu + sum_i phi[i]*r_{t-1-i} + sum_j theta[j]*eps_{t-1-j}
struct ArmaParams {
    double mu = 0.0;
    std::vector<double> phi;    // AR coefficients, lag 1..p
    std::vector<double> theta;  // MA coefficients, lag 1..q

    int p() const { return static_cast<int>(phi.size()); }
    int q() const { return static_cast<int>(theta.size()); }

    bool operator==(const ArmaParams&) const = default;
};

// Conditional-variance parameters:
//   sig2_t = omega + sum_i alpha[i]*eps2_{t-1-i} + sum_j beta[j]*sig2_{t-1-j}
struct GarchParams {
    double omega = 1.0;
    std::vector<double> alpha;  // ARCH coefficients, lag 1..p_g
    std::vector<double> beta;   // GARCH coefficients, lag 1..q_g

    int p() const { return static_cast<int>(alpha.size()); }
    int q() const { return static_cast<int>(beta.size()); }

    double persistence() const;
    // omega / (1 - persistence); requires persistence < 1
    double unconditional_variance() const;

    bool operator==(const GarchParams&) const = default;
};

enum class Innovation { normal };

std::string to_string(Innovation innovation);
Innovation innovation_from_string(const std::string& name);

// One fitted generative process for a single market state.
struct RegimeModel {
    int state_id = 1;
    ArmaParams arma;
    GarchParams garch;
    Innovation innovation = Innovation::normal;

    bool operator==(const RegimeModel&) const = default;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string message() const;
};

// Checks every parameter invariant by name; never throws.
ValidationResult validate(const ArmaParams& arma, const GarchParams& garch);
ValidationResult validate(const RegimeModel& model);

// Throws std::invalid_argument carrying the violation list when invalid.
void require_valid(const RegimeModel& model);

// Spectral radius of the AR companion matrix; stationary iff < 1.
double ar_companion_spectral_radius(const std::vector<double>& phi);

}  // namespace proteus::econometrics
