#include "proteus/econometrics/model.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace proteus::econometrics {

double GarchParams::persistence() const {
    double s = 0.0;
    for (double a : alpha) s += a;
    for (double b : beta) s += b;
    return s;
}

double GarchParams::unconditional_variance() const {
    return omega / (1.0 - persistence());
}

std::string to_string(Innovation innovation) {
    switch (innovation) {
        case Innovation::normal: return "normal";
    }
    return "normal";
}

Innovation innovation_from_string(const std::string& name) {
    if (name == "normal") return Innovation::normal;
    throw std::invalid_argument("unsupported innovation distribution: " + name);
}

std::string ValidationResult::message() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) out << "; ";
        out << violations[i];
    }
    return out.str();
}

double ar_companion_spectral_radius(const std::vector<double>& phi) {
    const int p = static_cast<int>(phi.size());
    if (p == 0) return 0.0;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i) companion(0, i) = phi[static_cast<std::size_t>(i)];
    for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    Eigen::VectorXcd eigenvalues = companion.eigenvalues();
    double radius = 0.0;
    for (int i = 0; i < p; ++i) radius = std::max(radius, std::abs(eigenvalues(i)));
    return radius;
}

ValidationResult validate(const ArmaParams& arma, const GarchParams& garch) {
    ValidationResult result;
    auto flag = [&](const std::string& text) { result.violations.push_back(text); };

    if (!std::isfinite(arma.mu)) flag("mu is not finite");
    for (double c : arma.phi)
        if (!std::isfinite(c)) { flag("AR coefficient is not finite"); break; }
    for (double c : arma.theta)
        if (!std::isfinite(c)) { flag("MA coefficient is not finite"); break; }

    if (!arma.phi.empty()) {
        bool finite = true;
        for (double c : arma.phi) finite = finite && std::isfinite(c);
        if (finite) {
            const double radius = ar_companion_spectral_radius(arma.phi);
            if (!(radius < 1.0)) {
                std::ostringstream out;
                out << "stationarity: AR companion spectral radius " << radius << " >= 1";
                flag(out.str());
            }
        }
    }

    if (!(garch.omega > 0.0) || !std::isfinite(garch.omega)) flag("omega must be positive and finite");
    for (double a : garch.alpha)
        if (!(a >= 0.0) || !std::isfinite(a)) { flag("ARCH coefficients must be non-negative and finite"); break; }
    for (double b : garch.beta)
        if (!(b >= 0.0) || !std::isfinite(b)) { flag("GARCH coefficients must be non-negative and finite"); break; }

    const double persistence = garch.persistence();
    if (!(persistence < 1.0)) {
        std::ostringstream out;
        out << "variance finiteness: alpha/beta sum " << persistence << " >= 1";
        flag(out.str());
    }

    return result;
}

ValidationResult validate(const RegimeModel& model) {
    ValidationResult result = validate(model.arma, model.garch);
    if (model.state_id < 1) result.violations.push_back("state_id must be >= 1");
    return result;
}

void require_valid(const RegimeModel& model) {
    const ValidationResult result = validate(model);
    if (!result.ok()) {
        std::ostringstream out;
        out << "invalid model (state " << model.state_id << "): " << result.message();
        throw std::invalid_argument(out.str());
    }
}

}  // namespace proteus::econometrics
