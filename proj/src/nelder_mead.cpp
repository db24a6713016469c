#include "proteus/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace proteus {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Simplex {
    std::vector<std::vector<double>> vertices;
    std::vector<double> values;

    void sort() {
        const std::size_t m = values.size();
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> v2(m);
        std::vector<double> f2(m);
        for (std::size_t i = 0; i < m; ++i) {
            v2[i] = std::move(vertices[order[i]]);
            f2[i] = values[order[i]];
        }
        vertices = std::move(v2);
        values = std::move(f2);
    }
};

double spread(const Simplex& s) {
    const double best = s.values.front();
    const double worst = s.values.back();
    if (!std::isfinite(worst)) return std::numeric_limits<double>::infinity();
    return std::abs(worst - best) / (std::abs(best) + 1e-12);
}

NelderMeadResult run_once(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& start, const std::vector<double>& steps,
                          const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    Simplex s;
    s.vertices.reserve(n + 1);
    s.vertices.push_back(start);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = start;
        v[i] += steps[i];
        s.vertices.push_back(std::move(v));
    }
    s.values.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) s.values[i] = objective(s.vertices[i]);

    NelderMeadResult result;
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        s.sort();
        if (spread(s) <= options.relative_tolerance) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < n; ++d) centroid[d] += s.vertices[i][d];
        for (double& c : centroid) c /= static_cast<double>(n);

        auto point_along = [&](double scale) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + scale * (centroid[d] - s.vertices[n][d]);
            return p;
        };

        auto reflected = point_along(kReflect);
        const double f_reflected = objective(reflected);

        if (f_reflected < s.values[0]) {
            auto expanded = point_along(kReflect * kExpand);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                s.vertices[n] = std::move(expanded);
                s.values[n] = f_expanded;
            } else {
                s.vertices[n] = std::move(reflected);
                s.values[n] = f_reflected;
            }
        } else if (f_reflected < s.values[n - 1]) {
            s.vertices[n] = std::move(reflected);
            s.values[n] = f_reflected;
        } else {
            const bool outside = f_reflected < s.values[n];
            auto contracted = point_along(outside ? kReflect * kContract : -kContract);
            const double f_contracted = objective(contracted);
            if (f_contracted < (outside ? f_reflected : s.values[n])) {
                s.vertices[n] = std::move(contracted);
                s.values[n] = f_contracted;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t d = 0; d < n; ++d)
                        s.vertices[i][d] = s.vertices[0][d] + kShrink * (s.vertices[i][d] - s.vertices[0][d]);
                    s.values[i] = objective(s.vertices[i]);
                }
            }
        }
    }
    s.sort();
    result.x = s.vertices[0];
    result.value = s.values[0];
    result.iterations = iter;
    return result;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start, std::vector<double> steps,
                             const NelderMeadOptions& options) {
    if (start.empty()) throw std::invalid_argument("nelder_mead: empty start point");
    if (steps.size() != start.size())
        throw std::invalid_argument("nelder_mead: steps/start size mismatch");

    NelderMeadResult best = run_once(objective, start, steps, options);
    int total_iterations = best.iterations;
    double scale = 1.0;
    for (int r = 0; r < options.restarts && !best.converged; ++r) {
        scale *= 0.5;
        auto shrunk = steps;
        for (double& v : shrunk) v *= scale;
        NelderMeadResult retry = run_once(objective, best.x, shrunk, options);
        total_iterations += retry.iterations;
        if (retry.value <= best.value) {
            retry.iterations = total_iterations;
            best = std::move(retry);
        }
    }
    best.iterations = total_iterations;
    return best;
}

}  // namespace proteus
