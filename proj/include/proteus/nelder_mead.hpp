#pragma once

#include <functional>
#include <vector>

namespace proteus {

struct NelderMeadOptions {
    int max_iterations = 2000;
    double relative_tolerance = 1e-8;
    int restarts = 3;  // extra runs re-centered on the incumbent best
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Downhill simplex minimizer. The objective may return +inf to reject a
// point; the start point must be finite. `steps` sets the per-dimension
// offset used to build the initial simplex.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start,
                             std::vector<double> steps,
                             const NelderMeadOptions& options = {});

}  // namespace proteus
