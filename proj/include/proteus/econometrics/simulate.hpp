#pragma once

#include <cstdint>
#include <vector>

#include "proteus/econometrics/model.hpp"
#include "proteus/rng.hpp"

namespace proteus::econometrics {

// Fixed-capacity lag window; lag(1) is the most recent value.
class LagBuffer {
public:
    LagBuffer() = default;
    explicit LagBuffer(int capacity, double fill = 0.0)
        : values_(static_cast<std::size_t>(capacity), fill) {}

    int capacity() const { return static_cast<int>(values_.size()); }

    double lag(int k) const {  // 1 <= k <= capacity
        const int n = capacity();
        return values_[static_cast<std::size_t>((head_ + n - k) % n)];
    }

    void push(double v) {
        if (values_.empty()) return;
        values_[static_cast<std::size_t>(head_)] = v;
        head_ = (head_ + 1) % capacity();
    }

private:
    std::vector<double> values_;
    int head_ = 0;
};

// Per-model recursion state: innovation and variance histories plus a
// step counter used in diagnostics.
struct ModelState {
    LagBuffer eps;
    LagBuffer sig2;
    std::int64_t steps = 0;
};

struct StepMoments {
    double mean = 0.0;
    double sigma = 0.0;
};

struct StepResult {
    double mean = 0.0;
    double sigma = 0.0;
    double value = 0.0;  // mean + sigma * z
};

// State initialized at the model's stationary point: eps = 0,
// sig2 = unconditional variance.
ModelState make_state(const RegimeModel& model);

// GARCH variance and conditional mean for the next step. AR terms read
// `ar_history` (the shared return path); MA/ARCH terms read the model's
// own state. Throws on a non-finite variance, naming the step index.
StepMoments conditional_moments(const RegimeModel& model, const ModelState& state,
                                const LagBuffer& ar_history);

// Pushes eps = realized_return - mean and the step variance.
void commit_step(ModelState& state, const StepMoments& moments, double realized_return);

// Solo step: draws nothing itself, applies z, commits the model's own
// output and appends it to `own_history`.
StepResult step(const RegimeModel& model, ModelState& state, LagBuffer& own_history, double z);

// Runs `steps` private steps so the recursion forgets its initial state.
// `history` receives the model's own returns and must have capacity for
// every AR lag the caller will need later.
void burn_in(const RegimeModel& model, ModelState& state, LagBuffer& history,
             NormalSampler& sampler, int steps);

}  // namespace proteus::econometrics
