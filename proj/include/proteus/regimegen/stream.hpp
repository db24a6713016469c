#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "proteus/econometrics/model.hpp"
#include "proteus/regimegen/transition.hpp"

namespace proteus::regimegen {

enum class DriftType { abrupt, gradual };

// Events shorter than the gradual duration are abrupt.
DriftType classify_duration(std::int64_t duration, std::int64_t gradual_cutoff = 1'000);

// Which generative process (or pair of processes) produced one instance.
// state_to is 0 outside transitions, where blend_weight is 0 as well.
struct InstanceAnnotation {
    int state_from = 0;
    int state_to = 0;
    double blend_weight = 0.0;

    bool in_transition() const { return state_to != 0; }
    bool operator==(const InstanceAnnotation&) const = default;
};

// Pure expansion of a transition map to one annotation per instance.
std::vector<InstanceAnnotation> annotate_instances(const TransitionMap& map,
                                                   std::int64_t length);

struct GroundTruthLog {
    int initial_state = 1;
    std::vector<TransitionEvent> events;
    std::vector<InstanceAnnotation> instances;
};

struct StreamResult {
    std::vector<double> returns;
    GroundTruthLog log;
};

// Sequential path-dependent simulation. Every model keeps filtering the
// emitted return path with its own recursions; inside a transition window
// the emitted value interpolates the two active models' outputs at the
// sigmoid weight, both models seeing the same innovation by default.
StreamResult simulate_stream(const std::vector<econometrics::RegimeModel>& models,
                             const TransitionMap& map, const StreamConfig& config);

// Stream i runs with seed mix_seed(base_seed, i). The sink receives each
// finished stream, possibly from different worker threads, never twice
// for the same index.
void simulate_batch(const std::vector<econometrics::RegimeModel>& models,
                    const TransitionMap& map, const StreamConfig& config, int n_streams,
                    std::uint64_t base_seed, int threads,
                    const std::function<void(int, StreamResult&&)>& sink);

std::vector<StreamResult> simulate_batch(const std::vector<econometrics::RegimeModel>& models,
                                         const TransitionMap& map, const StreamConfig& config,
                                         int n_streams, std::uint64_t base_seed, int threads = 1);

}  // namespace proteus::regimegen
