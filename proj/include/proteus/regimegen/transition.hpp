#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace proteus::regimegen {

// One scheduled drift. The window is half open: instances
// [start_index, start_index + duration) blend from_state into to_state.
struct TransitionEvent {
    std::int64_t start_index = 0;
    std::int64_t duration = 0;
    int from_state = 0;
    int to_state = 0;

    std::int64_t end_index() const { return start_index + duration; }
    bool operator==(const TransitionEvent&) const = default;
};

struct TransitionMap {
    std::vector<TransitionEvent> events;  // sorted by start_index
    int initial_state = 1;
    std::int64_t stream_length = 0;

    bool operator==(const TransitionMap&) const = default;
};

struct StreamConfig {
    std::int64_t length = 1'500'000;
    std::int64_t interval = 5'000;  // instances between drift starts
    std::uint64_t seed = 0;
    std::int64_t gradual_duration = 1'000;
    std::int64_t abrupt_duration = 100;
    int initial_state = 1;
    bool mean_neutralize = false;      // zero each model's mu before simulating
    bool shared_innovations = true;    // blend both models around one draw per step
    int burn_in_steps = 500;
};

// Non-fatal configuration advisories (e.g. a length that is not a
// multiple of the drift interval).
std::vector<std::string> config_warnings(const StreamConfig& config);

// Logistic blend weight over [start, start + duration): steepness
// 10/duration centered on the window midpoint, clamped to 0 before the
// window and 1 at or after its end.
double sigmoid_weight(std::int64_t t, std::int64_t start, std::int64_t duration);

// Checks ordering, overlap, chain consistency and state ranges; returns
// one message per violation, each naming the offending event row.
std::vector<std::string> validate_map(const TransitionMap& map, int n_states = 0);

// Throws std::invalid_argument listing every violation when invalid.
void require_valid(const TransitionMap& map, int n_states = 0);

// Randomized map: one drift per interval boundary, destination drawn
// uniformly among the other states, abrupt/gradual durations balanced to
// within one event. Deterministic in config.seed.
TransitionMap generate_map(const StreamConfig& config, int n_states);

}  // namespace proteus::regimegen
