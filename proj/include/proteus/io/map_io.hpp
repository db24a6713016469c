#pragma once

#include <filesystem>
#include <vector>

#include "proteus/regimegen/stream.hpp"
#include "proteus/regimegen/transition.hpp"

namespace proteus::io {

// Schema: start_index,duration,from_state,to_state — one sorted event per
// row. The file does not carry the stream length; pass it explicitly or
// leave 0 to infer the end of the last event.
void save_map(const std::filesystem::path& path, const regimegen::TransitionMap& map);
regimegen::TransitionMap load_map(const std::filesystem::path& path,
                                  std::int64_t stream_length = 0);

struct GroundTruthEvents {
    std::vector<regimegen::TransitionEvent> events;
    std::vector<regimegen::DriftType> types;
    std::int64_t stream_length = 0;  // inferred on load

    bool operator==(const GroundTruthEvents&) const = default;
};

// Map schema plus a trailing type column in {abrupt, gradual}.
void save_ground_truth_events(const std::filesystem::path& path,
                              const std::vector<regimegen::TransitionEvent>& events,
                              std::int64_t gradual_cutoff = 1'000);
GroundTruthEvents load_ground_truth_events(const std::filesystem::path& path);

}  // namespace proteus::io
