#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "proteus/marketfeatures/featurize.hpp"
#include "proteus/regimegen/stream.hpp"

namespace proteus::io {

// Schema: index,return,state_from,state_to,blend_weight. The state_to
// field is empty outside transitions, where the weight is 0.
void save_stream(const std::filesystem::path& path, std::span<const double> returns,
                 std::span<const regimegen::InstanceAnnotation> annotations);

struct StreamFile {
    std::vector<double> returns;
    std::vector<regimegen::InstanceAnnotation> annotations;

    bool operator==(const StreamFile&) const = default;
};

StreamFile load_stream(const std::filesystem::path& path);

// Schema: index, the 18 feature columns, label; index is the instance
// index in the source stream, so the first row sits at the warm-up.
void save_features(const std::filesystem::path& path, const marketfeatures::FeatureTable& table);
marketfeatures::FeatureTable load_features(const std::filesystem::path& path);

}  // namespace proteus::io
