#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "proteus/econometrics/fit.hpp"
#include "proteus/econometrics/model.hpp"

namespace proteus::io {

struct FitSummary {
    double log_likelihood = 0.0;
    int k = 0;
    double aic = 0.0;

    bool operator==(const FitSummary&) const = default;
};

struct ModelFile {
    econometrics::RegimeModel model;
    std::optional<FitSummary> fit;

    bool operator==(const ModelFile&) const = default;
};

ModelFile model_file_from_report(const econometrics::FitReport& report);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

// Every *.json in the directory, ordered by filename; state ids must be
// unique across the set.
std::vector<ModelFile> load_model_dir(const std::filesystem::path& dir);

}  // namespace proteus::io
