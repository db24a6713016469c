#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace proteus::io {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

struct ManifestEntry {
    std::string path;  // relative to the manifest's directory
    std::string sha256;
    std::int64_t rows = 0;

    bool operator==(const ManifestEntry&) const = default;
};

struct RunManifest {
    std::uint64_t seed = 0;
    std::string created_utc;
    std::map<std::string, std::string> config_digests;
    std::vector<ManifestEntry> files;
    std::int64_t split_index = 0;

    bool operator==(const RunManifest&) const = default;
};

// ISO-8601 UTC; honors SOURCE_DATE_EPOCH so reruns can pin the timestamp.
std::string manifest_timestamp();

// Hashes each (relative path, rows) pair against base_dir.
RunManifest make_manifest(std::uint64_t seed,
                          const std::map<std::string, std::string>& config_digests,
                          const std::vector<std::pair<std::string, std::int64_t>>& files,
                          std::int64_t split_index, const std::filesystem::path& base_dir);

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

// Recomputes every referenced file's hash; throws naming the first file
// that is missing or changed.
void verify_manifest(const std::filesystem::path& path);

}  // namespace proteus::io
