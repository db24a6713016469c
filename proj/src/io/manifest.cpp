#include "proteus/io/manifest.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "proteus/io/csv.hpp"

namespace proteus::io {

using nlohmann::json;

namespace {

std::string to_hex(const unsigned char* digest, unsigned int length) {
    static const char* kHex = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0xF]);
    }
    return out;
}

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new()) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256: init failed");
    }
    ~Sha256() { EVP_MD_CTX_free(ctx_); }
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(const char* data, std::size_t size) {
        if (EVP_DigestUpdate(ctx_, data, size) != 1)
            throw std::runtime_error("sha256: update failed");
    }

    std::string finish() {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_DigestFinal_ex(ctx_, digest, &length) != 1)
            throw std::runtime_error("sha256: finalize failed");
        return to_hex(digest, length);
    }

private:
    EVP_MD_CTX* ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    Sha256 hasher;
    hasher.update(bytes.data(), bytes.size());
    return hasher.finish();
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Sha256 hasher;
    char buffer[1 << 16];
    while (in) {
        in.read(buffer, sizeof(buffer));
        hasher.update(buffer, static_cast<std::size_t>(in.gcount()));
    }
    return hasher.finish();
}

std::string manifest_timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* pinned = std::getenv("SOURCE_DATE_EPOCH")) {
        now = static_cast<std::time_t>(std::strtoll(pinned, nullptr, 10));
    }
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

RunManifest make_manifest(std::uint64_t seed,
                          const std::map<std::string, std::string>& config_digests,
                          const std::vector<std::pair<std::string, std::int64_t>>& files,
                          std::int64_t split_index, const std::filesystem::path& base_dir) {
    RunManifest manifest;
    manifest.seed = seed;
    manifest.created_utc = manifest_timestamp();
    manifest.config_digests = config_digests;
    manifest.split_index = split_index;
    manifest.files.reserve(files.size());
    for (const auto& [relative, rows] : files)
        manifest.files.push_back({relative, sha256_file(base_dir / relative), rows});
    return manifest;
}

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    json doc;
    doc["seed"] = manifest.seed;
    doc["created_utc"] = manifest.created_utc;
    doc["configs"] = manifest.config_digests;
    doc["split_index"] = manifest.split_index;
    doc["files"] = json::array();
    for (const auto& entry : manifest.files)
        doc["files"].push_back(
            {{"path", entry.path}, {"sha256", entry.sha256}, {"rows", entry.rows}});
    write_text_file(path, doc.dump(2) + "\n");
}

RunManifest load_manifest(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    try {
        RunManifest manifest;
        manifest.seed = doc.at("seed").get<std::uint64_t>();
        manifest.created_utc = doc.at("created_utc").get<std::string>();
        manifest.config_digests =
            doc.at("configs").get<std::map<std::string, std::string>>();
        manifest.split_index = doc.at("split_index").get<std::int64_t>();
        for (const auto& entry : doc.at("files")) {
            manifest.files.push_back({entry.at("path").get<std::string>(),
                                      entry.at("sha256").get<std::string>(),
                                      entry.at("rows").get<std::int64_t>()});
        }
        return manifest;
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void verify_manifest(const std::filesystem::path& path) {
    const RunManifest manifest = load_manifest(path);
    const std::filesystem::path base = path.has_parent_path()
                                           ? path.parent_path()
                                           : std::filesystem::path(".");
    for (const auto& entry : manifest.files) {
        const std::filesystem::path file = base / entry.path;
        if (!std::filesystem::exists(file))
            throw std::runtime_error("manifest verification failed: missing file " +
                                     file.string());
        const std::string digest = sha256_file(file);
        if (digest != entry.sha256)
            throw std::runtime_error("manifest verification failed: " + file.string() +
                                     " hash mismatch (expected " + entry.sha256 + ", found " +
                                     digest + ")");
    }
}

}  // namespace proteus::io
