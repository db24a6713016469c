#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace proteus::io {

struct Bar {
    std::string timestamp;  // ISO-8601; ordering is checked lexicographically
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    std::optional<double> volume;

    bool operator==(const Bar&) const = default;
};

struct BarFile {
    std::vector<Bar> bars;

    // r_t = ln(C_t / C_{t-1}); one entry fewer than bars.
    std::vector<double> log_returns() const;
};

// Header: timestamp,open,high,low,close[,volume]. Rows must have strictly
// increasing timestamps, positive prices and high/low bracketing the
// open/close; violations report the offending row.
BarFile load_bars(const std::filesystem::path& path,
                  std::optional<std::int64_t> take = std::nullopt);

void save_bars(const std::filesystem::path& path, const BarFile& bars);

}  // namespace proteus::io
