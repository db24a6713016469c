#include "proteus/io/bars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "proteus/io/csv.hpp"

namespace proteus::io {

std::vector<double> BarFile::log_returns() const {
    std::vector<double> returns;
    if (bars.size() < 2) return returns;
    returns.reserve(bars.size() - 1);
    for (std::size_t t = 1; t < bars.size(); ++t)
        returns.push_back(std::log(bars[t].close / bars[t - 1].close));
    return returns;
}

BarFile load_bars(const std::filesystem::path& path, std::optional<std::int64_t> take) {
    if (take && *take < 2)
        throw std::invalid_argument("load_bars: take must keep at least two bars");

    const CsvTable table(path, {"timestamp", "open", "high", "low", "close", "volume"},
                         /*optional_trailing=*/1);
    const bool has_volume = table.columns() == 6;

    BarFile result;
    const std::size_t keep =
        take ? std::min<std::size_t>(table.rows(), static_cast<std::size_t>(*take))
             : table.rows();
    result.bars.reserve(keep);

    for (std::size_t row = 0; row < keep; ++row) {
        const auto fields = table.fields(row);
        Bar bar;
        bar.timestamp = std::string(fields[0]);
        bar.open = parse_double(fields[1], table.context(row, "open"));
        bar.high = parse_double(fields[2], table.context(row, "high"));
        bar.low = parse_double(fields[3], table.context(row, "low"));
        bar.close = parse_double(fields[4], table.context(row, "close"));
        if (has_volume) bar.volume = parse_double(fields[5], table.context(row, "volume"));

        if (bar.timestamp.empty())
            throw std::runtime_error(table.context(row, "empty timestamp"));
        if (!(bar.open > 0.0 && bar.high > 0.0 && bar.low > 0.0 && bar.close > 0.0))
            throw std::runtime_error(table.context(row, "prices must be positive"));
        if (bar.low > std::min(bar.open, bar.close) || bar.high < std::max(bar.open, bar.close))
            throw std::runtime_error(table.context(row, "high/low do not bracket open/close"));
        if (bar.volume && *bar.volume < 0.0)
            throw std::runtime_error(table.context(row, "volume must be non-negative"));
        if (!result.bars.empty() && bar.timestamp <= result.bars.back().timestamp)
            throw std::runtime_error(table.context(row, "timestamp not strictly increasing"));
        result.bars.push_back(std::move(bar));
    }
    if (result.bars.size() < 2)
        throw std::runtime_error(path.string() + ": need at least two bars");
    return result;
}

void save_bars(const std::filesystem::path& path, const BarFile& bars) {
    const bool has_volume = !bars.bars.empty() && bars.bars.front().volume.has_value();
    std::string out = has_volume ? "timestamp,open,high,low,close,volume\n"
                                 : "timestamp,open,high,low,close\n";
    for (const Bar& bar : bars.bars) {
        out += bar.timestamp;
        out += ',';
        append_double(out, bar.open);
        out += ',';
        append_double(out, bar.high);
        out += ',';
        append_double(out, bar.low);
        out += ',';
        append_double(out, bar.close);
        if (has_volume) {
            out += ',';
            append_double(out, bar.volume.value_or(0.0));
        }
        out += '\n';
    }
    write_text_file(path, out);
}

}  // namespace proteus::io
