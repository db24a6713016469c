#include "proteus/io/stream_io.hpp"

#include <stdexcept>

#include "proteus/io/csv.hpp"

namespace proteus::io {

void save_stream(const std::filesystem::path& path, std::span<const double> returns,
                 std::span<const regimegen::InstanceAnnotation> annotations) {
    if (returns.size() != annotations.size())
        throw std::invalid_argument("save_stream: annotation/return length mismatch");

    std::string out = "index,return,state_from,state_to,blend_weight\n";
    out.reserve(out.size() + returns.size() * 32);
    for (std::size_t t = 0; t < returns.size(); ++t) {
        const auto& a = annotations[t];
        append_int(out, static_cast<std::int64_t>(t));
        out += ',';
        append_double(out, returns[t]);
        out += ',';
        append_int(out, a.state_from);
        out += ',';
        if (a.in_transition()) append_int(out, a.state_to);
        out += ',';
        append_double(out, a.blend_weight);
        out += '\n';
    }
    write_text_file(path, out);
}

StreamFile load_stream(const std::filesystem::path& path) {
    const CsvTable table(path, {"index", "return", "state_from", "state_to", "blend_weight"});
    StreamFile file;
    file.returns.reserve(table.rows());
    file.annotations.reserve(table.rows());
    for (std::size_t row = 0; row < table.rows(); ++row) {
        const auto fields = table.fields(row);
        const std::int64_t index = parse_int(fields[0], table.context(row, "index"));
        if (index != static_cast<std::int64_t>(row))
            throw std::runtime_error(table.context(row, "indices must be contiguous from 0"));
        file.returns.push_back(parse_double(fields[1], table.context(row, "return")));
        regimegen::InstanceAnnotation a;
        a.state_from = static_cast<int>(parse_int(fields[2], table.context(row, "state_from")));
        a.state_to = fields[3].empty()
                         ? 0
                         : static_cast<int>(parse_int(fields[3], table.context(row, "state_to")));
        a.blend_weight = parse_double(fields[4], table.context(row, "blend_weight"));
        file.annotations.push_back(a);
    }
    return file;
}

void save_features(const std::filesystem::path& path, const marketfeatures::FeatureTable& table) {
    std::string out = "index";
    for (const auto& name : marketfeatures::kFeatureNames) {
        out += ',';
        out += name;
    }
    out += ",label\n";
    out.reserve(out.size() + table.rows.size() * 20 * 12);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        append_int(out, table.first_index + static_cast<std::int64_t>(i));
        for (int c = 0; c < marketfeatures::kFeatureCount; ++c) {
            out += ',';
            append_double(out, row.feature(c));
        }
        out += ',';
        append_int(out, row.label);
        out += '\n';
    }
    write_text_file(path, out);
}

marketfeatures::FeatureTable load_features(const std::filesystem::path& path) {
    std::vector<std::string> header = {"index"};
    header.insert(header.end(), marketfeatures::kFeatureNames.begin(),
                  marketfeatures::kFeatureNames.end());
    header.push_back("label");
    const CsvTable table(path, header);

    marketfeatures::FeatureTable result;
    result.rows.reserve(table.rows());
    for (std::size_t i = 0; i < table.rows(); ++i) {
        const auto fields = table.fields(i);
        const std::int64_t index = parse_int(fields[0], table.context(i, "index"));
        if (i == 0) result.first_index = index;
        else if (index != result.first_index + static_cast<std::int64_t>(i))
            throw std::runtime_error(table.context(i, "indices must be contiguous"));

        marketfeatures::FeatureRow row;
        double values[marketfeatures::kFeatureCount];
        for (int c = 0; c < marketfeatures::kFeatureCount; ++c)
            values[c] = parse_double(fields[static_cast<std::size_t>(c) + 1],
                                     table.context(i, marketfeatures::kFeatureNames[static_cast<std::size_t>(c)]));
        row.rsi10 = values[0];
        row.willr10 = values[1];
        row.macd = values[2];
        row.cci10 = values[3];
        row.mom10 = values[4];
        row.sk = values[5];
        row.sd = values[6];
        row.sma5 = values[7];
        row.sma10 = values[8];
        row.wma10 = values[9];
        row.ema10 = values[10];
        row.trima10 = values[11];
        row.adx10 = values[12];
        row.boll_upper = values[13];
        row.boll_lower = values[14];
        row.roc10 = values[15];
        row.aroon_down = values[16];
        row.aroon_up = values[17];
        const std::int64_t label = parse_int(fields.back(), table.context(i, "label"));
        if (label != 0 && label != 1)
            throw std::runtime_error(table.context(i, "label must be 0 or 1"));
        row.label = static_cast<int>(label);
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace proteus::io
