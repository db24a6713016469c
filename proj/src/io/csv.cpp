#include "proteus/io/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace proteus::io {

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

void append_double(std::string& out, double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("append_double: conversion failed");
    out.append(buffer, ptr);
}

void append_int(std::string& out, std::int64_t value) {
    char buffer[24];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("append_int: conversion failed");
    out.append(buffer, ptr);
}

double parse_double(std::string_view text, const std::string& context) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error(context + ": malformed number '" + std::string(text) + "'");
    return value;
}

std::int64_t parse_int(std::string_view text, const std::string& context) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error(context + ": malformed integer '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + path.string());
}

std::vector<std::string_view> split_lines(std::string_view content) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

CsvTable::CsvTable(const std::filesystem::path& path,
                   const std::vector<std::string>& required_header,
                   std::size_t optional_trailing)
    : path_label_(path.string()), content_(read_text_file(path)) {
    auto lines = split_lines(content_);
    if (lines.empty()) throw std::runtime_error(path_label_ + ": empty file");

    const auto header = split_fields(lines.front());
    min_columns_ = required_header.size() - optional_trailing;
    if (header.size() < min_columns_ || header.size() > required_header.size())
        throw std::runtime_error(path_label_ + ": unexpected header '" +
                                 std::string(lines.front()) + "'");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] != required_header[i])
            throw std::runtime_error(path_label_ + ": expected header column '" +
                                     required_header[i] + "', found '" + std::string(header[i]) +
                                     "'");
    }
    column_count_ = header.size();
    lines_.assign(lines.begin() + 1, lines.end());
}

std::vector<std::string_view> CsvTable::fields(std::size_t row) const {
    const auto result = split_fields(lines_[row]);
    if (result.size() != column_count_)
        throw std::runtime_error(context(row, "wrong field count"));
    return result;
}

std::string CsvTable::context(std::size_t row, std::string_view what) const {
    std::ostringstream out;
    out << path_label_ << " row " << (row + 1);
    if (!what.empty()) out << ": " << what;
    return out.str();
}

}  // namespace proteus::io
