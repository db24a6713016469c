#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace proteus::io {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);
void append_double(std::string& out, double value);
void append_int(std::string& out, std::int64_t value);

double parse_double(std::string_view text, const std::string& context);
std::int64_t parse_int(std::string_view text, const std::string& context);

std::vector<std::string_view> split_fields(std::string_view line, char delimiter = ',');

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Splits file content into lines, dropping trailing carriage returns and a
// final empty line.
std::vector<std::string_view> split_lines(std::string_view content);

// Row-oriented CSV access with a required header and 1-based data row
// numbers in every error message.
class CsvTable {
public:
    CsvTable(const std::filesystem::path& path, const std::vector<std::string>& required_header,
             std::size_t optional_trailing = 0);

    std::size_t rows() const { return lines_.size(); }
    std::size_t columns() const { return column_count_; }
    // Fields of data row `row` (0-based); throws when the width is wrong.
    std::vector<std::string_view> fields(std::size_t row) const;
    std::string context(std::size_t row, std::string_view what = "") const;

private:
    std::string path_label_;
    std::string content_;
    std::vector<std::string_view> lines_;
    std::size_t column_count_ = 0;
    std::size_t min_columns_ = 0;
};

}  // namespace proteus::io
