#ifndef FACILCAL_CSV_HPP
#define FACILCAL_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace facilcal::csv {

/// Raw comma-delimited content: a header plus data rows with source line
/// numbers (1-based, header included in the numbering). No quoting; fields
/// must not contain commas.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;
};

/// Reads and splits a file. Throws std::runtime_error when the file cannot
/// be opened or has no header. Blank lines are ignored.
Table read_file(const std::filesystem::path& path);

std::vector<std::string> split_line(std::string_view line);

/// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);

std::string format_bool(bool v);

/// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace facilcal::csv

#endif
