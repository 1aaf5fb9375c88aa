#pragma once
// Minimal CSV plumbing shared by dataset and report writers.  Fields never
// contain commas or quotes in this project, so no quoting layer is needed.

#include <string>
#include <string_view>
#include <vector>

namespace lapselab::csvio {

// Shortest decimal text that round-trips the double exactly.
std::string format_double(double v);

std::vector<std::string_view> split_line(std::string_view line, char delim = ',');

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Reads a whole CSV file (first line = header). Throws std::runtime_error on
// I/O failure or ragged rows.
Table read_file(const std::string& path);

}  // namespace lapselab::csvio
