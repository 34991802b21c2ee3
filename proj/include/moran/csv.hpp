// Minimal CSV reading and number formatting used by the loaders and emitters.
// No quoting rules: the formats handled here are plain numeric tables with
// simple string ids. UTF-8 passes through untouched, LF and CRLF both accepted.

#pragma once

#include <string>
#include <vector>

namespace moran::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string path;  // kept for error messages
};

// Reads the whole file and splits it into trimmed records.
// Throws LoadError if the file is missing, empty or ragged.
Table read(const std::string& path, char delimiter = ',');

// Splits one line on the delimiter (no quote handling).
std::vector<std::string> split(const std::string& line, char delimiter);

// Parses a cell as double; `where` is prepended to the error message,
// e.g. "data.csv:3: column 'x'".
double parse_double(const std::string& cell, const std::string& where);

// Shortest representation that round-trips exactly (for data files).
std::string format_exact(double value);

// Fixed 12 significant digits (for reports, byte-deterministic output).
std::string format_sig12(double value);

// Writes to `path + ".tmp"` and renames into place, so a failure never
// leaves a partial file at `path`. Throws LoadError on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace moran::csv
