#include "moran/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "moran/common.hpp"

namespace moran::csv {

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == delimiter) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

Table read(const std::string& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError(path + ": cannot open file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  Table table;
  table.path = path;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t expected = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // skip blank lines (incl. trailing newline)
    ++line_no;
    auto fields = split(line, delimiter);
    if (line_no == 1) {
      expected = fields.size();
      table.header = std::move(fields);
    } else {
      if (fields.size() != expected) {
        throw LoadError(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(expected) + " fields, got " +
                        std::to_string(fields.size()) + " (ragged row)");
      }
      table.rows.push_back(std::move(fields));
    }
  }
  if (table.header.empty()) {
    throw LoadError(path + ": empty file, expected a header row");
  }
  return table;
}

double parse_double(const std::string& cell, const std::string& where) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last || cell.empty()) {
    throw LoadError(where + ": cannot parse '" + cell + "' as a number");
  }
  return value;
}

std::string format_exact(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError(tmp + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw LoadError(tmp + ": write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw LoadError(path + ": rename from temporary failed");
  }
}

}  // namespace moran::csv
