#include "holes2d/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace holes2d {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void check_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") != std::string::npos)
    throw std::invalid_argument("csv cell contains a delimiter: " + cell);
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("csv needs columns");
  for (const auto& c : columns_) check_cell(c);
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  if (key.find_first_of("\n\r") != std::string::npos ||
      value.find_first_of("\n\r") != std::string::npos)
    throw std::invalid_argument("csv meta contains a newline");
  meta_.push_back("# " + key + " = " + value);
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("csv row width mismatch");
  for (const auto& c : cells) check_cell(c);
  rows_.push_back(cells);
}

void CsvWriter::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_value(v));
  add_row(cells);
}

std::string CsvWriter::str() const {
  std::string out;
  for (const auto& m : meta_) out += m + "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << str();
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace holes2d
