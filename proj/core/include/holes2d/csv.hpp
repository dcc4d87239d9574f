#ifndef HOLES2D_CSV_HPP
#define HOLES2D_CSV_HPP

#include <string>
#include <vector>

namespace holes2d {

// Round-tripping, locale-independent rendering of a double (%.17g).
std::string format_value(double v);

// Minimal deterministic CSV assembly: optional "# key = value" meta lines,
// one header row, data rows.  Cells must not contain commas, quotes, or
// newlines; rows must match the header width.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void meta(const std::string& key, const std::string& value);
  void add_row(const std::vector<std::string>& cells);
  void add_row(const std::vector<double>& values);

  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> meta_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace holes2d

#endif
