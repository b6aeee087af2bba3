#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace zoopt {

/// Shortest round-trip-safe form: 17 significant digits.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  ///< 1-based source line of each row

  /// Index of `name` in the header, or throws ParseError(1, ...).
  std::size_t column(const std::string& name) const;
};

/// Simple comma-separated reader (no quoting). Rows must have as many fields
/// as the header; violations throw ParseError with the line number.
CsvTable read_csv(std::istream& in);

/// Parses a numeric cell, throwing ParseError(line, ...) on failure.
double parse_number(const std::string& cell, std::size_t line);

}  // namespace zoopt
