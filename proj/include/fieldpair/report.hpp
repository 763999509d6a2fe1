#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fieldpair {

/// Table cell: numbers are printed with 12 significant digits.
using Cell = std::variant<double, std::int64_t, std::string>;

/// "%.12g" in the C locale.
std::string format_number(double x);
std::string format_cell(const Cell &c);

enum class OutputFormat { Csv, Json };

/// Parameters plus a results table; written as CSV (table only) or JSON
/// ({"params": {...}, "results": [{column: value}, ...]}).
struct Report {
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void write(std::ostream &os, OutputFormat format) const;
  std::string str(OutputFormat format) const;
};

} // namespace fieldpair
