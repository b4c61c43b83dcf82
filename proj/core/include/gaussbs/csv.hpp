#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaussbs {

// A rectangular table of doubles with named columns; the exchange format for
// figure and cascade output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits, locale-independent; round-trips every double.
std::string format_double(double value);

// Parses one CSV payload (header + numeric rows, '.' decimal separator,
// ',' field separator, '\n' line endings).
Table parse_csv(const std::string& text);

void write_csv(const Table& table, std::ostream& out);
std::string to_csv(const Table& table);

}  // namespace gaussbs
