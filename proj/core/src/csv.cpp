#include "gaussbs/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gaussbs {

std::string format_double(double value) {
  char buf[64];
  const auto result =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

Table parse_csv(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV document");
  }
  std::istringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) {
    table.header.push_back(field);
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(',', start);
      if (end == std::string::npos) {
        end = line.size();
      }
      double value = 0.0;
      const auto res = std::from_chars(line.data() + start, line.data() + end, value);
      if (res.ec != std::errc() || res.ptr != line.data() + end) {
        throw std::invalid_argument("malformed numeric field: " +
                                    line.substr(start, end - start));
      }
      row.push_back(value);
      if (end == line.size()) {
        break;
      }
      start = end + 1;
    }
    if (row.size() != table.header.size()) {
      throw std::invalid_argument("row width does not match header");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << table.header[i] << (i + 1 == table.header.size() ? "" : ",");
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << format_double(row[i]) << (i + 1 == row.size() ? "" : ",");
    }
    out << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

}  // namespace gaussbs
