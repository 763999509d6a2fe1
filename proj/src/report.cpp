#include "fieldpair/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fieldpair {

namespace {

nlohmann::ordered_json to_json(const Cell &c) {
  if (const auto *d = std::get_if<double>(&c)) {
    // store the value as printed so both formats agree digit for digit
    return std::stod(format_number(*d));
  }
  if (const auto *i = std::get_if<std::int64_t>(&c)) {
    return *i;
  }
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  return out + '"';
}

} // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_cell(const Cell &c) {
  if (const auto *d = std::get_if<double>(&c)) {
    return format_number(*d);
  }
  if (const auto *i = std::get_if<std::int64_t>(&c)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(c);
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("report row width does not match header");
  }
  rows.push_back(std::move(row));
}

void Report::write(std::ostream &os, OutputFormat format) const {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << csv_escape(columns[i]);
    }
    os << '\n';
    for (const auto &row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << csv_escape(format_cell(row[i]));
      }
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto &[key, value] : params) {
    doc["params"][key] = to_json(value);
  }
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto &row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[columns[i]] = to_json(row[i]);
    }
    doc["results"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

std::string Report::str(OutputFormat format) const {
  std::ostringstream os;
  write(os, format);
  return os.str();
}

} // namespace fieldpair
