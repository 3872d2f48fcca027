#include "curveproj/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <stdexcept>

namespace curveproj {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_real(const std::string& text) {
  const char* begin = text.c_str();
  while (*begin == ' ' || *begin == '\t') ++begin;
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
  if (end == begin || end == nullptr || *end != '\0' || errno == ERANGE) {
    throw std::invalid_argument("not a real number: '" + text + "'");
  }
  return value;
}

std::vector<double> read_real_column(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string field = split_csv_line(line).front();
    try {
      values.push_back(parse_real(field));
    } catch (const std::invalid_argument&) {
      if (!first) throw;
    }
    first = false;
  }
  return values;
}

}  // namespace curveproj
