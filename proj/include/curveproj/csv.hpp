#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curveproj {

/// `%.17g`: 17 significant digits, enough to round-trip any double.
std::string format_real(double value);

/// Splits a CSV line on commas. No quoting support.
std::vector<std::string> split_csv_line(const std::string& line);

/// Parses a real, throwing std::invalid_argument with the offending text.
double parse_real(const std::string& text);

/// Reads every numeric field of a one-column CSV. A non-numeric first line is
/// treated as a header.
std::vector<double> read_real_column(std::istream& in);

}  // namespace curveproj
