#pragma once

#include <string>
#include <vector>

namespace gsee {

// 17 significant digits (%.17g): enough to round-trip any double exactly.
std::string fmt17(double v);

// Splits one CSV line on commas; no quoting support, none of our schemas
// need it.
std::vector<std::string> split_csv_line(const std::string& line);

double parse_double_field(const std::string& field, const char* context);

}  // namespace gsee
