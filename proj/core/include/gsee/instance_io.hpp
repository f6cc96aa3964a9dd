#pragma once

#include <iosfwd>
#include <string>

#include "gsee/problem.hpp"

namespace gsee {

// JSON instance files carry the spectral levels together with the promises:
// {
//   "energies": [...], "weights": [...],
//   "delta_lb": ..., "eta_lb": ..., "e_lo": ..., "e_hi": ...
// }
// Loading runs the full ProblemInstance validation; malformed JSON, missing
// keys or mismatched array lengths raise std::runtime_error naming the
// offending field.
ProblemInstance load_instance(const std::string& path);
ProblemInstance read_instance(std::istream& in, const std::string& origin = "<stream>");

void save_instance(const std::string& path, const ProblemInstance& instance);
void write_instance(std::ostream& out, const ProblemInstance& instance);

}  // namespace gsee
