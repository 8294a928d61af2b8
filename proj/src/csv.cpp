#include "wbm/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace wbm {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_rows(std::ostream& os, const std::vector<ExperimentRecord>& records) {
  for (const auto& r : records) {
    os << r.experiment << ',' << to_string(r.formulation) << ','
       << format_double(r.truncation) << ',' << r.n << ',' << r.m << ','
       << format_double(r.error) << ',' << format_double(r.cond) << ','
       << format_double(r.coef_norm) << ',' << format_double(r.residual_norm) << ','
       << format_double(r.wall_ms) << '\n';
  }
}

}  // namespace wbm
