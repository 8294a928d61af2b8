#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wbm/experiments.hpp"

namespace wbm {

inline constexpr const char* kCsvHeader =
    "experiment,formulation,T,N,M,error,cond,coef_norm,residual_norm,wall_ms";

/// Shortest decimal string that parses back to the same double; "inf", "nan".
std::string format_double(double v);

void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const std::vector<ExperimentRecord>& records);

}  // namespace wbm
