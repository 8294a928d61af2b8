#pragma once

#include <iosfwd>
#include <string>

#include "wbm/experiments.hpp"

namespace wbm {

// Flat "key = value" experiment description. Blank lines and lines starting
// with '#' are ignored. Keys:
//
//   name                      experiment label used in the CSV
//   geometry.kind             disk | crescent | inverted-ellipse
//   geometry.center_x/_y      disk center or z0
//   geometry.radius           disk
//   geometry.a, geometry.b    crescent
//   geometry.tau              inverted ellipse
//   box.origin_x/_y, box.lx/ly
//   k
//   bc.type                   dirichlet | neumann
//   bc.field                  plane-wave | point-source | constant
//   bc.angle                  plane wave direction (rad)
//   bc.source_x/_y            point source location
//   bc.value                  constant value (real)
//   formulations              comma list of weighted-residual, collocation
//   gamma, quad_factor
//   collocation.arc_length_weights   true | false
//   solver.method             tsvd | cpqr
//   solver.epsilon
//   t_sweep                   comma list; items may be ranges a:b or a:b:step
//   n_p
//   output                    CSV path (optional)

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string format_config(const ExperimentConfig& cfg);

}  // namespace wbm
