// Copyright 2026 The Pentile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PENTILE_ISOLATED_SEARCH_HPP_
#define PENTILE_ISOLATED_SEARCH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentile/joint_classifier.hpp"
#include "pentile/sphere_geom.hpp"

namespace pentile {

struct NewtonConfig {
  double tol = 1e-12;
  int max_iter = 50;
  double fd_step = 1e-7;
  int grid = 200;
  double dedup = 1e-8;
  double verify_tol = 1e-9;
};

struct IsolatedSolution {
  double a = 0;
  double t = 0;                  // value of the free angle, radians
  std::optional<double> b;       // closing edge when the class has one
  double residual = 0;
  bool regular = false;
  SphericalPentagon pentagon;    // slot order of the class schema
  std::array<double, 5> angles{};
  double area_defect = 0;
  double angle_defect = 0;
};

struct IsolatedReport {
  std::string class_id;
  std::string parameter;         // name of the free angle
  double t_lo = 0, t_hi = 0;     // admissible range, radians
  int closing_slot = 0;
  int seeds = 0;
  int converged = 0;
  int rejected = 0;              // converged but failed reconstruction
  std::vector<IsolatedSolution> solutions;
  std::string caveat;
};

// Closure residual (line, angle) at side length a and free angle t, or
// nullopt when the walk degenerates.
std::optional<std::array<double, 2>> isolated_residual(const TilingClass& cls, double a, double t);

// Pentagon for (a, t) in schema slot order, without any checks.
SphericalPentagon isolated_pentagon(const TilingClass& cls, double a, double t);

IsolatedReport solve_isolated(const TilingClass& cls, const NewtonConfig& cfg = {});

// Angle of each label at free value t.
std::vector<double> label_angles(const TilingClass& cls, double t);

}  // namespace pentile

#endif  // PENTILE_ISOLATED_SEARCH_HPP_
