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

#ifndef PENTILE_REALIZATION_HPP_
#define PENTILE_REALIZATION_HPP_

#include <array>
#include <map>
#include <string>

#include "pentile/joint_classifier.hpp"
#include "pentile/sphere_geom.hpp"

namespace pentile {

struct Residuals {
  double vertex_angle_sum = 0;  // max |Σ angles - 2π| over vertices
  double edge_length = 0;       // max |length - label value| over edges
  double corner_angle = 0;      // max |angle - label value| over corners
  double face_area = 0;         // max |area - π/3| over faces
  double placement = 0;         // max disagreement between adjacent face placements
  double total_area = 0;        // |Σ areas - 4π|
  double total_angle = 0;       // |Σ angles - 40π|
  std::string worst;            // where the largest residual sits
  double max() const;
};

struct RealizedTiling {
  std::string class_id;
  std::map<std::string, double> parameters;  // a, b, ... and α, β, ...
  std::array<Vec3, kVertices> vertices{};
  std::array<std::array<int, 5>, kFaces> faces{};  // vertex cycles, counterclockwise
  std::array<double, kEdges> edge_value{};
  std::array<double, kCorners> corner_value{};
  std::array<Label, kEdges> edge_label{};
  Residuals residuals;
};

// Places P1 as given, then copies the tile across a spanning tree of the
// face graph. Throws DomainError if the result does not close within tol.
RealizedTiling realize_tiling(const TilingClass& cls, const SphericalPentagon& pentagon,
                              double tol = kGeomTol);

Residuals verify_realization(const RealizedTiling& t);
bool passes(const Residuals& r, double tol = kGeomTol);

// Smallest max vertex distance between x and an isometric image of y, over
// all relabelings of y by symmetries of the face graph.
double congruence_residual(const RealizedTiling& x, const RealizedTiling& y);

}  // namespace pentile

#endif  // PENTILE_REALIZATION_HPP_
