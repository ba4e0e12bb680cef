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

#ifndef PENTILE_SPHERE_GEOM_HPP_
#define PENTILE_SPHERE_GEOM_HPP_

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace pentile {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kAlphaRad = 2.0 * kPi / 3.0;
inline constexpr double kTileArea = kPi / 3.0;
inline constexpr double kGeomTol = 1e-9;
inline constexpr double kArcGuard = 1e-9;

// Raised for infeasible parameters and degenerate configurations.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double arc_length(const Vec3& p, const Vec3& q);
// Unit tangent at `from` pointing along the great arc to `to`.
Vec3 tangent_toward(const Vec3& from, const Vec3& to);
// Unsigned angle at v between the arcs to p and q, in [0, π].
double angle_at(const Vec3& v, const Vec3& p, const Vec3& q);
// Interior angle at v of a polygon listed counterclockwise from outside,
// with `next` following v and `prev` preceding it; in [0, 2π).
double interior_angle(const Vec3& v, const Vec3& next, const Vec3& prev);
// Spherical excess of the triangle with two sides and the included angle.
double sas_area(double l1, double included, double l2);
// Third side by the spherical law of cosines.
double sas_side(double l1, double included, double l2);
// Point reached from p by travelling d along unit tangent h.
Vec3 travel(const Vec3& p, const Vec3& h, double d);

// Girard: sum of interior angles minus (n - 2)π.
double polygon_area(std::span<const Vec3> ccw);

// Vertex k is corner k of a tile; edge k joins vertex k-1 and vertex k, as
// in the face boundary convention of the graph.
struct SphericalPentagon {
  std::array<Vec3, 5> v;
  double edge(int k) const;
  double angle(int k) const;
  std::array<double, 5> edges() const;
  std::array<double, 5> angles() const;
  double area() const;
  // Non-adjacent edges do not cross.
  bool simple() const;
};

double regular_edge();  // arccos(sqrt(5)/3)
double a_area(double a);  // area of the isosceles triangle (a, 2π/3, a)

// Tile of the two-parameter family: edges (c, a, a, b, b) and corners
// (β, α, δ, α, γ) in slot order, α = 2π/3.
struct T5Pentagon {
  SphericalPentagon geom;
  double a = 0, b = 0, c = 0;
  double beta = 0, gamma = 0, delta = 0;
  double phi = 0;            // middle angle at the δ corner
  bool at_area_maximum = false;
};
T5Pentagon construct_t5(double a, double b);

// Geodesic walk: edge i has length lengths[i]; after edge i (i < k-1) turn
// left by turns[i]. Defect against the start point: arc gap and the interior
// angle the closing corner would have.
struct Walk {
  std::vector<Vec3> vertices;  // k + 1 points
  Vec3 heading;                // arrival tangent at the last point
  double position_gap = 0;
  double heading_gap = 0;      // signed distance of start from the final geodesic
  double start_angle = 0;      // angle at start between initial heading and the way back; NaN if antipodal
};
Walk construct_walk(std::span<const double> lengths, std::span<const double> turns,
                    const Vec3& start, const Vec3& heading);

// Closure of a pentagon walked along four edges from A with the given
// interior angles at the three intermediate corners. After turning at E by
// its interior angle, r_line = A · n(E) measures how far A is from that arc;
// r_angle compares the corner angle produced at A with theta_a.
struct PentagonClosure {
  SphericalPentagon pentagon;  // vertices A, B, C, D, E in order
  double r_line = 0;
  double r_angle = 0;
  double closing_edge = 0;     // |EA|
  bool heading_ok = false;     // E's arc actually heads toward A
};
PentagonClosure close_pentagon(const std::array<double, 4>& lengths,
                               const std::array<double, 3>& inner, double theta_e,
                               double theta_a);

// Equilateral tile whose apex is flanked by two α corners, the opposite
// pair being equal by symmetry. Nullopt where the side length admits no
// simple tile.
struct FlankedPentagon {
  SphericalPentagon geom;  // apex at vertex 0, α at vertices 1 and 4
  double area = 0;
};
std::optional<FlankedPentagon> flanked_equilateral(double a);

// Equiangular (all α) tile with four equal sides a; the fifth side and the
// end angles come out of the walk. Nullopt if degenerate or self-crossing.
struct EquiangularWalk {
  SphericalPentagon geom;
  double closing_edge = 0;
  double end_angle = 0;  // interior angle at the walk's start
};
std::optional<EquiangularWalk> equiangular_four_sides(double a);

// Sign changes of f over a uniform grid on (lo, hi), refined by bisection.
struct RootScan {
  std::vector<double> roots;
  int samples = 0;
  int valid_samples = 0;
};
RootScan scan_roots(const std::function<std::optional<double>(double)>& f, double lo, double hi,
                    int samples, double tol);

}  // namespace pentile

#endif  // PENTILE_SPHERE_GEOM_HPP_
