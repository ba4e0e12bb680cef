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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pentile/sphere_geom.hpp"

using namespace pentile;
using doctest::Approx;

namespace {

// Unsigned angle at v between the great arcs toward p and q, from plain
// vector algebra.
double corner(const Vec3& v, const Vec3& p, const Vec3& q) {
  const Vec3 tp = (p - p.dot(v) * v).normalized(), tq = (q - q.dot(v) * v).normalized();
  return std::acos(std::clamp(tp.dot(tq), -1.0, 1.0));
}

double arc(const Vec3& p, const Vec3& q) { return std::acos(std::clamp(p.normalized().dot(q.normalized()), -1.0, 1.0)); }

// The cube face x = 1 split into two pentagons; s tilts the cut.
std::array<Vec3, 5> cube_pentagon(double s) {
  return {Vec3(1, 1, s).normalized(), Vec3(1, 1, 1).normalized(), Vec3(1, s, 1).normalized(),
          Vec3(1, -s, -1).normalized(), Vec3(1, 1, -1).normalized()};
}

}  // namespace

TEST_CASE("arc length") {
  const Vec3 p(0, 0, 1);
  CHECK(arc_length(p, -p) == Approx(kPi));
  CHECK(arc_length(p, p) == Approx(0));
  CHECK(arc_length(p, Vec3(1, 0, 0)) == Approx(kPi / 2));
  CHECK_THROWS_AS(tangent_toward(p, p), DomainError);
  CHECK_THROWS_AS(tangent_toward(p, -p), DomainError);
}

TEST_CASE("triangle area: octant and L'Huilier") {
  CHECK(sas_area(kPi / 2, kPi / 2, kPi / 2) == Approx(kPi / 2).epsilon(1e-14));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> len(0.05, 2.5), ang(0.05, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double l1 = len(rng), l2 = len(rng), c = ang(rng);
    const double c3 = oracle::third_side(l1, l2, c);
    CHECK(sas_side(l1, c, l2) == Approx(c3).epsilon(1e-10));
    CHECK(sas_area(l1, c, l2) == Approx(oracle::lhuilier_area(l1, l2, c3)).epsilon(1e-8));
  }
}

TEST_CASE("isosceles α-triangle area grows with its legs") {
  double prev = 0;
  for (int i = 1; i < 200; ++i) {
    const double a = i * 0.01;
    const double now = a_area(a);
    CHECK(now > prev);
    prev = now;
  }
}

TEST_CASE("Girard: polygon area matches a triangle fan") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Vec3, 5> v;
    for (int k = 0; k < 5; ++k) {
      const double t = 2 * kPi * k / 5 + jitter(rng);
      const double r = 0.6 + jitter(rng);
      v[k] = Vec3(std::sin(r) * std::cos(t), std::sin(r) * std::sin(t), std::cos(r));
    }
    double fan = 0;
    for (int k = 1; k < 4; ++k) fan += oracle::lhuilier_area(arc(v[0], v[k]), arc(v[k], v[k + 1]), arc(v[0], v[k + 1]));
    CHECK(polygon_area(v) == Approx(fan).epsilon(1e-9));
    SphericalPentagon p{v};
    CHECK(p.simple());
    CHECK(p.area() == Approx(fan).epsilon(1e-9));
    for (int k = 0; k < 5; ++k) CHECK(p.angle(k) == Approx(corner(v[k], v[(k + 1) % 5], v[(k + 4) % 5])).epsilon(1e-9));
  }
}

TEST_CASE("self-crossing pentagon is not simple") {
  SphericalPentagon p;
  for (int k = 0; k < 5; ++k) {
    const double t = 4 * kPi * k / 5;  // pentagram order
    p.v[k] = Vec3(std::sin(0.5) * std::cos(t), std::sin(0.5) * std::sin(t), std::cos(0.5));
  }
  CHECK_FALSE(p.simple());
}

TEST_CASE("regular face from exact coordinates") {
  const DodecGraph& g = dodecahedron();
  const auto d = oracle::exact_dodecahedron(g);
  REQUIRE(d);
  SphericalPentagon face;
  for (int k = 0; k < 5; ++k) face.v[k] = d->vertex[g.boundary(0).vertices[k]];
  for (int k = 0; k < 5; ++k) {
    CHECK(face.edge(k) == Approx(regular_edge()).epsilon(1e-13));
    CHECK(face.angle(k) == Approx(kAlphaRad).epsilon(1e-13));
  }
  CHECK(face.area() == Approx(kTileArea).epsilon(1e-13));

  const T5Pentagon t = construct_t5(regular_edge(), regular_edge());
  CHECK(t.c == Approx(regular_edge()).epsilon(1e-9));
  for (int k = 0; k < 5; ++k) {
    CHECK(t.geom.edge(k) == Approx(regular_edge()).epsilon(1e-9));
    CHECK(t.geom.angle(k) == Approx(kAlphaRad).epsilon(1e-9));
  }
}

TEST_CASE("cube split pentagon sits at the double root") {
  const auto v = cube_pentagon(0.3);  // A B C D E
  const double a = arc(v[0], v[1]), b = arc(v[0], v[4]);
  CHECK(arc(v[1], v[2]) == Approx(a).epsilon(1e-14));
  CHECK(arc(v[3], v[4]) == Approx(b).epsilon(1e-14));
  const T5Pentagon t = construct_t5(a, b);
  CHECK(t.at_area_maximum);
  CHECK(t.c == Approx(arc(v[2], v[3])).epsilon(1e-9));
  CHECK(t.delta == Approx(kPi).epsilon(1e-9));
  CHECK(corner(v[0], v[1], v[4]) == Approx(kPi).epsilon(1e-12));
  const double b_c = corner(v[2], v[1], v[3]), b_d = corner(v[3], v[2], v[4]);
  CHECK(std::min(t.beta, t.gamma) == Approx(std::min(b_c, b_d)).epsilon(1e-8));
  CHECK(std::max(t.beta, t.gamma) == Approx(std::max(b_c, b_d)).epsilon(1e-8));
  CHECK(t.beta + t.gamma == Approx(kPi).epsilon(1e-9));
  CHECK(corner(v[1], v[0], v[2]) == Approx(kAlphaRad).epsilon(1e-12));
}

TEST_CASE("T5 pentagons over the admissible grid") {
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const double a = 0.64 + 0.04 * i, b = 0.64 + 0.04 * j;
      CAPTURE(a);
      CAPTURE(b);
      const T5Pentagon t = construct_t5(a, b);
      const auto& p = t.geom;
      CHECK(p.simple());
      CHECK(p.area() == Approx(kTileArea).epsilon(1e-10));
      // slots: c, a, a, b, b with α at 1 and 3, δ at 2
      CHECK(p.edge(0) == Approx(t.c).epsilon(1e-12));
      CHECK(p.edge(1) == Approx(a).epsilon(1e-12));
      CHECK(p.edge(2) == Approx(a).epsilon(1e-12));
      CHECK(p.edge(3) == Approx(b).epsilon(1e-12));
      CHECK(p.edge(4) == Approx(b).epsilon(1e-12));
      CHECK(p.angle(1) == Approx(kAlphaRad).epsilon(1e-10));
      CHECK(p.angle(3) == Approx(kAlphaRad).epsilon(1e-10));
      CHECK(p.angle(2) == Approx(t.delta).epsilon(1e-10));
      CHECK(t.beta + t.gamma + t.delta == Approx(kTwoPi).epsilon(1e-10));
      // symmetric inputs give mirror pentagons
      const T5Pentagon s = construct_t5(b, a);
      CHECK(s.c == Approx(t.c).epsilon(1e-9));
      CHECK(s.beta == Approx(t.gamma).epsilon(1e-8));
    }
}

TEST_CASE("T5 domain errors") {
  CHECK_THROWS_WITH_AS(construct_t5(1.2, 1.2), "no such pentagon: A(a) + A(b) > pi/3", DomainError);
  CHECK_THROWS_AS(construct_t5(0.2, 1.4), DomainError);
  CHECK_THROWS_AS(construct_t5(0, 0.7), DomainError);
  CHECK_THROWS_AS(construct_t5(0.7, kPi), DomainError);
}

TEST_CASE("walks") {
  const Vec3 n(0, 0, 1), x(1, 0, 0);
  SUBCASE("octant closes after three quarter arcs") {
    const std::array<double, 3> l{kPi / 2, kPi / 2, kPi / 2};
    const std::array<double, 2> t{kPi / 2, kPi / 2};
    const Walk w = construct_walk(l, t, n, x);
    CHECK(w.position_gap < 1e-12);
    CHECK(w.start_angle == Approx(kPi / 2).epsilon(1e-12));
    CHECK(polygon_area(std::span<const Vec3>(w.vertices.data(), 3)) == Approx(kPi / 2).epsilon(1e-12));
  }
  SUBCASE("regular pentagon walk") {
    const double e = regular_edge();
    const std::array<double, 5> l{e, e, e, e, e};
    const std::array<double, 4> t{kPi / 3, kPi / 3, kPi / 3, kPi / 3};
    const Walk w = construct_walk(l, t, n, x);
    CHECK(w.position_gap < 1e-9);
    CHECK(std::abs(w.heading_gap) < 1e-9);
    CHECK(w.start_angle == Approx(kAlphaRad).epsilon(1e-9));
  }
  SUBCASE("zero-length edge: defect equals the remaining walk's") {
    const double e = regular_edge();
    const std::array<double, 5> l{0.0, e, e, e, 0.9};
    const std::array<double, 4> t{kPi / 2, kPi / 3, kPi / 3, kPi / 3};
    const Walk w = construct_walk(l, t, n, x);
    CHECK(arc_length(w.vertices[1], n) < 1e-15);
    // same walk without the empty step, heading pre-turned by the first turn
    const std::array<double, 4> rest{e, e, e, 0.9};
    const std::array<double, 3> rest_t{kPi / 3, kPi / 3, kPi / 3};
    const Walk r = construct_walk(rest, rest_t, n, Vec3(0, 1, 0));
    CHECK(w.position_gap == Approx(r.position_gap).epsilon(1e-12));
    CHECK(w.heading_gap == Approx(r.heading_gap).epsilon(1e-12));
    CHECK(std::isfinite(w.start_angle));
  }
}

TEST_CASE("pentagon closure at the regular pentagon") {
  const double e = regular_edge();
  const PentagonClosure c = close_pentagon({e, e, e, e}, {kAlphaRad, kAlphaRad, kAlphaRad}, kAlphaRad, kAlphaRad);
  CHECK(std::abs(c.r_line) < 1e-12);
  CHECK(std::abs(c.r_angle) < 1e-12);
  CHECK(c.closing_edge == Approx(e).epsilon(1e-12));
  CHECK(c.heading_ok);
  const PentagonClosure off = close_pentagon({e, e, e, e}, {kAlphaRad, kAlphaRad, kAlphaRad}, 2.0, kAlphaRad);
  CHECK(std::abs(off.r_line) > 1e-3);
}

TEST_CASE("equilateral oracles") {
  const auto f = flanked_equilateral(regular_edge());
  REQUIRE(f);
  CHECK(f->area == Approx(kTileArea).epsilon(1e-12));
  CHECK(f->geom.area() == Approx(kTileArea).epsilon(1e-12));
  CHECK_FALSE(flanked_equilateral(0.0));

  const auto q = equiangular_four_sides(regular_edge());
  REQUIRE(q);
  CHECK(q->closing_edge == Approx(regular_edge()).epsilon(1e-12));
  CHECK(q->end_angle == Approx(kAlphaRad).epsilon(1e-12));
}

TEST_CASE("root scan") {
  const auto r = scan_roots([](double x) -> std::optional<double> { return x * x - 0.25; }, -1, 1, 100, 1e-13);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == Approx(-0.5));
  CHECK(r.roots[1] == Approx(0.5));
  // a pole is a sign change but not a root
  const auto p = scan_roots([](double x) -> std::optional<double> { return 1 / (x - 0.3); }, 0, 1, 100, 1e-13);
  CHECK(p.roots.empty());
  // gaps in the domain are skipped
  const auto g = scan_roots(
      [](double x) -> std::optional<double> {
        if (x > 0.4 && x < 0.6) return std::nullopt;
        return x - 0.8;
      },
      0, 1, 100, 1e-13);
  REQUIRE(g.roots.size() == 1);
  CHECK(g.valid_samples < g.samples);
}
