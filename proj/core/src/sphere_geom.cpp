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

#include "pentile/sphere_geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pentile {

namespace {

double wrap_pi(double x) {
  x = std::fmod(x + kPi, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x - kPi;
}

Vec3 rotate_left(const Vec3& p, const Vec3& h, double t) {
  return std::cos(t) * h + std::sin(t) * p.cross(h);
}

bool arc_contains(const Vec3& a, const Vec3& b, const Vec3& x) {
  Vec3 n = a.cross(b);
  return a.cross(x).dot(n) >= 0 && x.cross(b).dot(n) >= 0;
}

bool arcs_cross(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2) {
  Vec3 d = p1.cross(p2).cross(q1.cross(q2));
  if (d.norm() < 1e-14) return false;
  d.normalize();
  for (const Vec3& x : {d, Vec3(-d)})
    if (arc_contains(p1, p2, x) && arc_contains(q1, q2, x)) return true;
  return false;
}

Vec3 north() { return Vec3(0, 0, 1); }
Vec3 azimuth(double t) { return Vec3(std::cos(t), std::sin(t), 0); }

}  // namespace

double arc_length(const Vec3& p, const Vec3& q) {
  return std::atan2(p.cross(q).norm(), p.dot(q));
}

Vec3 tangent_toward(const Vec3& from, const Vec3& to) {
  Vec3 t = to - from.dot(to) * from;
  double n = t.norm();
  if (n < 1e-15) throw DomainError("tangent undefined at coincident or antipodal points");
  return t / n;
}

double angle_at(const Vec3& v, const Vec3& p, const Vec3& q) {
  Vec3 tp = tangent_toward(v, p), tq = tangent_toward(v, q);
  return std::atan2(tp.cross(tq).norm(), tp.dot(tq));
}

double interior_angle(const Vec3& v, const Vec3& next, const Vec3& prev) {
  Vec3 tn = tangent_toward(v, next), tp = tangent_toward(v, prev);
  double x = std::atan2(tn.cross(tp).dot(v), tn.dot(tp));
  return x < 0 ? x + kTwoPi : x;
}

double sas_area(double l1, double included, double l2) {
  double k = std::tan(l1 / 2) * std::tan(l2 / 2);
  return 2 * std::atan2(k * std::sin(included), 1 + k * std::cos(included));
}

double sas_side(double l1, double included, double l2) {
  double c = std::cos(l1) * std::cos(l2) + std::sin(l1) * std::sin(l2) * std::cos(included);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Vec3 travel(const Vec3& p, const Vec3& h, double d) {
  return (std::cos(d) * p + std::sin(d) * h).normalized();
}

double polygon_area(std::span<const Vec3> ccw) {
  const std::size_t n = ccw.size();
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    s += interior_angle(ccw[i], ccw[(i + 1) % n], ccw[(i + n - 1) % n]);
  return s - static_cast<double>(n - 2) * kPi;
}

double SphericalPentagon::edge(int k) const {
  return arc_length(v[(k + 4) % 5], v[k % 5]);
}

double SphericalPentagon::angle(int k) const {
  return interior_angle(v[k % 5], v[(k + 1) % 5], v[(k + 4) % 5]);
}

std::array<double, 5> SphericalPentagon::edges() const {
  std::array<double, 5> out{};
  for (int k = 0; k < 5; ++k) out[k] = edge(k);
  return out;
}

std::array<double, 5> SphericalPentagon::angles() const {
  std::array<double, 5> out{};
  for (int k = 0; k < 5; ++k) out[k] = angle(k);
  return out;
}

double SphericalPentagon::area() const { return polygon_area(v); }

bool SphericalPentagon::simple() const {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 2; j < 5; ++j) {
      if (i == 0 && j == 4) continue;
      if (arcs_cross(v[(i + 4) % 5], v[i], v[(j + 4) % 5], v[j])) return false;
    }
  return true;
}

double regular_edge() { return std::acos(std::sqrt(5.0) / 3.0); }

double a_area(double a) { return sas_area(a, kAlphaRad, a); }

T5Pentagon construct_t5(double a, double b) {
  if (!(a > 0 && a < kPi && b > 0 && b < kPi))
    throw DomainError("no such pentagon: edge lengths must lie in (0, pi)");
  const double aa = a_area(a), ab = a_area(b);
  const double budget = kTileArea - aa - ab;
  if (budget < -1e-12) throw DomainError("no such pentagon: A(a) + A(b) > pi/3");

  // isosceles corners: base angle u, base p
  const double ua = (kPi + aa - kAlphaRad) / 2, ub = (kPi + ab - kAlphaRad) / 2;
  const double p = sas_side(a, kAlphaRad, a), q = sas_side(b, kAlphaRad, b);
  if (p < kArcGuard || q < kArcGuard) throw DomainError("no such pentagon: degenerate diagonal");

  const double k = std::tan(p / 2) * std::tan(q / 2);
  const double hi = k < 1 ? std::acos(-k) : kPi - 1e-12;
  const double top = sas_area(p, hi, q);
  double phi;
  bool at_max = false;
  if (budget <= 0) {
    phi = 0;
  } else if (std::abs(top - budget) <= 1e-12) {
    phi = hi;
    at_max = true;
  } else if (budget > top) {
    throw DomainError("no such pentagon: middle area not bracketed");
  } else {
    double lo = 0, up = hi;
    for (int it = 0; it < 200 && up - lo > 1e-16; ++it) {
      double mid = 0.5 * (lo + up);
      (sas_area(p, mid, q) < budget ? lo : up) = mid;
    }
    phi = 0.5 * (lo + up);
  }

  const double delta = ub + phi + ua;
  T5Pentagon t;
  const Vec3 A = north();
  const Vec3 E = travel(A, azimuth(0), b);
  const Vec3 D = travel(A, azimuth(ub), q);
  const Vec3 C = travel(A, azimuth(ub + phi), p);
  const Vec3 B = travel(A, azimuth(delta), a);
  t.geom.v = {C, B, A, E, D};
  t.a = a;
  t.b = b;
  t.c = arc_length(D, C);
  t.phi = phi;
  t.at_area_maximum = at_max;
  t.delta = delta;
  t.beta = t.geom.angle(0);
  t.gamma = t.geom.angle(4);
  if (t.c < kArcGuard) throw DomainError("no such pentagon: collapsed edge c");
  return t;
}

Walk construct_walk(std::span<const double> lengths, std::span<const double> turns,
                    const Vec3& start, const Vec3& heading) {
  Walk w;
  Vec3 p = start.normalized();
  Vec3 h = (heading - heading.dot(p) * p).normalized();
  w.vertices.push_back(p);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double l = lengths[i];
    Vec3 np = std::cos(l) * p + std::sin(l) * h;
    Vec3 nh = -std::sin(l) * p + std::cos(l) * h;
    p = np.normalized();
    h = (nh - nh.dot(p) * p).normalized();
    if (i + 1 < lengths.size() && i < turns.size()) h = rotate_left(p, h, turns[i]);
    w.vertices.push_back(p);
  }
  w.heading = h;
  w.position_gap = arc_length(p, w.vertices.front());
  w.heading_gap = std::asin(std::clamp(w.vertices.front().dot(p.cross(h)), -1.0, 1.0));
  // measured from the initial heading, so a zero-length first edge is harmless
  if (w.vertices.size() >= 3) {
    const Vec3& s = w.vertices.front();
    const Vec3 tn = (heading - heading.dot(s) * s).normalized();
    Vec3 tp;
    if (w.position_gap < 1e-12) {
      tp = -h;
    } else if (w.position_gap < kPi - kArcGuard) {
      tp = tangent_toward(s, p);
    } else {
      tp = Vec3::Zero();
    }
    if (tp.squaredNorm() > 0) {
      const double x = std::atan2(tn.cross(tp).dot(s), tn.dot(tp));
      w.start_angle = x < 0 ? x + kTwoPi : x;
    } else {
      w.start_angle = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return w;
}

PentagonClosure close_pentagon(const std::array<double, 4>& lengths,
                               const std::array<double, 3>& inner, double theta_e,
                               double theta_a) {
  std::array<double, 3> turns{};
  for (int i = 0; i < 3; ++i) turns[i] = kPi - inner[i];
  Walk w = construct_walk(lengths, turns, north(), Vec3(1, 0, 0));
  PentagonClosure c;
  for (int i = 0; i < 5; ++i) c.pentagon.v[i] = w.vertices[i];
  const Vec3& A = w.vertices[0];
  const Vec3& E = w.vertices[4];
  Vec3 he = rotate_left(E, w.heading, kPi - theta_e);
  c.r_line = A.dot(E.cross(he));
  c.closing_edge = arc_length(E, A);
  if (c.closing_edge < kArcGuard || c.closing_edge > kPi - kArcGuard)
    throw DomainError("closing edge degenerate");
  c.heading_ok = tangent_toward(E, A).dot(he) > 0;
  c.r_angle = wrap_pi(interior_angle(A, w.vertices[1], E) - theta_a);
  return c;
}

std::optional<FlankedPentagon> flanked_equilateral(double a) {
  if (!(a > 0 && a < kPi)) return std::nullopt;
  const double p = sas_side(a, kAlphaRad, a);
  const double s = std::sin(a / 2) / std::sin(p);
  if (!(p > kArcGuard) || s >= 1 || s <= 0) return std::nullopt;
  const double phi = 2 * std::asin(s);
  const double u = (kPi + a_area(a) - kAlphaRad) / 2;
  FlankedPentagon f;
  const Vec3 w0 = north();
  f.geom.v = {w0, travel(w0, azimuth(0), a), travel(w0, azimuth(u), p),
              travel(w0, azimuth(u + phi), p), travel(w0, azimuth(2 * u + phi), a)};
  f.area = 2 * a_area(a) + sas_area(p, phi, p);
  if (!f.geom.simple()) return std::nullopt;
  return f;
}

std::optional<EquiangularWalk> equiangular_four_sides(double a) {
  if (!(a > 0 && a < kPi)) return std::nullopt;
  const std::array<double, 4> l{a, a, a, a};
  const std::array<double, 3> t{kPi - kAlphaRad, kPi - kAlphaRad, kPi - kAlphaRad};
  Walk w = construct_walk(l, t, north(), Vec3(1, 0, 0));
  EquiangularWalk e;
  for (int i = 0; i < 5; ++i) e.geom.v[i] = w.vertices[i];
  e.closing_edge = arc_length(w.vertices[4], w.vertices[0]);
  if (e.closing_edge < kArcGuard || e.closing_edge > kPi - kArcGuard) return std::nullopt;
  if (!e.geom.simple()) return std::nullopt;
  e.end_angle = e.geom.angle(0);
  return e;
}

RootScan scan_roots(const std::function<std::optional<double>(double)>& f, double lo, double hi,
                    int samples, double tol) {
  RootScan out;
  out.samples = samples;
  std::optional<double> prev;
  double prev_x = lo;
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples + 1);
    std::optional<double> y = f(x);
    if (!y) {
      prev.reset();
      continue;
    }
    ++out.valid_samples;
    if (*y == 0) {
      out.roots.push_back(x);
    } else if (prev && (*prev < 0) != (*y < 0)) {
      double l = prev_x, r = x, fl = *prev;
      bool ok = true;
      while (r - l > tol) {
        double m = 0.5 * (l + r);
        std::optional<double> fm = f(m);
        if (!fm) {
          ok = false;
          break;
        }
        if ((*fm < 0) == (fl < 0)) {
          l = m;
          fl = *fm;
        } else {
          r = m;
        }
      }
      const double root = 0.5 * (l + r);
      std::optional<double> fr = f(root);
      // a jump through a branch cut is not a root
      if (ok && fr && std::abs(*fr) < 1e-6) out.roots.push_back(root);
    }
    prev = y;
    prev_x = x;
  }
  return out;
}

}  // namespace pentile
