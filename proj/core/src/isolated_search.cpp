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

#include "pentile/isolated_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "pentile/parallel.hpp"

namespace pentile {

namespace {

int closing_slot(const TileSchema& s) {
  std::map<Label, int> count;
  for (Label l : s.edge) ++count[l];
  for (int k = 0; k < 5; ++k)
    if (count.size() > 1 && count[s.edge[k]] == 1) return k;
  return 0;
}

double to_rad(const Rat& r) {
  return kPi * static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::optional<PentagonClosure> closure(const TilingClass& cls, double a, double t) {
  const int j = closing_slot(cls.schema);
  const auto ang = label_angles(cls, t);
  auto at = [&](int i) { return ang[cls.schema.corner[(j + i) % 5]]; };
  try {
    return close_pentagon({a, a, a, a}, {at(1), at(2), at(3)}, at(4), at(0));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

struct Newton {
  bool ok = false;
  double a = 0, t = 0, residual = 0;
};

Newton refine(const TilingClass& cls, double a, double t, double lo, double hi,
              const NewtonConfig& cfg) {
  Newton out;
  const double h = cfg.fd_step;
  for (int it = 0; it <= cfg.max_iter; ++it) {
    auto f = isolated_residual(cls, a, t);
    if (!f) return out;
    const double r = std::max(std::abs((*f)[0]), std::abs((*f)[1]));
    if (r < cfg.tol) {
      out = {true, a, t, r};
      return out;
    }
    if (it == cfg.max_iter) return out;
    auto fa1 = isolated_residual(cls, a + h, t), fa0 = isolated_residual(cls, a - h, t);
    auto ft1 = isolated_residual(cls, a, t + h), ft0 = isolated_residual(cls, a, t - h);
    if (!fa1 || !fa0 || !ft1 || !ft0) return out;
    const double j00 = ((*fa1)[0] - (*fa0)[0]) / (2 * h), j10 = ((*fa1)[1] - (*fa0)[1]) / (2 * h);
    const double j01 = ((*ft1)[0] - (*ft0)[0]) / (2 * h), j11 = ((*ft1)[1] - (*ft0)[1]) / (2 * h);
    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-300) return out;
    const double da = (j11 * (*f)[0] - j01 * (*f)[1]) / det;
    const double dt = (-j10 * (*f)[0] + j00 * (*f)[1]) / det;
    a -= da;
    t -= dt;
    if (!(a > 0 && a < kPi && t > lo && t < hi)) return out;
  }
  return out;
}

}  // namespace

std::vector<double> label_angles(const TilingClass& cls, double t) {
  const AffineSet& s = cls.solution;
  std::vector<double> out(s.base.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const RatVec e = s.expression(static_cast<int>(i));
    double v = to_rad(e[0]);
    // free parameters beyond the first do not occur for these classes
    if (e.size() > 1) v += static_cast<double>(e[1].numerator()) / static_cast<double>(e[1].denominator()) * t;
    out[i] = v;
  }
  return out;
}

std::optional<std::array<double, 2>> isolated_residual(const TilingClass& cls, double a, double t) {
  auto c = closure(cls, a, t);
  if (!c || !c->heading_ok) return std::nullopt;
  return std::array<double, 2>{c->r_line, c->r_angle};
}

SphericalPentagon isolated_pentagon(const TilingClass& cls, double a, double t) {
  const int j = closing_slot(cls.schema);
  auto c = closure(cls, a, t);
  if (!c) throw DomainError("degenerate walk");
  SphericalPentagon p;
  for (int i = 0; i < 5; ++i) p.v[(j + i) % 5] = c->pentagon.v[i];
  return p;
}

IsolatedReport solve_isolated(const TilingClass& cls, const NewtonConfig& cfg) {
  IsolatedReport rep;
  rep.class_id = cls.id;
  if (cls.solution.dimension() != 1)
    throw DomainError(fmt::format("class {} does not have one free angle", cls.id));
  const Label free = static_cast<Label>(cls.solution.free_vars[0]);
  rep.parameter = angle_label_ascii(free);
  auto iv = parameter_interval(cls.solution, 0, 2);
  if (!iv) throw DomainError("empty angle range");
  rep.t_lo = to_rad(iv->lo);
  rep.t_hi = to_rad(iv->hi);
  rep.closing_slot = closing_slot(cls.schema);
  const bool has_b = closing_slot(cls.schema) != 0 || edge_combination_of(cls.schema.edge) != "a5";
  const int n = cfg.grid;
  rep.seeds = n * n;
  rep.caveat = fmt::format(
      "seeded from a {}x{} grid; solutions with basins narrower than the grid spacing can be missed", n, n);

  std::vector<Newton> found(static_cast<std::size_t>(n) * n);
  parallel_for(found.size(), [&](std::size_t k) {
    const int i = static_cast<int>(k) / n, jj = static_cast<int>(k) % n;
    const double a = kPi * (i + 0.5) / n;
    const double t = rep.t_lo + (rep.t_hi - rep.t_lo) * (jj + 0.5) / n;
    found[k] = refine(cls, a, t, rep.t_lo, rep.t_hi, cfg);
  });

  std::vector<Newton> distinct;
  for (const auto& f : found) {
    if (!f.ok) continue;
    ++rep.converged;
    bool dup = false;
    for (const auto& d : distinct)
      if (std::abs(d.a - f.a) < cfg.dedup && std::abs(d.t - f.t) < cfg.dedup) dup = true;
    if (!dup) distinct.push_back(f);
  }
  std::sort(distinct.begin(), distinct.end(), [](const Newton& x, const Newton& y) {
    return std::tie(x.a, x.t) < std::tie(y.a, y.t);
  });

  for (const auto& d : distinct) {
    IsolatedSolution s;
    s.a = d.a;
    s.t = d.t;
    s.residual = d.residual;
    s.pentagon = isolated_pentagon(cls, d.a, d.t);
    s.angles = s.pentagon.angles();
    const auto want = label_angles(cls, d.t);
    const auto edges = s.pentagon.edges();
    const int j = rep.closing_slot;
    bool ok = s.pentagon.simple();
    for (int k = 0; k < 5; ++k) {
      s.angle_defect = std::max(s.angle_defect, std::abs(s.angles[k] - want[cls.schema.corner[k]]));
      if (k != j) ok = ok && std::abs(edges[k] - d.a) < cfg.verify_tol;
      ok = ok && edges[k] > kArcGuard && edges[k] < kPi - kArcGuard;
      ok = ok && s.angles[k] > kArcGuard && s.angles[k] < kTwoPi - kArcGuard;
    }
    s.area_defect = std::abs(s.pentagon.area() - kTileArea);
    ok = ok && s.angle_defect < cfg.verify_tol && s.area_defect < cfg.verify_tol;
    if (has_b) {
      s.b = edges[j];
    } else {
      ok = ok && std::abs(edges[j] - d.a) < cfg.verify_tol;
    }
    if (!ok) {
      ++rep.rejected;
      continue;
    }
    s.regular = std::abs(d.a - regular_edge()) < 1e-8 &&
                std::all_of(s.angles.begin(), s.angles.end(),
                            [](double x) { return std::abs(x - kAlphaRad) < 1e-8; });
    rep.solutions.push_back(std::move(s));
  }
  return rep;
}

}  // namespace pentile
