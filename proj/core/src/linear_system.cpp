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

#include "pentile/linear_system.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace pentile {

void LinearSystem::add(RatVec coef, Rat rhs) {
  if (static_cast<int>(coef.size()) != vars_) throw std::invalid_argument("row width mismatch");
  rows_.push_back(std::move(coef));
  rhs_.push_back(rhs);
}

Rref rref(const LinearSystem& s) {
  const int n = s.vars();
  std::vector<RatVec> m;
  m.reserve(s.equations());
  for (int r = 0; r < s.equations(); ++r) {
    RatVec row = s.rows()[r];
    row.push_back(s.rhs()[r]);
    m.push_back(std::move(row));
  }
  Rref out;
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == Rat(0)) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int q = 0; q < static_cast<int>(m.size()); ++q) {
      if (q == r || m[q][c] == Rat(0)) continue;
      const Rat f = m[q][c];
      for (int j = c; j <= n; ++j) m[q][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (int q = r; q < static_cast<int>(m.size()); ++q) {
    if (m[q][n] != Rat(0)) out.consistent = false;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

RatVec AffineSet::expression(int i) const {
  RatVec e;
  e.reserve(dirs.size() + 1);
  e.push_back(base[i]);
  for (const auto& d : dirs) e.push_back(d[i]);
  return e;
}

bool AffineSet::identically_equal(int i, int j) const {
  return expression(i) == expression(j);
}

bool AffineSet::identically_value(int i, Rat v) const {
  auto e = expression(i);
  if (e[0] != v) return false;
  return std::all_of(e.begin() + 1, e.end(), [](const Rat& x) { return x == Rat(0); });
}

std::optional<AffineSet> solve(const LinearSystem& s) {
  const Rref r = rref(s);
  if (!r.consistent) return std::nullopt;
  const int n = s.vars();
  AffineSet out;
  out.base.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (int k = 0; k < r.rank(); ++k) {
    is_pivot[r.pivots[k]] = true;
    out.base[r.pivots[k]] = r.rows[k][n];
  }
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec d(n, Rat(0));
    d[c] = 1;
    for (int k = 0; k < r.rank(); ++k) d[r.pivots[k]] = -r.rows[k][c];
    out.dirs.push_back(std::move(d));
    out.free_vars.push_back(c);
  }
  return out;
}

namespace {

void normalize(StrictIneq& q) {
  Rat scale = 0;
  for (const auto& x : q.a) {
    if (x != Rat(0)) {
      scale = x < Rat(0) ? -x : x;
      break;
    }
  }
  if (scale == Rat(0)) return;
  for (auto& x : q.a) x /= scale;
  q.b /= scale;
}

bool same(const StrictIneq& x, const StrictIneq& y) { return x.a == y.a && x.b == y.b; }

}  // namespace

bool strict_feasible(std::vector<StrictIneq> ineqs, int params) {
  for (int v = params - 1; v >= 0; --v) {
    std::vector<StrictIneq> pos, neg, next;
    for (auto& q : ineqs) {
      if (q.a[v] > Rat(0)) {
        pos.push_back(q);
      } else if (q.a[v] < Rat(0)) {
        neg.push_back(q);
      } else {
        next.push_back(q);
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rat wp = Rat(1) / p.a[v];
        const Rat wn = Rat(-1) / n.a[v];
        StrictIneq c;
        c.a.resize(params);
        for (int j = 0; j < params; ++j) c.a[j] = p.a[j] * wp + n.a[j] * wn;
        c.a[v] = 0;
        c.b = p.b * wp + n.b * wn;
        normalize(c);
        if (std::none_of(next.begin(), next.end(), [&](const StrictIneq& o) { return same(o, c); })) {
          next.push_back(std::move(c));
        }
      }
    }
    ineqs = std::move(next);
    // Constant constraints can be decided right away.
    for (const auto& q : ineqs) {
      if (std::all_of(q.a.begin(), q.a.end(), [](const Rat& x) { return x == Rat(0); }) && q.b <= Rat(0)) {
        return false;
      }
    }
  }
  return std::all_of(ineqs.begin(), ineqs.end(), [](const StrictIneq& q) { return q.b > Rat(0); });
}

std::vector<StrictIneq> box_constraints(const AffineSet& s, Rat lo, Rat hi) {
  const int k = s.dimension();
  std::vector<StrictIneq> out;
  for (std::size_t i = 0; i < s.base.size(); ++i) {
    const RatVec e = s.expression(static_cast<int>(i));
    // e0 + d.t < hi  and  -(e0 + d.t) < -lo
    StrictIneq up{RatVec(e.begin() + 1, e.end()), hi - e[0]};
    StrictIneq down{RatVec(k), e[0] - lo};
    for (int j = 0; j < k; ++j) down.a[j] = -e[j + 1];
    out.push_back(std::move(up));
    out.push_back(std::move(down));
  }
  return out;
}

bool meets_open_box(const AffineSet& s, Rat lo, Rat hi) {
  return strict_feasible(box_constraints(s, lo, hi), s.dimension());
}

std::optional<OpenInterval> parameter_interval(const AffineSet& s, Rat lo, Rat hi) {
  if (s.dimension() != 1) return std::nullopt;
  std::optional<Rat> tlo, thi;
  for (const auto& q : box_constraints(s, lo, hi)) {
    const Rat a = q.a[0];
    if (a == Rat(0)) {
      if (q.b <= Rat(0)) return std::nullopt;
      continue;
    }
    const Rat bound = q.b / a;
    if (a > Rat(0)) {
      if (!thi || bound < *thi) thi = bound;
    } else {
      if (!tlo || bound > *tlo) tlo = bound;
    }
  }
  if (!tlo || !thi || !(*tlo < *thi)) return std::nullopt;
  return OpenInterval{*tlo, *thi};
}

std::string rat_string(const Rat& r) {
  if (r.denominator() == 1) return fmt::format("{}", r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

}  // namespace pentile
