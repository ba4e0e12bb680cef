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

#include <random>

#include <Eigen/Dense>

#include "pentile/linear_system.hpp"

using namespace pentile;

namespace {

LinearSystem random_system(std::mt19937& rng, int vars, int eqs) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-4, 4);
  LinearSystem s(vars);
  for (int r = 0; r < eqs; ++r) {
    RatVec row(vars);
    for (auto& x : row) x = coef(rng);
    s.add(row, Rat(rhs(rng), 3));
  }
  return s;
}

Eigen::MatrixXd dense(const LinearSystem& s, bool augmented) {
  Eigen::MatrixXd m(s.equations(), s.vars() + (augmented ? 1 : 0));
  for (int r = 0; r < s.equations(); ++r) {
    for (int c = 0; c < s.vars(); ++c) m(r, c) = boost::rational_cast<double>(s.rows()[r][c]);
    if (augmented) m(r, s.vars()) = boost::rational_cast<double>(s.rhs()[r]);
  }
  return m;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

bool satisfies(const std::vector<StrictIneq>& q, double x, double y) {
  for (const auto& c : q) {
    const double lhs = boost::rational_cast<double>(c.a[0]) * x + boost::rational_cast<double>(c.a[1]) * y;
    if (!(lhs < boost::rational_cast<double>(c.b) - 1e-12)) return false;
  }
  return true;
}

// Witness search for a strict 2D system: intersection points, centroids of
// their triples, small offsets around them, far rays and a grid.
bool witness_2d(const std::vector<StrictIneq>& q) {
  std::vector<Eigen::Vector2d> pts;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      Eigen::Matrix2d m;
      m << boost::rational_cast<double>(q[i].a[0]), boost::rational_cast<double>(q[i].a[1]),
          boost::rational_cast<double>(q[j].a[0]), boost::rational_cast<double>(q[j].a[1]);
      if (std::abs(m.determinant()) < 1e-12) continue;
      pts.push_back(m.inverse() *
                    Eigen::Vector2d(boost::rational_cast<double>(q[i].b), boost::rational_cast<double>(q[j].b)));
    }
  std::vector<Eigen::Vector2d> cand = pts;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) cand.push_back((pts[i] + pts[j] + pts[k]) / 3);
  for (const auto& p : pts)
    for (int d = 0; d < 16; ++d) {
      const double t = d * 3.14159265358979 / 8;
      cand.push_back(p + 1e-4 * Eigen::Vector2d(std::cos(t), std::sin(t)));
    }
  for (int d = 0; d < 720; ++d) {
    const double t = d * 3.14159265358979 / 360;
    cand.push_back(1e4 * Eigen::Vector2d(std::cos(t), std::sin(t)));
  }
  for (double x = -10; x <= 10; x += 0.05)
    for (double y = -10; y <= 10; y += 0.05) cand.emplace_back(x, y);
  for (const auto& c : cand)
    if (satisfies(q, c.x(), c.y())) return true;
  return false;
}

}  // namespace

TEST_CASE("solve returns an exact affine solution set") {
  std::mt19937 rng(7);
  int inconsistent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = 2 + trial % 5;
    const int eqs = 1 + trial % 6;
    const LinearSystem s = random_system(rng, vars, eqs);
    const Rref r = rref(s);
    const Eigen::MatrixXd a = dense(s, false), ab = dense(s, true);
    CHECK(r.rank() == numeric_rank(a));
    CHECK(r.consistent == (numeric_rank(ab) == numeric_rank(a)));
    const auto sol = solve(s);
    CHECK(sol.has_value() == r.consistent);
    if (!sol) {
      ++inconsistent;
      continue;
    }
    CHECK(sol->dimension() == vars - r.rank());
    for (int q = 0; q < s.equations(); ++q) {
      Rat lhs = 0;
      for (int c = 0; c < vars; ++c) lhs += s.rows()[q][c] * sol->base[c];
      CHECK(lhs == s.rhs()[q]);
      for (const auto& d : sol->dirs) {
        Rat dl = 0;
        for (int c = 0; c < vars; ++c) dl += s.rows()[q][c] * d[c];
        CHECK(dl == 0);
      }
    }
    for (std::size_t k = 0; k < sol->free_vars.size(); ++k) {
      const auto e = sol->expression(sol->free_vars[k]);
      CHECK(e[0] == 0);
      CHECK(e[k + 1] == 1);
    }
  }
  CHECK(inconsistent > 0);
}

TEST_CASE("strict feasibility agrees with a witness search in the plane") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-5, 5);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<StrictIneq> q;
    const int n = 2 + trial % 5;
    for (int i = 0; i < n; ++i) q.push_back({RatVec{coef(rng), coef(rng)}, Rat(rhs(rng))});
    const bool fm = strict_feasible(q, 2);
    CAPTURE(trial);
    CHECK(fm == witness_2d(q));
    (fm ? feasible : infeasible)++;
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("strictness matters at a single point") {
  // t < 1 and -t < -1 meet only at the excluded point t = 1
  std::vector<StrictIneq> q{{RatVec{1}, 1}, {RatVec{-1}, -1}};
  CHECK_FALSE(strict_feasible(q, 1));
  q[1].b = Rat(-1, 2);
  CHECK(strict_feasible(q, 1));
}

TEST_CASE("one-parameter interval inside an open box") {
  LinearSystem s(2);
  s.add({1, 1}, 1);
  const auto sol = solve(s);
  REQUIRE(sol);
  REQUIRE(sol->dimension() == 1);
  const auto iv = parameter_interval(*sol, 0, 1);
  REQUIRE(iv);
  CHECK(iv->lo == 0);
  CHECK(iv->hi == 1);
  CHECK(meets_open_box(*sol, 0, 1));
  CHECK_FALSE(meets_open_box(*sol, Rat(1, 2), 1));  // x + y = 1 with both above 1/2
  CHECK_FALSE(parameter_interval(*sol, Rat(1, 2), 1));

  LinearSystem pinned(2);
  pinned.add({1, 0}, Rat(2, 3));
  pinned.add({0, 1}, Rat(2, 3));
  const auto p = solve(pinned);
  REQUIRE(p);
  CHECK(p->dimension() == 0);
  CHECK(p->identically_value(0, Rat(2, 3)));
  CHECK(p->identically_equal(0, 1));
  CHECK(meets_open_box(*p, 0, 2));
}

TEST_CASE("row width is checked") {
  LinearSystem s(3);
  CHECK_THROWS_AS(s.add({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("rational formatting") {
  CHECK(rat_string(Rat(4, 6)) == "2/3");
  CHECK(rat_string(Rat(-2)) == "-2");
  CHECK(rat_string(Rat(0)) == "0");
}
