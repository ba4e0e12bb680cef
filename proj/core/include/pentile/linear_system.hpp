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

#ifndef PENTILE_LINEAR_SYSTEM_HPP_
#define PENTILE_LINEAR_SYSTEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// boost::rational compares against a different integer type by recursing
// into itself; pin plain int comparisons to the rational overloads.
namespace boost {
#define PENTILE_RAT_CMP(op)                                                          \
  inline bool operator op(const rational<std::int64_t>& a, int b) {                  \
    return a op rational<std::int64_t>(b);                                           \
  }                                                                                  \
  inline bool operator op(int a, const rational<std::int64_t>& b) {                  \
    return rational<std::int64_t>(a) op b;                                           \
  }
PENTILE_RAT_CMP(==)
PENTILE_RAT_CMP(!=)
PENTILE_RAT_CMP(<)
PENTILE_RAT_CMP(>)
PENTILE_RAT_CMP(<=)
PENTILE_RAT_CMP(>=)
#undef PENTILE_RAT_CMP
}  // namespace boost

namespace pentile {

using Rat = boost::rational<std::int64_t>;
using RatVec = std::vector<Rat>;

// Equations sum_j coef[j] * x_j = rhs over the rationals.
class LinearSystem {
 public:
  explicit LinearSystem(int vars = 0) : vars_(vars) {}
  int vars() const { return vars_; }
  int equations() const { return static_cast<int>(rows_.size()); }
  void add(RatVec coef, Rat rhs);
  const std::vector<RatVec>& rows() const { return rows_; }
  const RatVec& rhs() const { return rhs_; }

 private:
  int vars_;
  std::vector<RatVec> rows_;
  RatVec rhs_;
};

// Reduced row echelon form of [A | b], zero rows dropped.
struct Rref {
  std::vector<RatVec> rows;  // each of length vars + 1, last entry = rhs
  std::vector<int> pivots;
  bool consistent = true;
  int rank() const { return static_cast<int>(pivots.size()); }
};
Rref rref(const LinearSystem& s);

// Solution set x = base + sum_k t_k * dir[k], one direction per free column.
struct AffineSet {
  RatVec base;
  std::vector<RatVec> dirs;
  std::vector<int> free_vars;  // t_k is the value of x[free_vars[k]]
  int dimension() const { return static_cast<int>(dirs.size()); }
  // Coefficients of x_i as an affine function of the parameters: [c, t_0, t_1, ...].
  RatVec expression(int i) const;
  bool identically_equal(int i, int j) const;
  bool identically_value(int i, Rat v) const;
};
std::optional<AffineSet> solve(const LinearSystem& s);

// Strict inequalities a . t < b over the parameters.
struct StrictIneq {
  RatVec a;
  Rat b;
};
// Fourier-Motzkin elimination; true iff some real t satisfies all.
bool strict_feasible(std::vector<StrictIneq> ineqs, int params);

// lo < x_i < hi for every variable i, pulled back to the parameters.
std::vector<StrictIneq> box_constraints(const AffineSet& s, Rat lo, Rat hi);
bool meets_open_box(const AffineSet& s, Rat lo, Rat hi);

// For a 1-parameter set: the open interval of t allowed by the box.
struct OpenInterval {
  Rat lo, hi;
};
std::optional<OpenInterval> parameter_interval(const AffineSet& s, Rat lo, Rat hi);

std::string rat_string(const Rat& r);  // "2/3", "-1", "0"

}  // namespace pentile

#endif  // PENTILE_LINEAR_SYSTEM_HPP_
