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

// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "oracles.hpp"
#include "pentile/angle_classifier.hpp"
#include "pentile/edge_classifier.hpp"
#include "pentile/isolated_search.hpp"
#include "pentile/joint_classifier.hpp"
#include "pentile/realization.hpp"
#include "pentile/sphere_geom.hpp"

using namespace pentile;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

// Collects notes for one criterion and prints a single verdict line.
struct Criterion {
  int id;
  std::string title;
  Clock::time_point start = Clock::now();
  std::vector<std::string> bad;
  std::vector<std::string> info;

  Criterion(int n, std::string t) : id(n), title(std::move(t)) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  }
  void finish() {
    const double s = seconds_since(start);
    std::string line = fmt::format("{} {:>2} {} [{:.2f}s]", bad.empty() ? "PASS" : "FAIL", id, title, s);
    for (const auto& i : info) line += "; " + i;
    std::puts(line.c_str());
    for (const auto& b : bad) std::printf("     - %s\n", b.c_str());
    std::fflush(stdout);
    if (!bad.empty()) ++failures;
  }
};

// Reference data uses letters a..e for the angle labels α..ε.
AngleType type_of(const std::string& s) {
  AngleType t{};
  for (int i = 0; i < 3; ++i) t[i] = static_cast<Label>(s[i] - 'a');
  std::sort(t.begin(), t.end());
  return t;
}

Avc avc_of_list(const std::vector<std::pair<int, std::string>>& items) {
  Avc a;
  for (const auto& [n, s] : items) a[type_of(s)] += n;
  return a;
}

struct RefEquation {
  std::vector<Rat> coef;
  Rat rhs;  // units of π
};

struct RefCase {
  std::vector<int> count;  // tile multiplicity per label
  std::vector<RefEquation> eqs;
  std::vector<Avc> avcs;
};

Avc renamed(const Avc& a, const std::vector<int>& sigma) {
  Avc out;
  for (const auto& [t, n] : a) {
    AngleType u{};
    for (int i = 0; i < 3; ++i) u[i] = static_cast<Label>(sigma[t[i]]);
    std::sort(u.begin(), u.end());
    out[u] += n;
  }
  return out;
}

// Every equation holds identically on the affine set after renaming.
bool equations_hold(const std::vector<RefEquation>& eqs, const AffineSet& s,
                    const std::vector<int>& sigma) {
  for (const auto& e : eqs) {
    RatVec acc(1 + s.dimension(), Rat(0));
    for (std::size_t i = 0; i < e.coef.size(); ++i) {
      if (e.coef[i] == 0) continue;
      const RatVec x = s.expression(sigma[i]);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += e.coef[i] * x[k];
    }
    if (acc[0] != e.rhs) return false;
    for (std::size_t k = 1; k < acc.size(); ++k)
      if (acc[k] != 0) return false;
  }
  return true;
}

// Solution dimension of the reference system, by floating point rank.
int reference_dimension(const std::vector<RefEquation>& eqs, int vars) {
  Eigen::MatrixXd m(eqs.size(), vars);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < vars; ++c) m(r, c) = boost::rational_cast<double>(eqs[r].coef[c]);
  return vars - static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank());
}

// All permutations of labels 1..n-1, α stays put.
std::vector<std::vector<int>> alpha_fixing_perms(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<Rat> coefs(std::initializer_list<int> c) { return {c.begin(), c.end()}; }

const Rat two_thirds{2, 3};

std::vector<RefCase> reference_cases() {
  std::vector<RefCase> r;
  r.push_back({{5}, {{coefs({1}), two_thirds}}, {avc_of_list({{20, "aaa"}})}});
  r.push_back({{3, 1, 1},
               {{coefs({1, 0, 0}), two_thirds}, {coefs({0, 1, 1}), Rat(4, 3)}},
               {avc_of_list({{8, "aaa"}, {12, "abc"}})}});
  r.push_back({{2, 2, 1},
               {{coefs({1, 0, 0}), two_thirds}, {coefs({0, 2, 1}), Rat(2)}},
               {avc_of_list({{8, "aaa"}, {12, "bbc"}})}});
  r.push_back({{2, 1, 1, 1},
               {{coefs({1, 0, 0, 0}), two_thirds}, {coefs({0, 1, 1, 1}), Rat(2)}},
               {avc_of_list({{8, "aaa"}, {12, "bcd"}})}});
  r.push_back({{1, 1, 1, 1, 1},
               {{coefs({1, 0, 0, 0, 0}), two_thirds},
                {coefs({0, 2, 1, 0, 0}), Rat(2)},
                {coefs({0, 1, 0, 1, 0}), Rat(4, 3)},
                {coefs({0, -2, 0, 0, 1}), Rat(-2, 3)}},
               {avc_of_list({{4, "abd"}, {8, "ace"}, {4, "bbc"}, {4, "dde"}}),
                avc_of_list({{1, "aaa"}, {2, "abd"}, {7, "ace"}, {5, "bbc"}, {5, "dde"}}),
                avc_of_list({{2, "aaa"}, {6, "ace"}, {6, "bbc"}, {6, "dde"}})}});
  return r;
}

const Avc& isolated_avc() {
  static const Avc a = avc_of_list({{2, "aaa"}, {6, "ace"}, {6, "bbc"}, {6, "dde"}});
  return a;
}

const std::vector<RefEquation>& isolated_relations() {
  static const std::vector<RefEquation> e{{coefs({3, 0, 0, 0, 0}), Rat(2)},
                                          {coefs({0, 2, 1, 0, 0}), Rat(2)},
                                          {coefs({0, 0, 0, 2, 1}), Rat(2)},
                                          {coefs({1, 0, 1, 0, 1}), Rat(2)}};
  return e;
}

const std::vector<RefEquation>& family_relations() {
  static const std::vector<RefEquation> e{{coefs({3, 0, 0, 0}), Rat(2)},
                                          {coefs({0, 1, 1, 1}), Rat(2)}};
  return e;
}

// ---- plain vector geometry, no library calls ----

double arc(const Vec3& p, const Vec3& q) { return std::atan2(p.cross(q).norm(), p.dot(q)); }

// Interior angle at v of a counterclockwise polygon.
double corner_angle(const Vec3& v, const Vec3& next, const Vec3& prev) {
  const Vec3 tn = (next - v * v.dot(next)).normalized();
  const Vec3 tp = (prev - v * v.dot(prev)).normalized();
  double th = std::atan2(v.dot(tn.cross(tp)), tn.dot(tp));
  if (th < 0) th += kTwoPi;
  return th;
}

std::array<double, 5> pentagon_angles(const std::array<Vec3, 5>& p) {
  std::array<double, 5> a{};
  for (int k = 0; k < 5; ++k) a[k] = corner_angle(p[k], p[(k + 1) % 5], p[(k + 4) % 5]);
  return a;
}

const CombineResult& default_run() {
  static const CombineResult r = classify();
  return r;
}

const TilingClass* find_class(const std::string& id) {
  for (const auto& c : default_run().classes)
    if (c.id == id) return &c;
  return nullptr;
}

// ---- criteria ----

void edge_counts() {
  Criterion c{1, "edge labelings up to symmetry per combination"};
  const std::map<std::string, std::size_t> want{{"a5", 1},   {"a4b", 5},   {"a3b2", 1}, {"a3bc", 0},
                                                {"a2b2c", 1}, {"a2bcd", 0}, {"abcde", 0}};
  const DodecGraph& g = dodecahedron();
  std::string got;
  for (const auto& name : edge_combination_names()) {
    const auto n = enumerate_combination(g, name).size();
    got += fmt::format("{}{}={}", got.empty() ? "" : " ", name, n);
    const auto it = want.find(name);
    c.expect(it != want.end(), "unexpected combination " + name);
    if (it != want.end()) c.expect(n == it->second, fmt::format("{}: {} labelings, want {}", name, n, it->second));
  }
  c.expect(edge_combination_names().size() == want.size(), "combination list size");
  const double s = seconds_since(c.start);
  c.expect(s < 60, fmt::format("took {:.1f}s", s));
  c.info.push_back(got);
  c.finish();
}

void edge_vertex_combinations() {
  Criterion c{2, "edgewise vertex combinations"};
  const DodecGraph& g = dodecahedron();
  auto type = [](int x, int y, int z) { return EdgeType{Label(x), Label(y), Label(z)}; };
  const std::map<std::string, Evc> want{
      {"a5", {{type(0, 0, 0), 20}}},
      {"a4b", {{type(0, 0, 0), 8}, {type(0, 0, 1), 12}}},
      {"a3b2", {{type(0, 0, 0), 4}, {type(1, 1, 1), 4}, {type(0, 0, 1), 12}}}};
  for (const auto& [name, evc_want] : want) {
    const auto ls = enumerate_combination(g, name);
    c.expect(!ls.empty(), name + ": no labelings");
    for (const auto& l : ls) {
      const Evc e = evc(g, l);
      c.expect(e == evc_want, fmt::format("{}: got {}, want {}", name, evc_string(e), evc_string(evc_want)));
    }
    c.info.push_back(fmt::format("{} {}", name, evc_string(evc_want)));
  }
  c.finish();
}

void angle_cases() {
  Criterion c{3, "five angle cases with reference relations and vertex combinations"};
  const auto ours = solve_angle_numerics();
  const auto ref = reference_cases();
  c.expect(ours.size() == ref.size(), fmt::format("{} cases, want 5", ours.size()));
  for (std::size_t i = 0; i < std::min(ours.size(), ref.size()); ++i) {
    const auto& o = ours[i];
    const auto& r = ref[i];
    const int n = static_cast<int>(r.count.size());
    bool matched = false;
    if (o.combination.labels() == n &&
        o.solution.dimension() == reference_dimension(r.eqs, n)) {
      std::set<Avc> ours_avcs(o.avcs.begin(), o.avcs.end());
      for (const auto& sigma : alpha_fixing_perms(n)) {
        bool ok = ours_avcs.size() == r.avcs.size();
        for (int l = 0; l < n && ok; ++l) ok = o.combination.slot_count[sigma[l]] == r.count[l];
        ok = ok && equations_hold(r.eqs, o.solution, sigma);
        for (const auto& a : r.avcs)
          if (ok) ok = ours_avcs.count(renamed(a, sigma)) == 1;
        if (ok) {
          matched = true;
          break;
        }
      }
    }
    c.expect(matched, fmt::format("case {} ({}) does not match the reference", i + 1, o.combination.name()));
    c.info.push_back(fmt::format("{}:{}", o.combination.name(), o.avcs.size()));
  }
  c.finish();
}

void corner_labelings() {
  Criterion c{4, "corner labelings and exchange families"};
  const DodecGraph& g = dodecahedron();
  const auto cases = solve_angle_numerics();
  if (cases.size() != 5) {
    c.expect(false, "angle cases missing");
    c.finish();
    return;
  }
  const auto& c3 = cases[2].combination;
  const auto& c4 = cases[3].combination;
  const auto& c5 = cases[4].combination;

  const auto l3 = enumerate_angle_combination(g, c3);
  const auto x3 = exchange_graph(g, l3, c3);
  c.expect(x3.families.size() == 2, fmt::format("{}: {} families, want 2", c3.name(), x3.families.size()));
  c.expect(x3.escaped == 0, fmt::format("{}: {} exchanges leave the set", c3.name(), x3.escaped));
  c.info.push_back(fmt::format("{} {} labelings in {} families", c3.name(), l3.size(), x3.families.size()));

  const auto l4 = enumerate_angle_combination(g, c4);
  const auto x4 = exchange_graph(g, l4, c4);
  c.expect(x4.families.size() == 1, fmt::format("{}: {} families, want 1", c4.name(), x4.families.size()));
  c.expect(x4.escaped == 0, fmt::format("{}: {} exchanges leave the set", c4.name(), x4.escaped));
  c.expect(l4.size() == 6, fmt::format("{}: {} labelings, want 6", c4.name(), l4.size()));
  // the arrangement with the two α corners adjacent
  int adjacent_arrangements = 0;
  for (const auto& arr : labeled_arrangements(c4, true)) {
    bool adj = false;
    for (int k = 0; k < 5; ++k) adj = adj || (arr[k] == 0 && arr[(k + 1) % 5] == 0);
    if (!adj) continue;
    ++adjacent_arrangements;
    const auto n = enumerate_corner_labelings(g, arr).size();
    c.expect(n == 0, fmt::format("{}: adjacent-α arrangement {} has {} labelings", c4.name(), angle_word(arr), n));
  }
  c.expect(adjacent_arrangements == 1, fmt::format("{} adjacent-α arrangements, want 1", adjacent_arrangements));
  c.info.push_back(fmt::format("{} {} labelings in {} family", c4.name(), l4.size(), x4.families.size()));

  const auto l5 = enumerate_angle_combination(g, c5);
  c.expect(l5.size() == 4, fmt::format("{}: {} labelings, want 4", c5.name(), l5.size()));
  for (const auto& l : l5) {
    const Avc a = avc_of(g, l);
    bool ok = false;
    for (const auto& sigma : alpha_fixing_perms(5)) ok = ok || renamed(isolated_avc(), sigma) == a;
    c.expect(ok, fmt::format("{}: labeling with {}", c5.name(), avc_string(a)));
  }
  c.info.push_back(fmt::format("{} {} labelings", c5.name(), l5.size()));
  const double s = seconds_since(c.start);
  c.expect(s < 600, fmt::format("took {:.1f}s", s));
  c.finish();
}

void classes() {
  Criterion c{5, "five tiling classes"};
  const auto& r = default_run();
  c.expect(r.classes.size() == 5, fmt::format("{} classes", r.classes.size()));
  for (const char* id : {"T1", "T2", "T3", "T4"}) {
    const TilingClass* t = find_class(id);
    if (!t) {
      c.expect(false, std::string("missing ") + id);
      continue;
    }
    c.expect(t->angle_combination == "αβγδε", std::string(id) + " angle combination " + t->angle_combination);
    c.expect(t->edge_combination == (std::string(id) == "T1" ? "a5" : "a4b"),
             std::string(id) + " edge combination " + t->edge_combination);
    bool ok = t->solution.dimension() == reference_dimension(isolated_relations(), 5);
    bool found = false;
    for (const auto& sigma : alpha_fixing_perms(5))
      if (ok && equations_hold(isolated_relations(), t->solution, sigma) &&
          renamed(isolated_avc(), sigma) == t->avc)
        found = true;
    c.expect(found, std::string(id) + " relations or vertex combination differ");
  }
  if (const TilingClass* t = find_class("T5")) {
    c.expect(t->edge_combination == "a2b2c", "T5 edge combination " + t->edge_combination);
    c.expect(t->angle_combination == "α²βγδ", "T5 angle combination " + t->angle_combination);
    bool found = false;
    for (const auto& sigma : alpha_fixing_perms(4)) {
      if (t->solution.dimension() != reference_dimension(family_relations(), 4)) break;
      if (!equations_hold(family_relations(), t->solution, sigma)) continue;
      auto at = [&](const char* s) {
        AngleType u = type_of(s);
        for (auto& x : u) x = static_cast<Label>(sigma[x]);
        std::sort(u.begin(), u.end());
        return u;
      };
      const std::map<VertexKind, int> want{{{EdgeType{0, 0, 0}, at("aaa")}, 4},
                                           {{EdgeType{0, 1, 2}, at("bcd")}, 12},
                                           {{EdgeType{1, 1, 1}, at("aaa")}, 4}};
      if (t->dictionary == want) found = true;
    }
    c.expect(found, "T5 relations or vertex dictionary differ: " + vertex_dictionary_string(t->dictionary));
    c.info.push_back("T5 " + vertex_dictionary_string(t->dictionary));
  } else {
    c.expect(false, "missing T5");
  }
  // dictionaries project onto the edge and angle combinations
  for (const auto& t : r.classes) {
    Evc e;
    Avc a;
    for (const auto& [k, n] : t.dictionary) {
      e[k.first] += n;
      a[k.second] += n;
    }
    c.expect(e == t.evc && a == t.avc, t.id + " dictionary marginals");
  }
  c.finish();
}

void regular_geometry() {
  Criterion c{6, "regular dodecahedron from exact coordinates"};
  const DodecGraph& g = dodecahedron();
  const auto exact = oracle::exact_dodecahedron(g);
  const TilingClass* t1 = find_class("T1");
  if (!exact || !t1) {
    c.expect(false, "no exact coordinates or no T1");
    c.finish();
    return;
  }
  RealizedTiling t;
  t.class_id = "T1";
  const double len = std::acos(std::sqrt(5.0) / 3);
  t.parameters["a"] = len;
  for (int v = 0; v < kVertices; ++v) t.vertices[v] = exact->vertex[v];
  for (int f = 0; f < kFaces; ++f) t.faces[f] = g.boundary(f).vertices;
  t.edge_value.fill(len);
  t.edge_label.fill(0);
  t.corner_value.fill(2 * kPi / 3);
  const Residuals r = verify_realization(t);
  c.expect(r.max() < 1e-9, fmt::format("max residual {:.3g} at {}", r.max(), r.worst));
  c.expect(r.total_angle <= 1e-8, fmt::format("total angle off by {:.3g}", r.total_angle));
  double worst_area = 0, total_angle = 0;
  for (int f = 0; f < kFaces; ++f) {
    std::array<Vec3, 5> p{};
    for (int k = 0; k < 5; ++k) p[k] = t.vertices[t.faces[f][k]];
    double area = 0;
    for (int k = 1; k < 4; ++k)
      area += oracle::lhuilier_area(arc(p[0], p[k]), arc(p[k], p[k + 1]), arc(p[0], p[k + 1]));
    worst_area = std::max(worst_area, std::abs(area - kPi / 3));
    for (double a : pentagon_angles(p)) total_angle += a;
  }
  c.expect(worst_area <= 1e-9, fmt::format("face area off by {:.3g}", worst_area));
  c.expect(std::abs(total_angle - 40 * kPi) <= 1e-8, "independent total angle");
  c.info.push_back(fmt::format("max residual {:.2g}, area error {:.2g}", r.max(), worst_area));
  c.finish();
}

void family_grid() {
  Criterion c{7, "two-parameter family on a 5x5 grid"};
  const TilingClass* t5 = find_class("T5");
  if (!t5) {
    c.expect(false, "missing T5");
    c.finish();
    return;
  }
  double worst = 0;
  std::set<long long> shapes;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const double a = 0.64 + 0.04 * i, b = 0.64 + 0.04 * j;
      try {
        const T5Pentagon p = construct_t5(a, b);
        const RealizedTiling t = realize_tiling(*t5, p.geom);
        const Residuals r = verify_realization(t);
        worst = std::max(worst, r.max());
        c.expect(r.max() < 1e-9, fmt::format("a={} b={}: residual {:.3g} at {}", a, b, r.max(), r.worst));
        // lengths straight from the coordinates
        const auto& v = p.geom.v;
        c.expect(std::abs(arc(v[0], v[1]) - a) < 1e-9 && std::abs(arc(v[1], v[2]) - a) < 1e-9 &&
                     std::abs(arc(v[2], v[3]) - b) < 1e-9 && std::abs(arc(v[3], v[4]) - b) < 1e-9,
                 fmt::format("a={} b={}: edge lengths", a, b));
        shapes.insert(std::llround(p.delta * 1e6));
      } catch (const std::exception& e) {
        c.expect(false, fmt::format("a={} b={}: {}", a, b, e.what()));
      }
    }
  c.expect(shapes.size() > 1, "δ does not vary over the grid");
  c.info.push_back(fmt::format("max residual {:.2g}", worst));
  c.finish();
}

void cube_instance() {
  Criterion c{8, "cube projection instance"};
  const Vec3 A = Vec3(1, 1, 0.3).normalized(), B = Vec3(1, 1, 1).normalized(),
             C = Vec3(1, 0.3, 1).normalized(), D = Vec3(1, -0.3, -1).normalized(),
             E = Vec3(1, 1, -1).normalized();
  // C, B, A, E, D runs clockwise in these coordinates
  const std::array<Vec3, 5> p{D, E, A, B, C};
  const auto ang = pentagon_angles(p);
  c.expect(std::abs(ang[2] - kPi) < 1e-9, fmt::format("coordinates: δ - π = {:.3g}", ang[2] - kPi));
  c.expect(std::abs(ang[0] + ang[4] - kPi) < 1e-9, "coordinates: β + γ != π");
  c.expect(std::abs(ang[1] - kAlphaRad) < 1e-9 && std::abs(ang[3] - kAlphaRad) < 1e-9, "coordinates: α corners");
  const double a = arc(C, B), b = arc(A, E);
  try {
    const T5Pentagon t = construct_t5(a, b);
    c.expect(std::abs(t.delta - kPi) < 1e-9, fmt::format("construct: δ - π = {:.3g}", t.delta - kPi));
    c.expect(std::abs(t.beta + t.gamma - kPi) < 1e-9,
             fmt::format("construct: β + γ - π = {:.3g}", t.beta + t.gamma - kPi));
    if (const TilingClass* t5 = find_class("T5")) {
      const Residuals r = verify_realization(realize_tiling(*t5, t.geom));
      c.expect(r.max() < 1e-9, fmt::format("realization residual {:.3g}", r.max()));
    }
    c.info.push_back(fmt::format("a={:.12f} b={:.12f} δ={:.12f}", a, b, t.delta));
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void isolated() {
  Criterion c{9, "isolated classes"};
  const double reg_edge = std::acos(std::sqrt(5.0) / 3);
  for (const char* id : {"T1", "T2", "T3", "T4"}) {
    const TilingClass* t = find_class(id);
    if (!t) {
      c.expect(false, std::string("missing ") + id);
      continue;
    }
    const IsolatedReport rep = solve_isolated(*t);
    int regular = 0;
    for (const auto& s : rep.solutions) {
      c.expect(s.residual < 1e-12, fmt::format("{}: Newton residual {:.3g}", id, s.residual));
      // rebuild everything from the five vertices
      const auto& v = s.pentagon.v;
      const auto ang = pentagon_angles(v);
      const auto want = label_angles(*t, s.t);
      double angle_err = 0, sum = 0, a_err = 0;
      std::map<Label, std::vector<double>> by_label;
      for (int k = 0; k < 5; ++k) {
        angle_err = std::max(angle_err, std::abs(ang[k] - want[t->schema.corner[k]]));
        sum += ang[k];
        const double len = arc(v[(k + 4) % 5], v[k]);
        by_label[t->schema.edge[k]].push_back(len);
        if (t->schema.edge[k] == 0) a_err = std::max(a_err, std::abs(len - s.a));
      }
      double spread = 0;
      for (const auto& [l, ls] : by_label)
        spread = std::max(spread, *std::max_element(ls.begin(), ls.end()) - *std::min_element(ls.begin(), ls.end()));
      c.expect(angle_err < 1e-9, fmt::format("{}: corner angle off by {:.3g}", id, angle_err));
      c.expect(std::abs(sum - 3 * kPi - kPi / 3) < 1e-9, fmt::format("{}: area off", id));
      c.expect(spread < 1e-9 && a_err < 1e-9, fmt::format("{}: equal labels, unequal lengths", id));
      bool is_regular = true;
      for (int k = 0; k < 5; ++k)
        is_regular = is_regular && std::abs(ang[k] - kAlphaRad) < 1e-9 &&
                     std::abs(arc(v[k], v[(k + 1) % 5]) - reg_edge) < 1e-9;
      regular += is_regular;
      c.expect(is_regular == s.regular, fmt::format("{}: regular flag disagrees", id));
    }
    c.expect(regular == 1, fmt::format("{}: regular pentagon found {} times", id, regular));
    c.info.push_back(fmt::format("{} {} solution(s)", id, rep.solutions.size()));
  }
  c.finish();
}

void pruning_equivalence() {
  Criterion c{10, "same outcome with the filters off"};
  const DodecGraph& g = dodecahedron();
  EdgeSearchOptions eo;
  eo.degree3_filter = false;
  CornerSearchOptions co;
  co.pair_lookahead = false;
  std::vector<EdgeLabeling> edges;
  for (const auto& name : edge_combination_names()) {
    auto v = enumerate_combination(g, name, eo);
    edges.insert(edges.end(), v.begin(), v.end());
  }
  std::vector<CornerLabeling> corners;
  for (const auto& cs : solve_angle_numerics()) {
    auto v = enumerate_angle_combination(g, cs.combination, co);
    corners.insert(corners.end(), v.begin(), v.end());
  }
  CombineOptions o;
  o.apex_late = true;
  const CombineResult open = combine(g, edges, corners, o);
  const CombineResult& ref = default_run();
  auto keys = [](const auto& v) {
    std::set<CanonicalKey> s;
    for (const auto& x : v) s.insert(x.key);
    return s;
  };
  c.expect(keys(open.classes) == keys(ref.classes), "class sets differ");
  c.expect(keys(open.survivors) == keys(ref.survivors), "survivor sets differ");
  std::vector<std::string> ids_open, ids_ref;
  for (const auto& x : open.classes) ids_open.push_back(x.id);
  for (const auto& x : ref.classes) ids_ref.push_back(x.id);
  c.expect(ids_open == ids_ref, "class ids differ");
  c.info.push_back(fmt::format("{} survivors, {} classes; late run removed {} by apex rule and {} by oracle",
                               open.survivors.size(), open.classes.size(), open.stats.pruned_apex,
                               open.stats.eliminated_oracle));
  c.finish();
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<std::function<void()>> all{edge_counts, edge_vertex_combinations, angle_cases,
                                               corner_labelings, classes, regular_geometry,
                                               family_grid, cube_instance, isolated,
                                               pruning_equivalence};
  for (const auto& f : all) {
    try {
      f();
    } catch (const std::exception& e) {
      std::printf("FAIL    uncaught exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 10 criteria met in %.1fs\n", 10 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
