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

#include "pentile/joint_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include <fmt/format.h>

#include "pentile/parallel.hpp"
#include "pentile/sphere_geom.hpp"

namespace pentile {

namespace {

constexpr int kOracleSamples = 10000;
constexpr double kOracleTol = 1e-10;

std::string superscript_count(int n) {
  return n > 1 ? std::to_string(n) : std::string();
}

// Merge map from labels of x onto labels of y, or nullopt on a clash.
template <std::size_t N>
std::optional<std::vector<Label>> label_map(const std::vector<Label>& x,
                                            const std::array<Label, N>& y, bool fix_zero) {
  std::vector<Label> f(16, 0xFF);
  if (fix_zero) f[0] = 0;
  for (std::size_t i = 0; i < N; ++i) {
    Label& slot = f[x[i]];
    if (slot == 0xFF) {
      slot = y[i];
    } else if (slot != y[i]) {
      return std::nullopt;
    }
  }
  return f;
}

bool injective(const std::vector<Label>& f) {
  std::set<Label> seen;
  for (Label l : f) {
    if (l == 0xFF) continue;
    if (!seen.insert(l).second) return false;
  }
  return true;
}

OracleReport equiangular_oracle() {
  OracleReport r;
  r.oracle = "equiangular-a4b";
  RootScan scan = scan_roots(
      [](double a) -> std::optional<double> {
        auto e = equiangular_four_sides(a);
        if (!e) return std::nullopt;
        return e->end_angle - kAlphaRad;
      },
      0, kPi, kOracleSamples, 1e-13);
  r.roots = scan.roots;
  if (scan.roots.empty()) {
    r.verdict = OracleVerdict::kInconclusive;
    r.evidence = "no closing side length found";
    return r;
  }
  bool all_equal = true;
  std::string detail;
  for (double a : scan.roots) {
    auto e = equiangular_four_sides(a);
    const double gap = e ? std::abs(e->closing_edge - a) : 1.0;
    const double end = e ? std::abs(e->geom.angle(4) - kAlphaRad) : 1.0;
    if (gap > 1e-9 || end > 1e-9) all_equal = false;
    detail += fmt::format(" a={:.12f} b={:.12f};", a, e ? e->closing_edge : -1.0);
  }
  r.verdict = all_equal ? OracleVerdict::kEliminate : OracleVerdict::kKeep;
  r.evidence = (all_equal ? "a = b forced:" : "closing side differs:") + detail;
  return r;
}

OracleReport flanked_oracle(const TileSchema& s, int apex) {
  OracleReport r;
  r.oracle = "flanked-equilateral";
  RootScan scan = scan_roots(
      [](double a) -> std::optional<double> {
        auto f = flanked_equilateral(a);
        if (!f) return std::nullopt;
        return f->area - kTileArea;
      },
      0, kPi, kOracleSamples, 1e-13);
  r.roots = scan.roots;
  if (scan.roots.size() != 1) {
    r.verdict = OracleVerdict::kInconclusive;
    r.evidence = fmt::format("apex {}: {} roots of area = pi/3", apex, scan.roots.size());
    return r;
  }
  auto f = flanked_equilateral(scan.roots[0]);
  if (!f || std::abs(f->area - kTileArea) > kOracleTol) {
    r.verdict = OracleVerdict::kInconclusive;
    r.evidence = "root did not reconstruct";
    return r;
  }
  std::array<double, 5> val{};
  for (int j = 0; j < 5; ++j) val[(apex + j) % 5] = f->geom.angle(j);
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) {
      const bool same_label = s.corner[x] == s.corner[y];
      const bool same_value = std::abs(val[x] - val[y]) < 1e-9;
      if (same_label != same_value) {
        r.verdict = OracleVerdict::kEliminate;
        r.evidence = fmt::format(
            "apex {} flanked by α; unique a = {:.12f}; forces {} {} {}", apex, scan.roots[0],
            angle_label_name(s.corner[x]), same_value ? "=" : "≠", angle_label_name(s.corner[y]));
        return r;
      }
    }
  r.verdict = OracleVerdict::kKeep;
  r.evidence = fmt::format("apex {}: unique a = {:.12f} consistent with labels", apex, scan.roots[0]);
  return r;
}

}  // namespace

TileSchema JointLabeling::schema(const DodecGraph& g, int face) const {
  return face_schema(g, face, edges, corners);
}

bool JointLabeling::congruent(const DodecGraph& g) const {
  const TileSchema ref = schema(g, 0);
  for (int f = 1; f < kFaces; ++f)
    if (!dihedral_equal(schema(g, f), ref)) return false;
  return true;
}

CanonicalKey JointLabeling::key() const {
  const std::array<LabelingSegment, 2> segs{
      LabelingSegment{Domain::kEdges, edges, LabelPolicy::kPermutable},
      LabelingSegment{Domain::kCorners, corners, LabelPolicy::kPermutableFixZero}};
  return canonicalize(segs, symmetry_group());
}

std::string edge_combination_of(const Cycle& p) {
  std::map<Label, int> count;
  for (Label l : p) ++count[l];
  std::vector<int> m;
  for (const auto& [l, n] : count) m.push_back(n);
  std::sort(m.rbegin(), m.rend());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += edge_label_name(static_cast<Label>(i)) + superscript_count(m[i]);
  return out;
}

std::string verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::kNotApplicable: return "n/a";
    case OracleVerdict::kEliminate: return "eliminate";
    case OracleVerdict::kKeep: return "keep";
    case OracleVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

OracleReport geometric_oracles(const TileSchema& s) {
  const bool equilateral = std::all_of(s.edge.begin(), s.edge.end(), [&](Label l) { return l == s.edge[0]; });
  const bool all_alpha = std::all_of(s.corner.begin(), s.corner.end(), [](Label l) { return l == 0; });
  if (all_alpha && edge_combination_of(s.edge) == "a4b") return equiangular_oracle();
  if (equilateral && !all_alpha) {
    for (int i = 0; i < 5; ++i)
      if (s.corner[(i + 4) % 5] == 0 && s.corner[(i + 1) % 5] == 0) return flanked_oracle(s, i);
  }
  return {};
}

std::map<VertexKind, int> vertex_dictionary(const DodecGraph& g, const JointLabeling& l) {
  std::map<VertexKind, int> out;
  for (int v = 0; v < kVertices; ++v) {
    const auto f = g.vertex_faces(v);
    EdgeType et{l.edges[g.edge_between(f[0], f[1])], l.edges[g.edge_between(f[1], f[2])],
                l.edges[g.edge_between(f[0], f[2])]};
    std::sort(et.begin(), et.end());
    ++out[{et, vertex_angle_type(g, l.corners, v)}];
  }
  return out;
}

std::string vertex_dictionary_string(const std::map<VertexKind, int>& d) {
  std::string out;
  for (const auto& [k, n] : d) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{}{} = {}", n, edge_type_string(k.first), angle_type_string(k.second));
  }
  return out;
}

bool specializes(const JointLabeling& general, const JointLabeling& special, bool* angle_injective) {
  bool found = false;
  for (const auto& a : symmetry_group()) {
    auto fe = label_map(permute_labeling(a, Domain::kEdges, general.edges), special.edges, false);
    if (!fe) continue;
    auto fc = label_map(permute_labeling(a, Domain::kCorners, general.corners), special.corners, true);
    if (!fc) continue;
    found = true;
    if (injective(*fc)) {
      if (angle_injective) *angle_injective = true;
      return true;
    }
  }
  if (angle_injective) *angle_injective = false;
  return found;
}

namespace {

TilingClass make_class(const DodecGraph& g, const Survivor& s) {
  TilingClass c;
  c.schema = s.schema;
  c.edge_combination = s.edge_combination;
  c.angle_combination = s.angle_combination;
  c.labeling = s.labeling;
  c.key = s.key;
  c.evc = evc(g, s.labeling.edges);
  c.avc = avc_of(g, s.labeling.corners);
  c.dictionary = vertex_dictionary(g, s.labeling);
  std::vector<AngleType> types;
  for (const auto& [t, n] : c.avc) {
    types.push_back(t);
    c.vertex_equations.push_back(type_equation_string(t));
  }
  const AngleCombination comb = combination_of(s.schema.corner);
  if (auto sol = solve_low_free(angle_equations(comb, types))) {
    c.solution = *sol;
    c.relations = relation_strings(*sol);
    c.angle_dimension = sol->dimension();
  }
  std::set<Label> edge_labels(s.schema.edge.begin(), s.schema.edge.end());
  c.parameter_count_raw = static_cast<int>(edge_labels.size()) + c.angle_dimension - 3;
  c.parameter_count = std::max(0, c.parameter_count_raw);
  c.overdetermined = c.parameter_count_raw < 0;
  return c;
}

void assign_ids(std::vector<TilingClass>& classes) {
  std::vector<TilingClass*> a4b;
  int unknown = 0;
  for (auto& c : classes) {
    if (c.edge_combination == "a2b2c") {
      c.id = "T5";
    } else if (c.edge_combination == "a5" && c.angle_combination == "αβγδε") {
      c.id = "T1";
    } else if (c.edge_combination == "a4b") {
      a4b.push_back(&c);
    } else {
      c.id = fmt::format("U{}", ++unknown);
    }
  }
  std::sort(a4b.begin(), a4b.end(), [](auto* x, auto* y) { return x->key < y->key; });
  for (std::size_t i = 0; i < a4b.size(); ++i)
    a4b[i]->id = i < 3 ? fmt::format("T{}", i + 2) : fmt::format("U{}", ++unknown);
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (x.id[0] != y.id[0]) return x.id[0] > y.id[0];  // T before U
    return std::stoi(x.id.substr(1)) < std::stoi(y.id.substr(1));
  });
}

}  // namespace

CombineResult combine(const DodecGraph& g, const std::vector<EdgeLabeling>& edges,
                      const std::vector<CornerLabeling>& corners, const CombineOptions& opts) {
  CombineResult res;
  res.stats.pairs = edges.size() * corners.size();
  res.stats.alignments = res.stats.pairs * symmetry_group().size();

  // Congruent joint labelings per edge labeling.
  std::vector<std::vector<JointLabeling>> found(edges.size());
  parallel_for(edges.size(), [&](std::size_t i) {
    std::set<std::pair<EdgeLabeling, CornerLabeling>> seen;
    for (const auto& c : corners) {
      for (const auto& a : symmetry_group()) {
        auto img = permute_labeling(a, Domain::kCorners, c);
        JointLabeling j;
        j.edges = edges[i];
        std::copy(img.begin(), img.end(), j.corners.begin());
        if (!seen.insert({j.edges, j.corners}).second) continue;
        if (j.congruent(g)) found[i].push_back(j);
      }
    }
  });

  // Distinct up to symmetry and renaming.
  std::vector<JointLabeling> flat;
  for (auto& v : found) flat.insert(flat.end(), v.begin(), v.end());
  std::vector<CanonicalKey> keys(flat.size());
  parallel_for(flat.size(), [&](std::size_t i) { keys[i] = flat[i].key(); });
  std::map<CanonicalKey, JointLabeling> unique;
  for (std::size_t i = 0; i < flat.size(); ++i) unique.emplace(keys[i], flat[i]);
  res.stats.compatible = unique.size();

  std::map<TileSchema, OracleReport> oracle_cache;
  std::vector<Survivor> kept;
  for (const auto& [key, j] : unique) {
    Survivor s;
    s.labeling = j;
    s.key = key;
    s.schema = j.schema(g);
    s.edge_combination = edge_combination_of(s.schema.edge);
    s.angle_combination = combination_of(s.schema.corner).name();
    if (opts.apex_rule && !opts.apex_late) {
      ApexCheck chk = apex_check(s.schema);
      if (chk.pruned) {
        res.eliminated.push_back({j, s.schema, "apex", describe(chk, s.schema)});
        ++res.stats.pruned_apex;
        continue;
      }
    }
    if (opts.oracles) {
      const TileSchema m = dihedral_min(s.schema);
      auto it = oracle_cache.find(m);
      if (it == oracle_cache.end()) it = oracle_cache.emplace(m, geometric_oracles(s.schema)).first;
      s.oracle = it->second;
      if (s.oracle.verdict == OracleVerdict::kEliminate) {
        res.eliminated.push_back({j, s.schema, "oracle", s.oracle.oracle + ": " + s.oracle.evidence});
        ++res.stats.eliminated_oracle;
        continue;
      }
      if (s.oracle.verdict == OracleVerdict::kInconclusive) ++res.stats.inconclusive;
    }
    kept.push_back(std::move(s));
  }
  if (opts.apex_rule && opts.apex_late) {
    std::vector<Survivor> after;
    for (auto& s : kept) {
      ApexCheck chk = apex_check(s.schema);
      if (chk.pruned) {
        res.eliminated.push_back({s.labeling, s.schema, "apex", describe(chk, s.schema)});
        ++res.stats.pruned_apex;
      } else {
        after.push_back(std::move(s));
      }
    }
    kept = std::move(after);
  }
  res.stats.survivors = static_cast<int>(kept.size());

  // Maximal survivors are the classes; the rest are readings of them.
  const std::size_t n = kept.size();
  std::vector<std::vector<char>> spec(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> inj(n, std::vector<char>(n, 0));
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    if (i == j) return;
    bool in = false;
    spec[i][j] = specializes(kept[i].labeling, kept[j].labeling, &in);
    inj[i][j] = in;
  });
  for (std::size_t j = 0; j < n; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < n && !dominated; ++i) dominated = spec[i][j];
    if (dominated) continue;
    TilingClass c = make_class(g, kept[j]);
    std::set<std::string> readings{c.edge_combination};
    for (std::size_t k = 0; k < n; ++k)
      if (spec[j][k] && inj[j][k]) readings.insert(kept[k].edge_combination);
    c.readings.assign(readings.begin(), readings.end());
    c.a5_reading = readings.count("a5") > 0;
    res.classes.push_back(std::move(c));
  }
  assign_ids(res.classes);
  res.survivors = std::move(kept);
  return res;
}

CombineResult classify(const CombineOptions& opts) {
  const DodecGraph& g = dodecahedron();
  std::vector<EdgeLabeling> edges;
  for (const auto& name : edge_combination_names()) {
    auto v = enumerate_combination(g, name);
    edges.insert(edges.end(), v.begin(), v.end());
  }
  std::vector<CornerLabeling> corners;
  for (const auto& c : solve_angle_numerics()) {
    auto v = enumerate_angle_combination(g, c.combination);
    corners.insert(corners.end(), v.begin(), v.end());
  }
  return combine(g, edges, corners, opts);
}

}  // namespace pentile
