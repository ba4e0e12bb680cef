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

#include "pentile/serialize.hpp"

#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

namespace pentile {

namespace {

std::string edge_letters(std::span<const Label> l) {
  std::string s;
  for (Label x : l) s += edge_label_name(x);
  return s;
}

Json interval_json(const std::optional<OpenInterval>& iv) {
  if (!iv) return nullptr;
  return Json{{"lo", rat_string(iv->lo)}, {"hi", rat_string(iv->hi)}, {"unit", "pi"}};
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(fmt::format("missing field '{}'", key));
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("field '{}': {}", key, e.what()));
  }
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json edge_labeling_json(const DodecGraph& g, const EdgeLabeling& l) {
  Json faces = Json::array();
  for (int f = 0; f < kFaces; ++f) {
    Cycle c{};
    for (int k = 0; k < 5; ++k) c[k] = l[g.boundary(f).edges[k]];
    faces.push_back(g.face_name(f) + " " + edge_word(c));
  }
  return Json{{"edges", edge_letters(l)}, {"evc", evc_string(evc(g, l))}, {"faces", faces}};
}

Json corner_labeling_json(const DodecGraph& g, const CornerLabeling& l) {
  Json faces = Json::array();
  for (int f = 0; f < kFaces; ++f) {
    Cycle c{};
    for (int k = 0; k < 5; ++k) c[k] = l[5 * f + k];
    faces.push_back(g.face_name(f) + " " + angle_word(c));
  }
  return Json{{"corners", std::vector<int>(l.begin(), l.end())},
              {"avc", avc_string(avc_of(g, l))},
              {"faces", faces}};
}

Json angle_case_json(const AngleCase& c) {
  Json avcs = Json::array();
  for (const auto& a : c.avcs) avcs.push_back(avc_string(a));
  return Json{{"index", c.index},
              {"combination", c.combination.name()},
              {"relations", c.relation_text},
              {"dimension", c.solution.dimension()},
              {"family", interval_json(c.family)},
              {"avcs", avcs}};
}

Json joint_json(const JointLabeling& l) {
  return Json{{"edges", std::vector<int>(l.edges.begin(), l.edges.end())},
              {"corners", std::vector<int>(l.corners.begin(), l.corners.end())}};
}

JointLabeling joint_from_json(const Json& j) {
  auto e = require<std::vector<int>>(j, "edges");
  auto c = require<std::vector<int>>(j, "corners");
  if (e.size() != kEdges || c.size() != kCorners) throw DomainError("labeling has the wrong size");
  JointLabeling l;
  for (int i = 0; i < kEdges; ++i) {
    if (e[i] < 0 || e[i] > 4) throw DomainError("edge label out of range");
    l.edges[i] = static_cast<Label>(e[i]);
  }
  for (int i = 0; i < kCorners; ++i) {
    if (c[i] < 0 || c[i] > 7) throw DomainError("angle label out of range");
    l.corners[i] = static_cast<Label>(c[i]);
  }
  return l;
}

Json class_json(const DodecGraph& g, const TilingClass& c) {
  Json dict = Json::array();
  for (const auto& [k, n] : c.dictionary)
    dict.push_back(Json{{"count", n}, {"edges", edge_type_string(k.first)}, {"angles", angle_type_string(k.second)}});
  Json faces = Json::array();
  for (int f = 0; f < kFaces; ++f)
    faces.push_back(g.face_name(f) + " " + schema_string(c.labeling.schema(g, f)));
  return Json{{"id", c.id},
              {"edge_combination", c.edge_combination},
              {"angle_combination", c.angle_combination},
              {"schema", schema_string(c.schema)},
              {"edge_word", edge_word(c.schema.edge)},
              {"angle_word", angle_word(c.schema.corner)},
              {"vertex_equations", c.vertex_equations},
              {"relations", c.relations},
              {"avc", avc_string(c.avc)},
              {"evc", evc_string(c.evc)},
              {"vertex_dictionary", dict},
              {"angle_dimension", c.angle_dimension},
              {"parameter_count", c.parameter_count},
              {"parameter_count_raw", c.parameter_count_raw},
              {"overdetermined", c.overdetermined},
              {"readings", c.readings},
              {"a5_reading", c.a5_reading},
              {"faces", faces},
              {"labeling", joint_json(c.labeling)}};
}

Json combine_json(const DodecGraph& g, const CombineResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(class_json(g, c));
  std::map<std::string, int> elim;
  for (const auto& e : r.eliminated)
    elim[fmt::format("{} {} x {}", e.stage, edge_combination_of(e.schema.edge),
                     combination_of(e.schema.corner).name())]++;
  Json survivors = Json::array();
  for (const auto& s : r.survivors)
    survivors.push_back(Json{{"edge_combination", s.edge_combination},
                             {"angle_combination", s.angle_combination},
                             {"schema", schema_string(s.schema)},
                             {"oracle", verdict_name(s.oracle.verdict)}});
  return Json{{"class_count", r.classes.size()},
              {"classes", classes},
              {"stats",
               {{"labeling_pairs", r.stats.pairs},
                {"alignments", r.stats.alignments},
                {"compatible", r.stats.compatible},
                {"pruned_apex", r.stats.pruned_apex},
                {"eliminated_oracle", r.stats.eliminated_oracle},
                {"inconclusive", r.stats.inconclusive},
                {"survivors", r.stats.survivors}}},
              {"eliminated", elim},
              {"survivors", survivors}};
}

std::string combine_markdown(const DodecGraph& g, const CombineResult& r) {
  std::string out = fmt::format("# Tiling classes\n\n{} classes.\n", r.classes.size());
  for (const auto& c : r.classes) {
    out += fmt::format("\n## {}\n\n", c.id);
    out += fmt::format("- edges {}, angles {}\n", c.edge_combination, c.angle_combination);
    out += fmt::format("- tile: `{}`\n", schema_string(c.schema));
    std::string eqs;
    for (const auto& e : c.vertex_equations) eqs += (eqs.empty() ? "" : "; ") + e;
    out += fmt::format("- vertices: {}\n", eqs);
    std::string rel;
    for (const auto& e : c.relations) rel += (rel.empty() ? "" : "; ") + e;
    out += fmt::format("- relations: {}\n", rel);
    out += fmt::format("- AVC {}, EVC {}\n", avc_string(c.avc), evc_string(c.evc));
    out += fmt::format("- vertex dictionary: {}\n", vertex_dictionary_string(c.dictionary));
    out += fmt::format("- free parameters: {}{}\n", c.parameter_count,
                       c.overdetermined ? fmt::format(" (raw count {})", c.parameter_count_raw) : "");
    std::string rd;
    for (const auto& x : c.readings) rd += (rd.empty() ? "" : ", ") + x;
    out += fmt::format("- edge readings: {}\n\n", rd);
    out += "| face | neighbours | edges | angles |\n|---|---|---|---|\n";
    for (int f = 0; f < kFaces; ++f) {
      std::string nb;
      for (int h : g.boundary(f).neighbors) nb += (nb.empty() ? "" : " ") + g.face_name(h);
      const TileSchema s = c.labeling.schema(g, f);
      out += fmt::format("| {} | {} | {} | {} |\n", g.face_name(f), nb, edge_word(s.edge), angle_word(s.corner));
    }
  }
  return out;
}

Json residuals_json(const Residuals& r) {
  return Json{{"vertex_angle_sum", r.vertex_angle_sum},
              {"edge_length", r.edge_length},
              {"corner_angle", r.corner_angle},
              {"face_area", r.face_area},
              {"placement", r.placement},
              {"total_area", r.total_area},
              {"total_angle", r.total_angle},
              {"max", r.max()},
              {"worst", r.worst}};
}

Json realization_json(const RealizedTiling& t) {
  Json verts = Json::array();
  for (const auto& v : t.vertices) verts.push_back({v.x(), v.y(), v.z()});
  Json faces = Json::array();
  for (const auto& f : t.faces) faces.push_back(std::vector<int>(f.begin(), f.end()));
  Json params = Json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  return Json{{"class", t.class_id},
              {"parameters", params},
              {"vertices", verts},
              {"faces", faces},
              {"edge_labels", std::vector<int>(t.edge_label.begin(), t.edge_label.end())},
              {"edge_values", std::vector<double>(t.edge_value.begin(), t.edge_value.end())},
              {"corner_values", std::vector<double>(t.corner_value.begin(), t.corner_value.end())},
              {"residuals", residuals_json(t.residuals)}};
}

RealizedTiling realization_from_json(const Json& j) {
  const DodecGraph& g = dodecahedron();
  RealizedTiling t;
  t.class_id = require<std::string>(j, "class");
  const Json params = require<Json>(j, "parameters");
  if (!params.is_object()) throw DomainError("parameters must be an object");
  for (const auto& [k, v] : params.items()) {
    if (!v.is_number()) throw DomainError("parameter is not a number");
    t.parameters[k] = v.get<double>();
  }
  auto verts = require<std::vector<std::vector<double>>>(j, "vertices");
  if (verts.size() != kVertices) throw DomainError("expected 20 vertices");
  for (int v = 0; v < kVertices; ++v) {
    if (verts[v].size() != 3) throw DomainError("vertex is not a 3-vector");
    t.vertices[v] = Vec3(verts[v][0], verts[v][1], verts[v][2]);
    if (!std::isfinite(t.vertices[v].norm()) || std::abs(t.vertices[v].norm() - 1) > 1e-12)
      throw DomainError(fmt::format("vertex {} is not a unit vector", v));
  }
  auto faces = require<std::vector<std::vector<int>>>(j, "faces");
  if (faces.size() != kFaces) throw DomainError("expected 12 faces");
  for (int f = 0; f < kFaces; ++f) {
    if (faces[f].size() != 5) throw DomainError("face is not a 5-cycle");
    for (int k = 0; k < 5; ++k) {
      if (faces[f][k] != g.boundary(f).vertices[k]) throw DomainError("face cycles do not match the graph");
      t.faces[f][k] = faces[f][k];
    }
  }
  auto el = require<std::vector<int>>(j, "edge_labels");
  auto ev = require<std::vector<double>>(j, "edge_values");
  auto cv = require<std::vector<double>>(j, "corner_values");
  if (el.size() != kEdges || ev.size() != kEdges || cv.size() != kCorners)
    throw DomainError("label arrays have the wrong size");
  for (int e = 0; e < kEdges; ++e) {
    if (el[e] < 0 || el[e] > 4) throw DomainError("edge label out of range");
    t.edge_label[e] = static_cast<Label>(el[e]);
    t.edge_value[e] = ev[e];
  }
  for (int c = 0; c < kCorners; ++c) t.corner_value[c] = cv[c];
  const Json r = require<Json>(j, "residuals");
  // null is how a non-finite residual was written
  auto residual = [&](const char* key) {
    if (r.is_object() && r.contains(key) && r.at(key).is_null())
      return std::numeric_limits<double>::infinity();
    return require<double>(r, key);
  };
  t.residuals.vertex_angle_sum = residual("vertex_angle_sum");
  t.residuals.edge_length = residual("edge_length");
  t.residuals.corner_angle = residual("corner_angle");
  t.residuals.face_area = residual("face_area");
  t.residuals.placement = residual("placement");
  t.residuals.total_area = residual("total_area");
  t.residuals.total_angle = residual("total_angle");
  t.residuals.worst = require<std::string>(r, "worst");
  return t;
}

Json isolated_json(const IsolatedReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) {
    Json verts = Json::array();
    for (const auto& v : s.pentagon.v) verts.push_back({v.x(), v.y(), v.z()});
    sols.push_back(Json{{"a", s.a},
                        {r.parameter, s.t},
                        {"b", s.b ? Json(*s.b) : Json(nullptr)},
                        {"residual", s.residual},
                        {"regular", s.regular},
                        {"angles", std::vector<double>(s.angles.begin(), s.angles.end())},
                        {"area_defect", s.area_defect},
                        {"angle_defect", s.angle_defect},
                        {"vertices", verts}});
  }
  return Json{{"class", r.class_id},
              {"parameter", r.parameter},
              {"range", {r.t_lo, r.t_hi}},
              {"closing_slot", r.closing_slot},
              {"seeds", r.seeds},
              {"converged", r.converged},
              {"rejected", r.rejected},
              {"solution_count", r.solutions.size()},
              {"solutions", sols},
              {"caveat", r.caveat}};
}

}  // namespace pentile
