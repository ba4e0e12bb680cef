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

#ifndef PENTILE_JOINT_CLASSIFIER_HPP_
#define PENTILE_JOINT_CLASSIFIER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pentile/angle_classifier.hpp"
#include "pentile/dodeca_graph.hpp"
#include "pentile/edge_classifier.hpp"
#include "pentile/linear_system.hpp"
#include "pentile/tile_schema.hpp"

namespace pentile {

struct JointLabeling {
  EdgeLabeling edges{};
  CornerLabeling corners{};
  TileSchema schema(const DodecGraph& g, int face = 0) const;
  // Every face carries the schema of P1 up to rotation and reflection.
  bool congruent(const DodecGraph& g) const;
  CanonicalKey key() const;
  bool operator==(const JointLabeling&) const = default;
};

std::string edge_combination_of(const Cycle& edge_profile);  // "a4b"

enum class OracleVerdict { kNotApplicable, kEliminate, kKeep, kInconclusive };
std::string verdict_name(OracleVerdict v);

struct OracleReport {
  OracleVerdict verdict = OracleVerdict::kNotApplicable;
  std::string oracle;    // "flanked-equilateral" | "equiangular-a4b"
  std::string evidence;
  std::vector<double> roots;
};
OracleReport geometric_oracles(const TileSchema& s);

// Vertex dictionary entry: edge type at a vertex paired with its angle type.
using VertexKind = std::pair<EdgeType, AngleType>;
std::map<VertexKind, int> vertex_dictionary(const DodecGraph& g, const JointLabeling& l);
std::string vertex_dictionary_string(const std::map<VertexKind, int>& d);

struct TilingClass {
  std::string id;  // T1..T5
  TileSchema schema;
  std::string edge_combination;
  std::string angle_combination;
  JointLabeling labeling;
  Evc evc;
  Avc avc;
  std::map<VertexKind, int> dictionary;
  std::vector<std::string> vertex_equations;  // one per vertex type
  std::vector<std::string> relations;         // solved, lowest labels free
  AffineSet solution;
  int angle_dimension = 0;
  int parameter_count_raw = 0;
  int parameter_count = 0;
  bool overdetermined = false;  // raw count below zero
  std::vector<std::string> readings;  // edge combinations under which it was reached
  bool a5_reading = false;
  CanonicalKey key;
};

struct Elimination {
  JointLabeling labeling;
  TileSchema schema;
  std::string stage;   // "apex" | "oracle"
  std::string reason;
};

struct CombineOptions {
  bool apex_rule = true;
  bool oracles = true;
  bool apex_late = false;  // prune after the cross product instead of during it
};

struct CombineStats {
  std::uint64_t pairs = 0;
  std::uint64_t alignments = 0;
  std::uint64_t compatible = 0;  // distinct joint labelings up to symmetry
  int pruned_apex = 0;
  int eliminated_oracle = 0;
  int inconclusive = 0;
  int survivors = 0;
};

struct Survivor {
  JointLabeling labeling;
  TileSchema schema;
  std::string edge_combination;
  std::string angle_combination;
  CanonicalKey key;
  OracleReport oracle;
};

struct CombineResult {
  std::vector<TilingClass> classes;
  std::vector<Survivor> survivors;
  std::vector<Elimination> eliminated;
  CombineStats stats;
};

// g maps onto s by a symmetry followed by label merges (α stays α).
// angle_injective receives whether the angle labels were kept distinct.
bool specializes(const JointLabeling& general, const JointLabeling& special,
                 bool* angle_injective = nullptr);

CombineResult combine(const DodecGraph& g, const std::vector<EdgeLabeling>& edges,
                      const std::vector<CornerLabeling>& corners, const CombineOptions& opts = {});

// Runs both enumerators and combines.
CombineResult classify(const CombineOptions& opts = {});

}  // namespace pentile

#endif  // PENTILE_JOINT_CLASSIFIER_HPP_
