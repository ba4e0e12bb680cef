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

#ifndef PENTILE_EDGE_CLASSIFIER_HPP_
#define PENTILE_EDGE_CLASSIFIER_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pentile/dodeca_graph.hpp"
#include "pentile/tile_schema.hpp"

namespace pentile {

// The seven ways to split 5 slots into length classes, named a5, a4b, a3b2,
// a3bc, a2b2c, a2bcd, abcde. Label 0 is the most frequent.
const std::vector<std::string>& edge_combination_names();
std::vector<int> combination_multiplicities(const std::string& name);  // throws on bad name

// Profiles for one combination, up to rotation, reflection and swapping
// labels of equal multiplicity. Each arrangement is the smallest such image.
struct EdgeProfileGroup {
  std::string combination;
  std::vector<Cycle> arrangements;
};
std::vector<EdgeProfileGroup> enumerate_edge_profiles();

// Label renamings allowed for a profile: permutations that only mix labels
// occurring equally often. Identity first.
std::vector<std::vector<Label>> equal_multiplicity_renamings(const Cycle& profile);

using EdgeLabeling = std::array<Label, kEdges>;

using EdgeType = std::array<Label, 3>;  // sorted
using Evc = std::map<EdgeType, int>;
Evc evc(const DodecGraph& g, const EdgeLabeling& l);
std::string evc_string(const Evc& e);  // "{8a³, 12a²b}"
std::string edge_type_string(const EdgeType& t);

// Local test around a tile whose five vertices have degree 3: with the
// profile on the central tile, every neighbor must contain the row
// (spoke, shared edge, spoke) as three consecutive profile edges.
struct Degree3Verdict {
  bool feasible = false;
  std::vector<std::string> trace;  // spoke assignment, or why none exists
};
Degree3Verdict degree3_arrangement_filter(const Cycle& profile);

struct EdgeSearchOptions {
  bool degree3_filter = true;
  bool fix_first_face = true;  // place the profile on P1 verbatim
};

struct EdgeSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t raw_solutions = 0;
  bool skipped_by_filter = false;
};

// Every labeling in which each face matches the profile, one representative
// per class (automorphisms x equal-multiplicity renamings), sorted.
std::vector<EdgeLabeling> enumerate_edge_labelings(const DodecGraph& g, const Cycle& profile,
                                                   const EdgeSearchOptions& opts = {},
                                                   EdgeSearchStats* stats = nullptr);

// Pools all arrangements of a combination.
std::vector<EdgeLabeling> enumerate_combination(const DodecGraph& g,
                                                const std::string& combination,
                                                const EdgeSearchOptions& opts = {});

// Class representative: lexicographic minimum over the symmetry group and the
// given renamings.
EdgeLabeling edge_representative(const EdgeLabeling& l,
                                 const std::vector<std::vector<Label>>& renamings);

// Every face matches the profile up to rotation and reflection.
bool faces_match_profile(const DodecGraph& g, const EdgeLabeling& l, const Cycle& profile);

// Faces ordered breadth-first from P1.
std::array<int, kFaces> bfs_face_order(const DodecGraph& g);

}  // namespace pentile

#endif  // PENTILE_EDGE_CLASSIFIER_HPP_
