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

#ifndef PENTILE_ANGLE_CLASSIFIER_HPP_
#define PENTILE_ANGLE_CLASSIFIER_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pentile/dodeca_graph.hpp"
#include "pentile/linear_system.hpp"
#include "pentile/tile_schema.hpp"

namespace pentile {

// Angle values are kept in units of π. Label 0 is α and, when used, is pinned
// to 2/3. Every tile sums to 10/3 and every vertex to 2.
inline const Rat kAlpha{2, 3};
inline const Rat kTileSum{10, 3};
inline const Rat kVertexSum{2};

using AngleType = std::array<Label, 3>;  // sorted
using Avc = std::map<AngleType, int>;

std::string angle_type_string(const AngleType& t);  // "αβγ", "β²γ"
std::string avc_string(const Avc& a);               // "{8α³, 12αβγ}"

// Tile multiplicity of each label; slot_count[0] is the number of α slots.
struct AngleCombination {
  std::vector<int> slot_count;
  int labels() const { return static_cast<int>(slot_count.size()); }
  std::string name() const;  // "α²βγδ"
  auto operator<=>(const AngleCombination&) const = default;
};
AngleCombination combination_of(const Cycle& corner_profile);

// The vertex equations of a type set together with the tile sum.
LinearSystem angle_equations(const AngleCombination& c, const std::vector<AngleType>& types,
                             const std::vector<std::pair<RatVec, Rat>>& extra = {});

struct AngleFeasibility {
  bool feasible = false;
  std::string reason;                // empty when feasible
  std::optional<AffineSet> solution;
};
// Consistent, meets (0, 2)^n, and no two labels (nor a non-α label and 2/3)
// coincide on the whole solution set.
AngleFeasibility check_angle_system(const AngleCombination& c,
                                    const std::vector<AngleType>& types,
                                    const std::vector<std::pair<RatVec, Rat>>& extra = {});

// All 3-multisets over the combination's labels, in lexicographic order.
std::vector<AngleType> all_types(const AngleCombination& c);

// Types t such that asserted + {t} stays feasible.
std::vector<AngleType> vertex_type_candidates(const AngleCombination& c,
                                              const std::vector<AngleType>& asserted,
                                              const std::vector<std::pair<RatVec, Rat>>& extra = {});

// Relations in readable form, one string per label not chosen as a free
// parameter, e.g. "γ = 2π - 2β". Free parameters are the lowest labels.
// Free parameters are the lowest-numbered labels.
std::optional<AffineSet> solve_low_free(const LinearSystem& s);
std::vector<std::string> relation_strings(const AffineSet& s);
// Constraint form per type, e.g. "2β + γ = 2π".
std::string type_equation_string(const AngleType& t);

// Nonnegative integer vertex counts giving 12 * slot_count[x] occurrences of
// each label x; with every_type_used, n_t >= 1 for every listed type.
std::vector<std::vector<int>> counting_solutions(const AngleCombination& c,
                                                 const std::vector<AngleType>& types,
                                                 bool every_type_used = true);

struct AngleCase {
  int index = 0;  // 1-based, ordered by decreasing α count
  AngleCombination combination;
  LinearSystem relations;  // vertex types + tile sum, canonical labels
  AffineSet solution;
  std::vector<std::string> relation_text;
  std::optional<OpenInterval> family;  // for one-parameter cases, in units of π
  std::vector<Avc> avcs;               // sorted
};
std::vector<AngleCase> solve_angle_numerics();

// Labeled profiles: one per dihedral class of 5-sequences realizing the
// combination with fixed label names. With up_to_renaming, one per class
// under renamings of equally frequent non-α labels as well.
std::vector<Cycle> labeled_arrangements(const AngleCombination& c, bool up_to_renaming = false);

using CornerLabeling = std::array<Label, kCorners>;

AngleType vertex_angle_type(const DodecGraph& g, const CornerLabeling& l, int vertex);
Avc avc_of(const DodecGraph& g, const CornerLabeling& l);

struct CornerSearchOptions {
  bool fix_first_face = true;
  bool pair_lookahead = true;  // two corners at a vertex must admit a third
};
struct CornerSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t raw_solutions = 0;
};

// All corner labelings where every face reads the profile, every vertex type
// set stays exactly feasible; one representative per class (automorphisms x
// renamings of non-α labels with equal multiplicity), sorted.
std::vector<CornerLabeling> enumerate_corner_labelings(
    const DodecGraph& g, const Cycle& profile, const CornerSearchOptions& opts = {},
    CornerSearchStats* stats = nullptr);

// Pools every labeled arrangement of the combination.
std::vector<CornerLabeling> enumerate_angle_combination(const DodecGraph& g,
                                                        const AngleCombination& c,
                                                        const CornerSearchOptions& opts = {});

CornerLabeling corner_representative(const CornerLabeling& l,
                                     const std::vector<std::vector<Label>>& renamings);
// Renamings fixing α that preserve tile multiplicity.
std::vector<std::vector<Label>> angle_renamings(const AngleCombination& c);

bool corners_match_profile(const DodecGraph& g, const CornerLabeling& l, const Cycle& profile);
bool corner_labeling_feasible(const DodecGraph& g, const CornerLabeling& l,
                              const AngleCombination& c);

// Swap labels x and y on the four corners at the ends of an edge (the two
// corners of each adjacent face). Returns nullopt unless those corners hold
// exactly x and y in each face.
std::optional<CornerLabeling> exchange_at_edge(const DodecGraph& g, const CornerLabeling& l,
                                               int edge, Label x, Label y);

// Exchange moves between members of a labeling set. A move (i, j) means
// some valid exchange turns member i into member j; j = -1 means the result
// is a valid labeling missing from the set.
struct ExchangeGraph {
  std::vector<std::pair<int, int>> moves;
  int escaped = 0;
  std::vector<std::vector<int>> families;  // connected components, sorted
};
// With no pairs given, every pair of distinct non-α labels is tried.
ExchangeGraph exchange_graph(const DodecGraph& g, const std::vector<CornerLabeling>& set,
                             const AngleCombination& c,
                             std::vector<std::pair<Label, Label>> pairs = {});

}  // namespace pentile

#endif  // PENTILE_ANGLE_CLASSIFIER_HPP_
