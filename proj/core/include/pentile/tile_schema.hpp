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

#ifndef PENTILE_TILE_SCHEMA_HPP_
#define PENTILE_TILE_SCHEMA_HPP_

#include <array>
#include <string>
#include <vector>

#include "pentile/dodeca_graph.hpp"

namespace pentile {

using Cycle = std::array<Label, kSides>;

// A pentagon as 5 slots (edge k, corner k); corner k sits between edge k and
// edge k+1, matching FaceBoundary. Either half may be left all-zero when only
// edges or only angles matter.
struct TileSchema {
  Cycle edge{};
  Cycle corner{};
  auto operator<=>(const TileSchema&) const = default;
};

// Rotation by r: slot k takes old slot k+r.
TileSchema rotated(const TileSchema& s, int r);
// Reverse orientation: edges k -> -k, corners k -> -k-1 (mod 5).
TileSchema reflected(const TileSchema& s);

// All 10 dihedral images, rotations first, then reflected rotations.
std::array<TileSchema, 10> dihedral_images(const TileSchema& s);
// Distinct images only, sorted.
std::vector<TileSchema> distinct_images(const TileSchema& s);
bool dihedral_equal(const TileSchema& x, const TileSchema& y);

// Smallest image; with rename the labels are first-use normalized on each
// half (angles keep 0 fixed).
TileSchema dihedral_min(const TileSchema& s, bool rename = false);

// Read the schema of face f from global edge/corner labelings.
TileSchema face_schema(const DodecGraph& g, int face, std::span<const Label> edges,
                       std::span<const Label> corners);

// Sorted edge labels around corner k, sorted corner labels along edge k.
std::array<Label, 2> corner_edge_pair(const TileSchema& s, int k);
std::array<Label, 2> edge_corner_pair(const TileSchema& s, int k);

std::string edge_label_name(Label l);   // a, b, c, ...
std::string angle_label_name(Label l);  // α, β, γ, ...
std::string angle_label_ascii(Label l); // alpha, beta, ...
std::string edge_word(const Cycle& c);  // "aaabb"
std::string angle_word(const Cycle& c);
std::string schema_string(const TileSchema& s);  // "a:β a:α ..."

// Geometric rule on one pentagon. At apex corner i with edges E[i], E[i+1]
// the four predicates are
//   0: E[i] == E[i+1]      1: E[i-1] == E[i+2]
//   2: A[i-1] == A[i+1]    3: A[i-2] == A[i+2]
// evaluated by label identity. Three holding forces the fourth, so a schema
// where some apex has exactly three is geometrically impossible.
struct ApexCheck {
  bool pruned = false;
  int apex = -1;       // first offending apex
  int violated = -1;   // the predicate that fails there
  std::array<bool, 4> holds{};
};
ApexCheck apex_check(const TileSchema& s);
std::string describe(const ApexCheck& c, const TileSchema& s);

}  // namespace pentile

#endif  // PENTILE_TILE_SCHEMA_HPP_
