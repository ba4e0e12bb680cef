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

#ifndef PENTILE_DODECA_GRAPH_HPP_
#define PENTILE_DODECA_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pentile {

inline constexpr int kFaces = 12;
inline constexpr int kEdges = 30;
inline constexpr int kVertices = 20;
inline constexpr int kCorners = 60;
inline constexpr int kSides = 5;

using Label = std::uint8_t;
// Lexicographically comparable orbit representative.
using CanonicalKey = std::vector<Label>;

// Boundary of one face, listed counterclockwise as seen from outside the
// sphere. Edge k is shared with neighbors[k]; vertex k sits between edge k
// and edge k+1. Corner k of face f has the global index 5*f + k.
struct FaceBoundary {
  std::array<int, kSides> neighbors;
  std::array<int, kSides> edges;
  std::array<int, kSides> vertices;
};

// The combinatorial dodecahedron: P1 in the middle surrounded by P2..P6
// counterclockwise, P7..P11 in the second ring (P7 between P2 and P3, and so
// on), P12 opposite P1. Faces are 0-based internally and printed 1-based.
//
// Edges are numbered by their sorted face pair, vertices by their sorted face
// triple, so iteration order is also the canonical output order.
class DodecGraph {
 public:
  const FaceBoundary& boundary(int face) const { return faces_[face]; }
  std::array<int, 2> edge_faces(int edge) const { return edge_faces_[edge]; }
  std::array<int, 3> vertex_faces(int vertex) const { return vertex_faces_[vertex]; }
  // The three corners meeting at a vertex, ordered as vertex_faces().
  std::array<int, 3> vertex_corners(int vertex) const { return vertex_corners_[vertex]; }
  int corner_face(int corner) const { return corner / kSides; }
  int corner_vertex(int corner) const {
    return faces_[corner / kSides].vertices[corner % kSides];
  }

  // -1 when the faces are not adjacent / do not share a vertex.
  int edge_between(int f, int g) const;
  int vertex_among(int f, int g, int h) const;
  bool adjacent(int f, int g) const { return edge_between(f, g) >= 0; }

  std::string face_name(int face) const;
  std::string edge_name(int edge) const;
  std::string vertex_name(int vertex) const;

  // Versioned text dump, one line per face.
  std::string dump() const;

 private:
  friend DodecGraph build_dodecahedron();
  DodecGraph() = default;

  std::array<FaceBoundary, kFaces> faces_{};
  std::array<std::array<int, 2>, kEdges> edge_faces_{};
  std::array<std::array<int, 3>, kVertices> vertex_faces_{};
  std::array<std::array<int, 3>, kVertices> vertex_corners_{};
  std::array<std::array<int, kFaces>, kFaces> edge_index_{};
};

DodecGraph build_dodecahedron();

// Process-wide immutable instance.
const DodecGraph& dodecahedron();

struct Automorphism {
  std::array<int, kFaces> face{};
  std::array<int, kEdges> edge{};
  std::array<int, kVertices> vertex{};
  std::array<int, kCorners> corner{};
  bool orientation_preserving = true;

  Automorphism compose(const Automorphism& inner) const;  // this ∘ inner
  Automorphism inverse() const;
  bool operator==(const Automorphism&) const = default;
};

// Incidence-preserving maps, identity first. The full group has 120 elements;
// with rotations_only the 60 orientation-preserving ones are returned.
std::vector<Automorphism> automorphisms(const DodecGraph& g, bool rotations_only = false);

// Cached full group of dodecahedron().
const std::vector<Automorphism>& symmetry_group();
const std::vector<Automorphism>& rotation_group();

// Whether abstract labels may be renamed when comparing labelings.
//   kFixed           labels are compared literally
//   kPermutable      any renaming (equivalently: first-use normalization)
//   kPermutableFixZero  renaming that keeps label 0 in place (label 0 = α)
enum class LabelPolicy { kFixed, kPermutable, kPermutableFixZero };

enum class Domain { kEdges, kCorners };

struct LabelingSegment {
  Domain domain;
  std::span<const Label> labels;
  LabelPolicy policy;
};

// Lexicographic minimum over the orbit of the concatenated segments under
// the chosen group and the label renamings allowed by each segment's policy.
CanonicalKey canonicalize(std::span<const LabelingSegment> segments,
                          const std::vector<Automorphism>& group);

CanonicalKey canonicalize_edges(std::span<const Label> edge_labels, LabelPolicy policy,
                                const std::vector<Automorphism>& group = symmetry_group());
CanonicalKey canonicalize_corners(std::span<const Label> corner_labels, LabelPolicy policy,
                                  const std::vector<Automorphism>& group = symmetry_group());

// Number of distinct images of the labeling under the group, labels fixed.
int orbit_size(Domain domain, std::span<const Label> labels,
               const std::vector<Automorphism>& group = symmetry_group());

// Relabel by order of first appearance. With keep_zero, label 0 stays 0 and
// the others are numbered from 1.
std::vector<Label> normalize_first_use(std::span<const Label> labels, bool keep_zero);

// Apply an automorphism: result[σ(x)] = labels[x].
std::vector<Label> permute_labeling(const Automorphism& a, Domain domain,
                                    std::span<const Label> labels);

struct CountingReport {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  bool edge_face_identity = false;    // 2e = 5f
  bool vertex_face_identity = false;  // 2v = 3f + 4
  bool degree_excess_identity = false;  // v3 - 20 = 2 v4 + 5 v5 + 8 v6 + ...
  bool euler = false;                   // v - e + f = 2
  bool handshake = false;               // 2e = Σ i v_i
  bool twelve_faces = false;            // f == 12
  bool has_tile_with_four_degree3 = false;  // only evaluated for the built graph
  bool all_hold() const {
    return edge_face_identity && vertex_face_identity && degree_excess_identity && euler &&
           handshake;
  }
  std::vector<std::string> failures() const;
};

// degree_histogram[i] = number of vertices of degree i.
CountingReport check_counting_identities(int f, int e, int v,
                                         std::span<const int> degree_histogram);
// Same, plus the tile-with-four-degree-3-vertices check on the actual graph.
CountingReport check_counting_identities(const DodecGraph& g);

// The fixed-point-free involution among the automorphisms that sends every
// face to its antipode (P1 <-> P12); empty if none exists.
std::vector<int> antipodal_faces(const DodecGraph& g);

}  // namespace pentile

#endif  // PENTILE_DODECA_GRAPH_HPP_
