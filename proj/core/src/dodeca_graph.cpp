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

#include "pentile/dodeca_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace pentile {
namespace {

// Counterclockwise neighbor cycles, 1-based as in the usual drawing.
constexpr int kNeighborCycles[kFaces][kSides] = {
    {2, 3, 4, 5, 6},      // P1
    {1, 6, 11, 7, 3},     // P2
    {1, 2, 7, 8, 4},      // P3
    {1, 3, 8, 9, 5},      // P4
    {1, 4, 9, 10, 6},     // P5
    {1, 5, 10, 11, 2},    // P6
    {3, 2, 11, 12, 8},    // P7
    {4, 3, 7, 12, 9},     // P8
    {5, 4, 8, 12, 10},    // P9
    {6, 5, 9, 12, 11},    // P10
    {2, 6, 10, 12, 7},    // P11
    {7, 11, 10, 9, 8},    // P12
};

}  // namespace

DodecGraph build_dodecahedron() {
  DodecGraph g;
  for (auto& row : g.edge_index_) row.fill(-1);

  std::set<std::array<int, 2>> edge_set;
  std::set<std::array<int, 3>> vertex_set;
  for (int f = 0; f < kFaces; ++f) {
    for (int k = 0; k < kSides; ++k) {
      const int n = kNeighborCycles[f][k] - 1;
      const int m = kNeighborCycles[f][(k + 1) % kSides] - 1;
      edge_set.insert({std::min(f, n), std::max(f, n)});
      std::array<int, 3> tri{f, n, m};
      std::sort(tri.begin(), tri.end());
      vertex_set.insert(tri);
    }
  }
  if (edge_set.size() != kEdges || vertex_set.size() != kVertices) {
    throw std::logic_error("dodecahedron table is inconsistent");
  }

  int e = 0;
  for (const auto& pair : edge_set) {
    g.edge_faces_[e] = pair;
    g.edge_index_[pair[0]][pair[1]] = e;
    g.edge_index_[pair[1]][pair[0]] = e;
    ++e;
  }
  std::map<std::array<int, 3>, int> vertex_index;
  int v = 0;
  for (const auto& tri : vertex_set) {
    g.vertex_faces_[v] = tri;
    vertex_index[tri] = v++;
  }

  for (int f = 0; f < kFaces; ++f) {
    FaceBoundary& b = g.faces_[f];
    for (int k = 0; k < kSides; ++k) {
      const int n = kNeighborCycles[f][k] - 1;
      const int m = kNeighborCycles[f][(k + 1) % kSides] - 1;
      b.neighbors[k] = n;
      b.edges[k] = g.edge_index_[f][n];
      std::array<int, 3> tri{f, n, m};
      std::sort(tri.begin(), tri.end());
      b.vertices[k] = vertex_index.at(tri);
    }
  }
  for (int vtx = 0; vtx < kVertices; ++vtx) {
    for (int i = 0; i < 3; ++i) {
      const int f = g.vertex_faces_[vtx][i];
      const auto& verts = g.faces_[f].vertices;
      const auto it = std::find(verts.begin(), verts.end(), vtx);
      g.vertex_corners_[vtx][i] = f * kSides + static_cast<int>(it - verts.begin());
    }
  }
  return g;
}

const DodecGraph& dodecahedron() {
  static const DodecGraph g = build_dodecahedron();
  return g;
}

int DodecGraph::edge_between(int f, int g) const {
  if (f < 0 || g < 0 || f >= kFaces || g >= kFaces) return -1;
  return edge_index_[f][g];
}

int DodecGraph::vertex_among(int f, int g, int h) const {
  for (int v : faces_[f].vertices) {
    const auto& tri = vertex_faces_[v];
    const bool has_g = std::find(tri.begin(), tri.end(), g) != tri.end();
    const bool has_h = std::find(tri.begin(), tri.end(), h) != tri.end();
    if (has_g && has_h) return v;
  }
  return -1;
}

std::string DodecGraph::face_name(int face) const { return fmt::format("P{}", face + 1); }

std::string DodecGraph::edge_name(int edge) const {
  return fmt::format("E{},{}", edge_faces_[edge][0] + 1, edge_faces_[edge][1] + 1);
}

std::string DodecGraph::vertex_name(int vertex) const {
  const auto& t = vertex_faces_[vertex];
  return fmt::format("V{},{},{}", t[0] + 1, t[1] + 1, t[2] + 1);
}

std::string DodecGraph::dump() const {
  std::string out = "# pentile dodecahedron graph v1\n";
  for (int f = 0; f < kFaces; ++f) {
    out += fmt::format("F{}:", f + 1);
    for (int k = 0; k < kSides; ++k) out += " " + edge_name(faces_[f].edges[k]);
    out += " |";
    for (int k = 0; k < kSides; ++k) out += " " + vertex_name(faces_[f].vertices[k]);
    out += " (cyclic)\n";
  }
  return out;
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  Automorphism r;
  for (int i = 0; i < kFaces; ++i) r.face[i] = face[inner.face[i]];
  for (int i = 0; i < kEdges; ++i) r.edge[i] = edge[inner.edge[i]];
  for (int i = 0; i < kVertices; ++i) r.vertex[i] = vertex[inner.vertex[i]];
  for (int i = 0; i < kCorners; ++i) r.corner[i] = corner[inner.corner[i]];
  r.orientation_preserving = orientation_preserving == inner.orientation_preserving;
  return r;
}

Automorphism Automorphism::inverse() const {
  Automorphism r;
  for (int i = 0; i < kFaces; ++i) r.face[face[i]] = i;
  for (int i = 0; i < kEdges; ++i) r.edge[edge[i]] = i;
  for (int i = 0; i < kVertices; ++i) r.vertex[vertex[i]] = i;
  for (int i = 0; i < kCorners; ++i) r.corner[corner[i]] = i;
  r.orientation_preserving = orientation_preserving;
  return r;
}

namespace {

int index_in(const std::array<int, kSides>& cycle, int value) {
  const auto it = std::find(cycle.begin(), cycle.end(), value);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

// Extend a choice for P1 (target face, rotation, reflection) across the face
// adjacency. Returns false if the choice does not induce an automorphism.
bool extend(const DodecGraph& g, int target, int rotation, bool reflect, Automorphism& out) {
  std::array<int, kFaces> face;
  face.fill(-1);
  // shift[f]: neighbor k of f maps to neighbor (shift + dir*k) of face[f].
  std::array<int, kFaces> shift{};
  const int dir = reflect ? -1 : 1;

  face[0] = target;
  shift[0] = rotation;
  std::deque<int> queue{0};
  std::array<bool, kFaces> done{};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    if (done[f]) continue;
    done[f] = true;
    const auto& src = g.boundary(f).neighbors;
    const auto& dst = g.boundary(face[f]).neighbors;
    for (int k = 0; k < kSides; ++k) {
      const int n = src[k];
      const int image = dst[((shift[f] + dir * k) % kSides + kSides) % kSides];
      if (face[n] >= 0 && face[n] != image) return false;
      if (face[n] >= 0) continue;
      face[n] = image;
      // Anchor n's cycle on f and on the next common neighbor.
      const auto& ncyc = g.boundary(n).neighbors;
      const auto& icyc = g.boundary(image).neighbors;
      const int pos_f = index_in(ncyc, f);
      const int pos_fi = index_in(icyc, face[f]);
      if (pos_f < 0 || pos_fi < 0) return false;
      shift[n] = ((pos_fi - dir * pos_f) % kSides + kSides) % kSides;
      queue.push_back(n);
    }
  }
  // Verify every cycle maps onto the image cycle with the chosen direction.
  std::array<bool, kFaces> hit{};
  for (int f = 0; f < kFaces; ++f) {
    if (face[f] < 0 || hit[face[f]]) return false;
    hit[face[f]] = true;
  }
  for (int f = 0; f < kFaces; ++f) {
    const auto& src = g.boundary(f).neighbors;
    const auto& dst = g.boundary(face[f]).neighbors;
    for (int k = 0; k < kSides; ++k) {
      if (face[src[k]] != dst[((shift[f] + dir * k) % kSides + kSides) % kSides]) return false;
    }
  }

  out.face = face;
  out.orientation_preserving = !reflect;
  for (int e = 0; e < kEdges; ++e) {
    const auto ef = g.edge_faces(e);
    out.edge[e] = g.edge_between(face[ef[0]], face[ef[1]]);
    if (out.edge[e] < 0) return false;
  }
  for (int v = 0; v < kVertices; ++v) {
    const auto vf = g.vertex_faces(v);
    out.vertex[v] = g.vertex_among(face[vf[0]], face[vf[1]], face[vf[2]]);
    if (out.vertex[v] < 0) return false;
  }
  for (int c = 0; c < kCorners; ++c) {
    const int f = g.corner_face(c);
    const int img = face[f];
    const int k = index_in(g.boundary(img).vertices, out.vertex[g.corner_vertex(c)]);
    if (k < 0) return false;
    out.corner[c] = img * kSides + k;
  }
  return true;
}

}  // namespace

std::vector<Automorphism> automorphisms(const DodecGraph& g, bool rotations_only) {
  std::vector<Automorphism> group;
  // Identity first: P1 -> P1, rotation 0, no reflection.
  for (bool reflect : {false, true}) {
    if (reflect && rotations_only) continue;
    for (int target = 0; target < kFaces; ++target) {
      for (int rotation = 0; rotation < kSides; ++rotation) {
        Automorphism a;
        if (extend(g, target, rotation, reflect, a)) group.push_back(a);
      }
    }
  }
  return group;
}

const std::vector<Automorphism>& symmetry_group() {
  static const std::vector<Automorphism> group = automorphisms(dodecahedron());
  return group;
}

const std::vector<Automorphism>& rotation_group() {
  static const std::vector<Automorphism> group = automorphisms(dodecahedron(), true);
  return group;
}

std::vector<Label> normalize_first_use(std::span<const Label> labels, bool keep_zero) {
  std::array<int, 256> map;
  map.fill(-1);
  int next = 0;
  if (keep_zero) {
    map[0] = 0;
    next = 1;
  }
  std::vector<Label> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int& m = map[labels[i]];
    if (m < 0) m = next++;
    out[i] = static_cast<Label>(m);
  }
  return out;
}

std::vector<Label> permute_labeling(const Automorphism& a, Domain domain,
                                    std::span<const Label> labels) {
  std::vector<Label> out(labels.size());
  if (domain == Domain::kEdges) {
    for (int e = 0; e < kEdges; ++e) out[a.edge[e]] = labels[e];
  } else {
    for (int c = 0; c < kCorners; ++c) out[a.corner[c]] = labels[c];
  }
  return out;
}

CanonicalKey canonicalize(std::span<const LabelingSegment> segments,
                          const std::vector<Automorphism>& group) {
  CanonicalKey best;
  CanonicalKey candidate;
  for (const auto& a : group) {
    candidate.clear();
    for (const auto& seg : segments) {
      auto image = permute_labeling(a, seg.domain, seg.labels);
      if (seg.policy != LabelPolicy::kFixed) {
        image = normalize_first_use(image, seg.policy == LabelPolicy::kPermutableFixZero);
      }
      candidate.insert(candidate.end(), image.begin(), image.end());
    }
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

CanonicalKey canonicalize_edges(std::span<const Label> edge_labels, LabelPolicy policy,
                                const std::vector<Automorphism>& group) {
  const LabelingSegment seg{Domain::kEdges, edge_labels, policy};
  return canonicalize(std::span(&seg, 1), group);
}

CanonicalKey canonicalize_corners(std::span<const Label> corner_labels, LabelPolicy policy,
                                  const std::vector<Automorphism>& group) {
  const LabelingSegment seg{Domain::kCorners, corner_labels, policy};
  return canonicalize(std::span(&seg, 1), group);
}

int orbit_size(Domain domain, std::span<const Label> labels,
               const std::vector<Automorphism>& group) {
  std::set<std::vector<Label>> images;
  for (const auto& a : group) images.insert(permute_labeling(a, domain, labels));
  return static_cast<int>(images.size());
}

std::vector<std::string> CountingReport::failures() const {
  std::vector<std::string> out;
  if (!edge_face_identity) out.emplace_back("2e = 5f");
  if (!vertex_face_identity) out.emplace_back("2v = 3f + 4");
  if (!degree_excess_identity) out.emplace_back("v3 - 20 = 2v4 + 5v5 + 8v6 + ...");
  if (!euler) out.emplace_back("v - e + f = 2");
  if (!handshake) out.emplace_back("2e = sum i*v_i");
  if (!twelve_faces) out.emplace_back("f = 12");
  return out;
}

CountingReport check_counting_identities(int f, int e, int v,
                                         std::span<const int> degree_histogram) {
  CountingReport r;
  r.faces = f;
  r.edges = e;
  r.vertices = v;
  r.edge_face_identity = 2 * e == 5 * f;
  r.vertex_face_identity = 2 * v == 3 * f + 4;
  r.euler = v - e + f == 2;
  r.twelve_faces = f == 12;

  long long total = 0;
  long long ends = 0;
  long long excess = 0;  // Σ_{i>3} (3i - 10) v_i
  for (std::size_t i = 0; i < degree_histogram.size(); ++i) {
    const long long vi = degree_histogram[i];
    total += vi;
    ends += static_cast<long long>(i) * vi;
    if (i > 3) excess += (3 * static_cast<long long>(i) - 10) * vi;
  }
  const long long v3 = degree_histogram.size() > 3 ? degree_histogram[3] : 0;
  r.handshake = total == v && ends == 2LL * e;
  r.degree_excess_identity = v3 - 20 == excess;
  return r;
}

CountingReport check_counting_identities(const DodecGraph& g) {
  // degree of a vertex = number of face boundaries through it
  std::array<int, kVertices> degree{};
  for (int f = 0; f < kFaces; ++f)
    for (int v : g.boundary(f).vertices) ++degree[v];
  std::vector<int> hist(1 + *std::max_element(degree.begin(), degree.end()), 0);
  for (int d : degree) ++hist[d];
  CountingReport r = check_counting_identities(kFaces, kEdges, kVertices, hist);
  for (int f = 0; f < kFaces && !r.has_tile_with_four_degree3; ++f) {
    int deg3 = 0;
    for (int v : g.boundary(f).vertices) deg3 += degree[v] == 3 ? 1 : 0;
    r.has_tile_with_four_degree3 = deg3 >= 4;
  }
  return r;
}

std::vector<int> antipodal_faces(const DodecGraph& g) {
  const auto group = automorphisms(g);
  for (const auto& a : group) {
    bool ok = true;
    for (int f = 0; f < kFaces && ok; ++f) {
      ok = a.face[f] != f && a.face[a.face[f]] == f;
    }
    if (!ok) continue;
    // Central: commutes with every element.
    for (const auto& b : group) {
      if (a.compose(b).face != b.compose(a).face) {
        ok = false;
        break;
      }
    }
    if (ok) return {a.face.begin(), a.face.end()};
  }
  return {};
}

}  // namespace pentile
