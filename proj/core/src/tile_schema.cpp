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

#include "pentile/tile_schema.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace pentile {
namespace {

int mod5(int k) { return ((k % kSides) + kSides) % kSides; }

Cycle first_use(const Cycle& c, bool keep_zero) {
  const auto v = normalize_first_use(c, keep_zero);
  Cycle out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

TileSchema rotated(const TileSchema& s, int r) {
  TileSchema out;
  for (int k = 0; k < kSides; ++k) {
    out.edge[k] = s.edge[mod5(k + r)];
    out.corner[k] = s.corner[mod5(k + r)];
  }
  return out;
}

TileSchema reflected(const TileSchema& s) {
  TileSchema out;
  for (int k = 0; k < kSides; ++k) {
    out.edge[k] = s.edge[mod5(-k)];
    out.corner[k] = s.corner[mod5(-k - 1)];
  }
  return out;
}

std::array<TileSchema, 10> dihedral_images(const TileSchema& s) {
  std::array<TileSchema, 10> out;
  const TileSchema m = reflected(s);
  for (int r = 0; r < kSides; ++r) {
    out[r] = rotated(s, r);
    out[kSides + r] = rotated(m, r);
  }
  return out;
}

std::vector<TileSchema> distinct_images(const TileSchema& s) {
  const auto all = dihedral_images(s);
  std::vector<TileSchema> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool dihedral_equal(const TileSchema& x, const TileSchema& y) {
  for (const auto& img : dihedral_images(x)) {
    if (img == y) return true;
  }
  return false;
}

TileSchema dihedral_min(const TileSchema& s, bool rename) {
  TileSchema best;
  bool first = true;
  for (auto img : dihedral_images(s)) {
    if (rename) {
      img.edge = first_use(img.edge, false);
      img.corner = first_use(img.corner, true);
    }
    if (first || img < best) best = img;
    first = false;
  }
  return best;
}

TileSchema face_schema(const DodecGraph& g, int face, std::span<const Label> edges,
                       std::span<const Label> corners) {
  TileSchema s;
  const auto& b = g.boundary(face);
  for (int k = 0; k < kSides; ++k) {
    if (!edges.empty()) s.edge[k] = edges[b.edges[k]];
    if (!corners.empty()) s.corner[k] = corners[face * kSides + k];
  }
  return s;
}

std::array<Label, 2> corner_edge_pair(const TileSchema& s, int k) {
  const Label x = s.edge[mod5(k)];
  const Label y = s.edge[mod5(k + 1)];
  return {std::min(x, y), std::max(x, y)};
}

std::array<Label, 2> edge_corner_pair(const TileSchema& s, int k) {
  const Label x = s.corner[mod5(k - 1)];
  const Label y = s.corner[mod5(k)];
  return {std::min(x, y), std::max(x, y)};
}

std::string edge_label_name(Label l) { return std::string(1, static_cast<char>('a' + l)); }

std::string angle_label_name(Label l) {
  static const char* kNames[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ"};
  return l < 8 ? kNames[l] : fmt::format("θ{}", l);
}

std::string angle_label_ascii(Label l) {
  static const char* kNames[] = {"alpha", "beta", "gamma", "delta",
                                 "epsilon", "zeta", "eta", "theta"};
  return l < 8 ? kNames[l] : fmt::format("theta{}", l);
}

std::string edge_word(const Cycle& c) {
  std::string out;
  for (Label l : c) out += edge_label_name(l);
  return out;
}

std::string angle_word(const Cycle& c) {
  std::string out;
  for (Label l : c) out += angle_label_name(l);
  return out;
}

std::string schema_string(const TileSchema& s) {
  std::string out;
  for (int k = 0; k < kSides; ++k) {
    if (k) out += ' ';
    out += edge_label_name(s.edge[k]) + ":" + angle_label_name(s.corner[k]);
  }
  return out;
}

ApexCheck apex_check(const TileSchema& s) {
  const auto& E = s.edge;
  const auto& A = s.corner;
  for (int i = 0; i < kSides; ++i) {
    std::array<bool, 4> h{
        E[mod5(i)] == E[mod5(i + 1)],
        E[mod5(i - 1)] == E[mod5(i + 2)],
        A[mod5(i - 1)] == A[mod5(i + 1)],
        A[mod5(i - 2)] == A[mod5(i + 2)],
    };
    const int count = static_cast<int>(std::count(h.begin(), h.end(), true));
    if (count == 3) {
      ApexCheck c;
      c.pruned = true;
      c.apex = i;
      c.holds = h;
      c.violated = static_cast<int>(std::find(h.begin(), h.end(), false) - h.begin());
      return c;
    }
  }
  return {};
}

std::string describe(const ApexCheck& c, const TileSchema& s) {
  if (!c.pruned) return "allowed";
  static const char* kWhat[] = {"apex edges equal", "far edges equal",
                                "adjacent angles equal", "far angles equal"};
  return fmt::format("apex {} ({}): three equalities hold but not '{}'", c.apex,
                     angle_label_name(s.corner[c.apex]), kWhat[c.violated]);
}

}  // namespace pentile
