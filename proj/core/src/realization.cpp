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

#include "pentile/realization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include <Eigen/SVD>
#include <fmt/format.h>

namespace pentile {

namespace {

struct Matched {
  TileSchema labels;  // slot labels of the given pentagon
  std::map<Label, double> edge_val, angle_val;
  double spread = std::numeric_limits<double>::infinity();
};

// Which dihedral image of the class schema the pentagon carries.
Matched match_schema(const TileSchema& cls, const SphericalPentagon& p) {
  const auto e = p.edges();
  const auto an = p.angles();
  Matched best;
  for (const TileSchema& d : dihedral_images(cls)) {
    Matched m;
    m.labels = d;
    m.spread = 0;
    std::map<Label, std::pair<double, double>> er, ar;  // min, max
    auto widen = [](auto& r, Label l, double v) {
      auto it = r.find(l);
      if (it == r.end()) {
        r[l] = {v, v};
      } else {
        it->second.first = std::min(it->second.first, v);
        it->second.second = std::max(it->second.second, v);
      }
    };
    widen(ar, 0, kAlphaRad);
    for (int k = 0; k < 5; ++k) {
      widen(er, d.edge[k], e[k]);
      widen(ar, d.corner[k], an[k]);
    }
    for (const auto& [l, r] : er) {
      m.spread = std::max(m.spread, r.second - r.first);
      m.edge_val[l] = 0.5 * (r.first + r.second);
    }
    for (const auto& [l, r] : ar) {
      m.spread = std::max(m.spread, r.second - r.first);
      m.angle_val[l] = 0.5 * (r.first + r.second);
    }
    m.angle_val[0] = kAlphaRad;
    if (m.spread < best.spread) best = m;
  }
  return best;
}

Eigen::Matrix3d frame(const Vec3& p1, const Vec3& p2) {
  Vec3 u1 = p1.normalized();
  Vec3 u2 = (p2 - p1.dot(p2) * u1).normalized();
  Eigen::Matrix3d f;
  f.col(0) = u1;
  f.col(1) = u2;
  f.col(2) = u1.cross(u2);
  return f;
}

void bump(Residuals& r, double& slot, double v, const std::string& where) {
  if (v > slot) slot = v;
  if (v >= r.max() && v > 0) r.worst = where;
}

}  // namespace

double Residuals::max() const {
  return std::max({vertex_angle_sum, edge_length, corner_angle, face_area, placement, total_area,
                   total_angle});
}

bool passes(const Residuals& r, double tol) { return r.max() < tol; }

RealizedTiling realize_tiling(const TilingClass& cls, const SphericalPentagon& pentagon, double tol) {
  const DodecGraph& g = dodecahedron();
  const double area = pentagon.area();
  if (std::abs(area - kTileArea) > tol)
    throw DomainError(fmt::format("pentagon area {:.12f} is not pi/3", area));
  const Matched m = match_schema(cls.schema, pentagon);
  if (m.spread > tol)
    throw DomainError(fmt::format("pentagon does not fit the {} schema (spread {:.3e})", cls.id, m.spread));

  // Ten labelled templates: rotations of the tile and of its mirror image.
  std::vector<std::pair<TileSchema, std::array<Vec3, 5>>> templates;
  const Eigen::Matrix3d mirror = Eigen::Vector3d(1, -1, 1).asDiagonal();
  std::array<Vec3, 5> q{};
  for (int k = 0; k < 5; ++k) q[k] = mirror * pentagon.v[(10 - k - 1) % 5];
  for (int r = 0; r < 5; ++r) {
    std::array<Vec3, 5> w{}, wq{};
    for (int k = 0; k < 5; ++k) {
      w[k] = pentagon.v[(k + r) % 5];
      wq[k] = q[(k + r) % 5];
    }
    templates.emplace_back(rotated(m.labels, r), w);
    templates.emplace_back(rotated(reflected(m.labels), r), wq);
  }
  auto template_for = [&](int f) -> const std::array<Vec3, 5>& {
    const TileSchema s = cls.labeling.schema(g, f);
    for (const auto& [ts, pts] : templates)
      if (ts == s) return pts;
    throw DomainError(fmt::format("face {} has no matching tile pose", g.face_name(f)));
  };

  RealizedTiling t;
  t.class_id = cls.id;
  for (const auto& [l, v] : m.edge_val) t.parameters[edge_label_name(l)] = v;
  for (const auto& [l, v] : m.angle_val) t.parameters[angle_label_ascii(l)] = v;
  for (int e = 0; e < kEdges; ++e) {
    t.edge_label[e] = cls.labeling.edges[e];
    t.edge_value[e] = m.edge_val.at(cls.labeling.edges[e]);
  }
  for (int c = 0; c < kCorners; ++c) t.corner_value[c] = m.angle_val.at(cls.labeling.corners[c]);
  for (int f = 0; f < kFaces; ++f) t.faces[f] = g.boundary(f).vertices;

  std::array<std::array<Vec3, 5>, kFaces> placed{};
  std::array<bool, kFaces> done{};
  std::array<bool, kVertices> have{};
  placed[0] = template_for(0);
  done[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int k = 0; k < 5; ++k) {
      const int h = g.boundary(f).neighbors[k];
      if (done[h]) continue;
      // shared edge k of f joins its vertices k-1 and k
      const int u = g.boundary(f).vertices[(k + 4) % 5], w = g.boundary(f).vertices[k];
      const Vec3 pu = placed[f][(k + 4) % 5], pw = placed[f][k];
      const auto& tpl = template_for(h);
      const auto& hv = g.boundary(h).vertices;
      const int iu = static_cast<int>(std::find(hv.begin(), hv.end(), u) - hv.begin());
      const int iw = static_cast<int>(std::find(hv.begin(), hv.end(), w) - hv.begin());
      const Eigen::Matrix3d rot = frame(pu, pw) * frame(tpl[iu], tpl[iw]).transpose();
      for (int j = 0; j < 5; ++j) placed[h][j] = (rot * tpl[j]).normalized();
      done[h] = true;
      queue.push_back(h);
    }
  }
  double placement = 0;
  std::string worst_place;
  for (int f = 0; f < kFaces; ++f)
    for (int k = 0; k < 5; ++k) {
      const int v = t.faces[f][k];
      if (!have[v]) {
        t.vertices[v] = placed[f][k];
        have[v] = true;
      } else {
        const double d = (t.vertices[v] - placed[f][k]).norm();
        if (d > placement) {
          placement = d;
          worst_place = fmt::format("placement of {} from {}", g.vertex_name(v), g.face_name(f));
        }
      }
    }
  t.residuals = verify_realization(t);
  if (placement > t.residuals.placement) {
    t.residuals.placement = placement;
    if (placement >= t.residuals.max()) t.residuals.worst = worst_place;
  }
  if (!passes(t.residuals, tol))
    throw DomainError(fmt::format("tiling does not close: residual {:.3e} at {}", t.residuals.max(),
                                  t.residuals.worst));
  return t;
}

Residuals verify_realization(const RealizedTiling& t) {
  const DodecGraph& g = dodecahedron();
  constexpr double kBad = std::numeric_limits<double>::infinity();
  Residuals r;
  std::array<double, kVertices> sums{};
  double total_angle = 0, total_area = 0;
  for (int f = 0; f < kFaces; ++f) {
    std::array<Vec3, 5> p{};
    for (int k = 0; k < 5; ++k) p[k] = t.vertices[t.faces[f][k]];
    double angle_sum = 0;
    for (int k = 0; k < 5; ++k) {
      double a = kBad;
      try {
        a = interior_angle(p[k], p[(k + 1) % 5], p[(k + 4) % 5]);
      } catch (const DomainError&) {
      }
      sums[t.faces[f][k]] += a;
      angle_sum += a;
      bump(r, r.corner_angle, std::abs(a - t.corner_value[5 * f + k]),
           fmt::format("corner {} of {}", k + 1, g.face_name(f)));
    }
    total_angle += angle_sum;
    const double area = angle_sum - 3 * kPi;
    total_area += area;
    bump(r, r.face_area, std::abs(area - kTileArea), fmt::format("area of {}", g.face_name(f)));
  }
  for (int v = 0; v < kVertices; ++v)
    bump(r, r.vertex_angle_sum, std::abs(sums[v] - kTwoPi), fmt::format("angle sum at {}", g.vertex_name(v)));
  for (int e = 0; e < kEdges; ++e) {
    const auto ff = g.edge_faces(e);
    // endpoints: the two vertices shared by both faces
    std::vector<int> ends;
    for (int v : g.boundary(ff[0]).vertices) {
      const auto& o = g.boundary(ff[1]).vertices;
      if (std::find(o.begin(), o.end(), v) != o.end()) ends.push_back(v);
    }
    const double len = arc_length(t.vertices[ends[0]], t.vertices[ends[1]]);
    bump(r, r.edge_length, std::abs(len - t.edge_value[e]), fmt::format("length of {}", g.edge_name(e)));
  }
  r.total_area = std::abs(total_area - 4 * kPi);
  r.total_angle = std::abs(total_angle - 40 * kPi);
  return r;
}

double congruence_residual(const RealizedTiling& x, const RealizedTiling& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : symmetry_group()) {
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    for (int v = 0; v < kVertices; ++v) h += y.vertices[a.vertex[v]] * x.vertices[v].transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix3d rot = svd.matrixU() * svd.matrixV().transpose();
    double worst = 0;
    for (int v = 0; v < kVertices; ++v)
      worst = std::max(worst, (rot * x.vertices[v] - y.vertices[a.vertex[v]]).norm());
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace pentile
