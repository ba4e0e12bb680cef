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

#include "pentile/net_export.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

namespace pentile {

namespace {

Vec3 slerp(const Vec3& p, const Vec3& q, double s) {
  const double th = arc_length(p, q);
  if (th < 1e-15) return p;
  return ((std::sin((1 - s) * th) * p + std::sin(s * th) * q) / std::sin(th)).normalized();
}

std::array<int, 2> edge_ends(const DodecGraph& g, int e) {
  const auto ff = g.edge_faces(e);
  std::array<int, 2> out{-1, -1};
  int n = 0;
  for (int v : g.boundary(ff[0]).vertices) {
    const auto& o = g.boundary(ff[1]).vertices;
    if (std::find(o.begin(), o.end(), v) != o.end()) out[n++] = v;
  }
  return out;
}

const char* stroke_class(Label l) {
  static const char* names[] = {"edge-a", "edge-b", "edge-c", "edge-d", "edge-e"};
  return names[std::min<int>(l, 4)];
}

}  // namespace

std::string export_svg_net(const RealizedTiling& t, int punched) {
  if (punched < 0 || punched >= kFaces) throw DomainError(fmt::format("no face {} to punch", punched + 1));
  if (!passes(verify_realization(t))) throw DomainError("realization does not verify; refusing to draw it");
  const DodecGraph& g = dodecahedron();
  constexpr int kSeg = 16;

  Vec3 n = Vec3::Zero();
  for (int v : t.faces[punched]) n += t.vertices[v];
  n.normalize();
  Vec3 ref = std::abs(n.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  const Vec3 e1 = (ref - ref.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);
  auto project = [&](const Vec3& p) {
    const double d = 1 - p.dot(n);
    return std::array<double, 2>{p.dot(e1) / d, p.dot(e2) / d};
  };

  // sampled arcs, in edge order
  std::vector<std::vector<std::array<double, 2>>> arcs(kEdges);
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
  for (int e = 0; e < kEdges; ++e) {
    const auto ends = edge_ends(g, e);
    for (int s = 0; s <= kSeg; ++s) {
      auto p = project(slerp(t.vertices[ends[0]], t.vertices[ends[1]], static_cast<double>(s) / kSeg));
      lo_x = std::min(lo_x, p[0]);
      hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]);
      hi_y = std::max(hi_y, p[1]);
      arcs[e].push_back(p);
    }
  }
  constexpr double kSize = 600, kMargin = 20;
  const double scale = (kSize - 2 * kMargin) / std::max(hi_x - lo_x, hi_y - lo_y);
  auto px = [&](const std::array<double, 2>& p) {
    return fmt::format("{:.3f},{:.3f}", kMargin + (p[0] - lo_x) * scale, kSize - kMargin - (p[1] - lo_y) * scale);
  };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", kSize);
  out += "<style>.face{fill:#f4f4f8;stroke:none}.edge-a{stroke:#000;stroke-width:1;fill:none}"
         ".edge-b{stroke:#000;stroke-width:3.5;fill:none}"
         ".edge-c{stroke:#000;stroke-width:1.5;stroke-dasharray:2,3;fill:none}"
         ".edge-d{stroke:#555;stroke-width:1;stroke-dasharray:6,3;fill:none}"
         ".edge-e{stroke:#555;stroke-width:1;stroke-dasharray:6,2,2,2;fill:none}"
         "text{font:11px sans-serif;text-anchor:middle}</style>\n";
  out += fmt::format("<!-- {} net, punched {} -->\n", t.class_id, g.face_name(punched));
  for (int f = 0; f < kFaces; ++f) {
    if (f == punched) continue;
    std::string d;
    const auto& vs = t.faces[f];
    for (int k = 0; k < 5; ++k) {
      const Vec3 p = t.vertices[vs[(k + 4) % 5]], q = t.vertices[vs[k]];
      for (int s = 0; s < kSeg; ++s) {
        d += (d.empty() ? "M" : " L") + px(project(slerp(p, q, static_cast<double>(s) / kSeg)));
      }
    }
    out += fmt::format("<path class=\"face\" d=\"{} Z\"/>\n", d);
    Vec3 c = Vec3::Zero();
    for (int v : vs) c += t.vertices[v];
    const std::string at = px(project(c.normalized()));
    const auto comma = at.find(',');
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", at.substr(0, comma), at.substr(comma + 1),
                       g.face_name(f));
  }
  for (int e = 0; e < kEdges; ++e) {
    std::string pts;
    for (const auto& p : arcs[e]) pts += (pts.empty() ? "" : " ") + px(p);
    out += fmt::format("<polyline class=\"{}\" points=\"{}\"/>\n", stroke_class(t.edge_label[e]), pts);
  }
  out += "</svg>\n";
  return out;
}

std::string export_obj(const RealizedTiling& t, int segments) {
  if (segments < 1) throw DomainError("need at least one segment per edge");
  const DodecGraph& g = dodecahedron();
  std::string out = fmt::format("# pentile tiling {}\n", t.class_id);
  for (const auto& v : t.vertices) out += fmt::format("v {:.17g} {:.17g} {:.17g}\n", v.x(), v.y(), v.z());
  int next = kVertices + 1;
  std::string lines;
  for (int e = 0; e < kEdges; ++e) {
    const auto ends = edge_ends(g, e);
    std::string l = fmt::format("l {}", ends[0] + 1);
    for (int s = 1; s < segments; ++s) {
      const Vec3 p = slerp(t.vertices[ends[0]], t.vertices[ends[1]], static_cast<double>(s) / segments);
      out += fmt::format("v {:.17g} {:.17g} {:.17g}\n", p.x(), p.y(), p.z());
      l += fmt::format(" {}", next++);
    }
    lines += l + fmt::format(" {}\n", ends[1] + 1);
  }
  out += lines;
  for (const auto& f : t.faces)
    out += fmt::format("f {} {} {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1, f[4] + 1);
  return out;
}

}  // namespace pentile
