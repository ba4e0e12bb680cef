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

#include "pentile/edge_classifier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "pentile/parallel.hpp"

namespace pentile {
namespace {

constexpr Label kUnset = 0xff;

int mod5(int k) { return ((k % kSides) + kSides) % kSides; }

std::array<int, 8> label_counts(const Cycle& c) {
  std::array<int, 8> n{};
  for (Label l : c) ++n[l];
  return n;
}

Cycle apply(const std::vector<Label>& rename, const Cycle& c) {
  Cycle out;
  for (int k = 0; k < kSides; ++k) out[k] = rename[c[k]];
  return out;
}

std::vector<Cycle> edge_images(const Cycle& profile) {
  TileSchema s;
  s.edge = profile;
  std::vector<Cycle> out;
  for (const auto& img : distinct_images(s)) out.push_back(img.edge);
  return out;
}

bool row_in_profile(const Cycle& p, Label x, Label m, Label y) {
  for (int j = 0; j < kSides; ++j) {
    if (p[j] != m) continue;
    const Label l = p[mod5(j - 1)];
    const Label r = p[mod5(j + 1)];
    if ((l == x && r == y) || (l == y && r == x)) return true;
  }
  return false;
}

struct Search {
  const DodecGraph& g;
  std::vector<Cycle> images;
  std::array<int, kFaces> order;
  std::vector<std::vector<Label>> renamings;
  EdgeLabeling cur;
  std::set<EdgeLabeling> found;
  std::uint64_t nodes = 0;
  std::uint64_t raw = 0;

  bool place(int face, const Cycle& img, std::vector<int>& touched) {
    const auto& b = g.boundary(face);
    for (int k = 0; k < kSides; ++k) {
      const int e = b.edges[k];
      if (cur[e] == kUnset) {
        cur[e] = img[k];
        touched.push_back(e);
      } else if (cur[e] != img[k]) {
        return false;
      }
    }
    return true;
  }

  void undo(std::vector<int>& touched) {
    for (int e : touched) cur[e] = kUnset;
    touched.clear();
  }

  void run(int depth) {
    ++nodes;
    if (depth == kFaces) {
      ++raw;
      found.insert(edge_representative(cur, renamings));
      return;
    }
    const int face = order[depth];
    std::vector<int> touched;
    for (const auto& img : images) {
      if (place(face, img, touched)) run(depth + 1);
      undo(touched);
    }
  }
};

}  // namespace

const std::vector<std::string>& edge_combination_names() {
  static const std::vector<std::string> names = {"a5",    "a4b",   "a3b2", "a3bc",
                                                 "a2b2c", "a2bcd", "abcde"};
  return names;
}

std::vector<int> combination_multiplicities(const std::string& name) {
  std::vector<int> m;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char ch = name[i];
    if (ch < 'a' || ch > 'e' || ch - 'a' != static_cast<int>(m.size())) {
      throw std::invalid_argument("bad combination name: " + name);
    }
    int count = 1;
    if (i + 1 < name.size() && name[i + 1] >= '1' && name[i + 1] <= '5') {
      count = name[++i] - '0';
    }
    m.push_back(count);
  }
  if (std::accumulate(m.begin(), m.end(), 0) != kSides ||
      !std::is_sorted(m.begin(), m.end(), std::greater<>())) {
    throw std::invalid_argument("bad combination name: " + name);
  }
  return m;
}

std::vector<std::vector<Label>> equal_multiplicity_renamings(const Cycle& profile) {
  const auto counts = label_counts(profile);
  int used = 0;
  while (used < 8 && counts[used] > 0) ++used;
  std::vector<Label> perm(used);
  std::iota(perm.begin(), perm.end(), Label{0});
  std::vector<std::vector<Label>> out;
  do {
    bool ok = true;
    for (int l = 0; l < used && ok; ++l) ok = counts[perm[l]] == counts[l];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<EdgeProfileGroup> enumerate_edge_profiles() {
  std::vector<EdgeProfileGroup> out;
  for (const auto& name : edge_combination_names()) {
    const auto mult = combination_multiplicities(name);
    Cycle base{};
    int pos = 0;
    for (std::size_t l = 0; l < mult.size(); ++l) {
      for (int j = 0; j < mult[l]; ++j) base[pos++] = static_cast<Label>(l);
    }
    const auto renamings = equal_multiplicity_renamings(base);
    std::set<Cycle> reps;
    Cycle seq = base;
    std::sort(seq.begin(), seq.end());
    do {
      Cycle best = seq;
      for (const auto& img : edge_images(seq)) {
        for (const auto& r : renamings) best = std::min(best, apply(r, img));
      }
      reps.insert(best);
    } while (std::next_permutation(seq.begin(), seq.end()));
    out.push_back({name, {reps.begin(), reps.end()}});
  }
  return out;
}

Evc evc(const DodecGraph& g, const EdgeLabeling& l) {
  Evc out;
  for (int v = 0; v < kVertices; ++v) {
    const auto f = g.vertex_faces(v);
    EdgeType t{l[g.edge_between(f[0], f[1])], l[g.edge_between(f[0], f[2])],
               l[g.edge_between(f[1], f[2])]};
    std::sort(t.begin(), t.end());
    ++out[t];
  }
  return out;
}

std::string edge_type_string(const EdgeType& t) {
  static const char* kSup[] = {"", "", "²", "³"};
  std::string out;
  for (int i = 0; i < 3;) {
    int j = i;
    while (j < 3 && t[j] == t[i]) ++j;
    out += edge_label_name(t[i]) + kSup[j - i];
    i = j;
  }
  return out;
}

std::string evc_string(const Evc& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& [t, n] : e) {
    if (!first) out += ", ";
    first = false;
    out += fmt::format("{}{}", n, edge_type_string(t));
  }
  return out + "}";
}

Degree3Verdict degree3_arrangement_filter(const Cycle& p) {
  Degree3Verdict v;
  std::vector<Label> labels(p.begin(), p.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int n = static_cast<int>(labels.size());

  // spoke[k] is the edge between neighbors k and k+1 of the central tile.
  std::array<Label, kSides> spoke{};
  int total = 1;
  for (int k = 0; k < kSides; ++k) total *= n;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int k = 0; k < kSides; ++k) {
      spoke[k] = labels[c % n];
      c /= n;
    }
    bool ok = true;
    for (int k = 0; k < kSides && ok; ++k) {
      ok = row_in_profile(p, spoke[mod5(k - 1)], p[k], spoke[k]);
    }
    if (ok) {
      v.feasible = true;
      std::string s = "spokes";
      for (Label l : spoke) s += " " + edge_label_name(l);
      v.trace.push_back(s);
      return v;
    }
  }
  for (int k = 0; k < kSides; ++k) {
    std::string s = fmt::format("neighbor {} (shared edge {}): rows", k + 1, edge_label_name(p[k]));
    int allowed = 0;
    for (Label x : labels) {
      for (Label y : labels) {
        if (row_in_profile(p, x, p[k], y)) {
          s += " " + edge_label_name(x) + edge_label_name(p[k]) + edge_label_name(y);
          ++allowed;
        }
      }
    }
    if (!allowed) s += " none";
    v.trace.push_back(s);
  }
  v.trace.push_back(fmt::format("no spoke assignment fits all five rows ({} tried)", total));
  return v;
}

EdgeLabeling edge_representative(const EdgeLabeling& l,
                                 const std::vector<std::vector<Label>>& renamings) {
  static const std::vector<std::vector<Label>> kIdentity{{}};
  const auto& names = renamings.empty() ? kIdentity : renamings;
  EdgeLabeling best = l;
  EdgeLabeling img;
  for (const auto& a : symmetry_group()) {
    for (const auto& r : names) {
      for (int e = 0; e < kEdges; ++e) img[a.edge[e]] = r.empty() ? l[e] : r[l[e]];
      if (img < best) best = img;
    }
  }
  return best;
}

bool faces_match_profile(const DodecGraph& g, const EdgeLabeling& l, const Cycle& profile) {
  TileSchema want;
  want.edge = profile;
  for (int f = 0; f < kFaces; ++f) {
    if (!dihedral_equal(face_schema(g, f, l, {}), want)) return false;
  }
  return true;
}

std::array<int, kFaces> bfs_face_order(const DodecGraph& g) {
  std::array<int, kFaces> order{};
  std::array<bool, kFaces> seen{};
  std::deque<int> q{0};
  seen[0] = true;
  int n = 0;
  while (!q.empty()) {
    const int f = q.front();
    q.pop_front();
    order[n++] = f;
    for (int nb : g.boundary(f).neighbors) {
      if (!seen[nb]) {
        seen[nb] = true;
        q.push_back(nb);
      }
    }
  }
  return order;
}

std::vector<EdgeLabeling> enumerate_edge_labelings(const DodecGraph& g, const Cycle& profile,
                                                   const EdgeSearchOptions& opts,
                                                   EdgeSearchStats* stats) {
  EdgeSearchStats local;
  if (opts.degree3_filter && !degree3_arrangement_filter(profile).feasible) {
    local.skipped_by_filter = true;
    if (stats) *stats = local;
    return {};
  }
  const auto images = edge_images(profile);
  const auto order = bfs_face_order(g);
  const auto renamings = equal_multiplicity_renamings(profile);

  // Top-level split: choice for the first face, then for the second.
  std::vector<std::pair<Cycle, Cycle>> branches;
  const std::vector<Cycle> first =
      opts.fix_first_face ? std::vector<Cycle>{profile} : images;
  for (const auto& f0 : first) {
    for (const auto& f1 : images) branches.emplace_back(f0, f1);
  }
  std::vector<Search> parts;
  parts.reserve(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    parts.push_back(Search{g, images, order, renamings, {}, {}, 0, 0});
  }
  parallel_for(branches.size(), [&](std::size_t i) {
    Search& s = parts[i];
    s.cur.fill(kUnset);
    std::vector<int> t0, t1;
    s.nodes += 2;
    if (s.place(order[0], branches[i].first, t0) && s.place(order[1], branches[i].second, t1)) {
      s.run(2);
    }
  });

  std::set<EdgeLabeling> all;
  for (const auto& s : parts) {
    all.insert(s.found.begin(), s.found.end());
    local.nodes += s.nodes;
    local.raw_solutions += s.raw;
  }
  if (stats) *stats = local;
  return {all.begin(), all.end()};
}

std::vector<EdgeLabeling> enumerate_combination(const DodecGraph& g,
                                                const std::string& combination,
                                                const EdgeSearchOptions& opts) {
  combination_multiplicities(combination);  // validates
  std::set<EdgeLabeling> all;
  for (const auto& group : enumerate_edge_profiles()) {
    if (group.combination != combination) continue;
    for (const auto& p : group.arrangements) {
      const auto found = enumerate_edge_labelings(g, p, opts);
      all.insert(found.begin(), found.end());
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace pentile
