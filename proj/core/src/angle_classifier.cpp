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

#include "pentile/angle_classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

#include "pentile/edge_classifier.hpp"
#include "pentile/parallel.hpp"

namespace pentile {
namespace {

constexpr Label kUnset = 0xff;

const char* superscript(int n) {
  static const char* kSup[] = {"", "", "²", "³", "⁴", "⁵", "⁶"};
  return n < 7 ? kSup[n] : "";
}

std::string pi_multiple(const Rat& r) {
  if (r == Rat(0)) return "0";
  const auto p = r.numerator();
  const auto q = r.denominator();
  std::string num = p == 1 ? "π" : p == -1 ? "-π" : fmt::format("{}π", p);
  return q == 1 ? num : fmt::format("{}/{}", num, q);
}

std::string coef_label(const Rat& r, Label l) {
  const std::string name = angle_label_name(l);
  if (r == Rat(1)) return name;
  if (r == Rat(-1)) return "-" + name;
  if (r.denominator() == 1) return fmt::format("{}{}", r.numerator(), name);
  return fmt::format("({}){}", rat_string(r), name);
}

}  // namespace

// Solve with columns reversed so that free parameters are the lowest labels.
std::optional<AffineSet> solve_low_free(const LinearSystem& s) {
  const int n = s.vars();
  LinearSystem rev(n);
  for (int r = 0; r < s.equations(); ++r) {
    RatVec row(s.rows()[r].rbegin(), s.rows()[r].rend());
    rev.add(std::move(row), s.rhs()[r]);
  }
  auto sol = solve(rev);
  if (!sol) return sol;
  AffineSet out;
  out.base.assign(sol->base.rbegin(), sol->base.rend());
  for (const auto& d : sol->dirs) out.dirs.emplace_back(d.rbegin(), d.rend());
  for (int f : sol->free_vars) out.free_vars.push_back(n - 1 - f);
  // Keep parameters in increasing label order.
  std::vector<int> idx(out.dirs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return out.free_vars[a] < out.free_vars[b]; });
  AffineSet sorted;
  sorted.base = out.base;
  for (int i : idx) {
    sorted.dirs.push_back(out.dirs[i]);
    sorted.free_vars.push_back(out.free_vars[i]);
  }
  return sorted;
}

namespace {

AngleType sorted_type(Label x, Label y, Label z) {
  AngleType t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

AngleType rename_type(const AngleType& t, const std::vector<Label>& r) {
  return sorted_type(r[t[0]], r[t[1]], r[t[2]]);
}

Avc rename_avc(const Avc& a, const std::vector<Label>& r) {
  Avc out;
  for (const auto& [t, n] : a) out[rename_type(t, r)] += n;
  return out;
}

}  // namespace

std::string angle_type_string(const AngleType& t) {
  std::string out;
  for (int i = 0; i < 3;) {
    int j = i;
    while (j < 3 && t[j] == t[i]) ++j;
    out += angle_label_name(t[i]) + superscript(j - i);
    i = j;
  }
  return out;
}

std::string avc_string(const Avc& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [t, n] : a) {
    if (!first) out += ", ";
    first = false;
    out += fmt::format("{}{}", n == 1 ? std::string() : std::to_string(n), angle_type_string(t));
  }
  return out + "}";
}

std::string AngleCombination::name() const {
  std::string out;
  for (int l = 0; l < labels(); ++l) {
    if (slot_count[l] > 0) out += angle_label_name(static_cast<Label>(l)) + superscript(slot_count[l]);
  }
  return out;
}

AngleCombination combination_of(const Cycle& p) {
  AngleCombination c;
  const int top = *std::max_element(p.begin(), p.end());
  c.slot_count.assign(top + 1, 0);
  for (Label l : p) ++c.slot_count[l];
  return c;
}

LinearSystem angle_equations(const AngleCombination& c, const std::vector<AngleType>& types,
                             const std::vector<std::pair<RatVec, Rat>>& extra) {
  const int n = c.labels();
  LinearSystem s(n);
  RatVec pin(n, Rat(0));
  pin[0] = 1;
  s.add(pin, kAlpha);
  RatVec tile(n, Rat(0));
  for (int l = 0; l < n; ++l) tile[l] = c.slot_count[l];
  s.add(tile, kTileSum);
  for (const auto& t : types) {
    RatVec row(n, Rat(0));
    for (Label l : t) row[l] += 1;
    s.add(row, kVertexSum);
  }
  for (const auto& [row, rhs] : extra) s.add(row, rhs);
  return s;
}

AngleFeasibility check_angle_system(const AngleCombination& c,
                                    const std::vector<AngleType>& types,
                                    const std::vector<std::pair<RatVec, Rat>>& extra) {
  AngleFeasibility out;
  auto sol = solve(angle_equations(c, types, extra));
  if (!sol) {
    out.reason = "inconsistent";
    return out;
  }
  const int n = c.labels();
  for (int i = 0; i < n; ++i) {
    if (i > 0 && c.slot_count[i] == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (c.slot_count[j] == 0) continue;
      if (sol->identically_equal(i, j)) {
        out.reason = fmt::format("forces {} = {}", angle_label_name(static_cast<Label>(i)),
                                 angle_label_name(static_cast<Label>(j)));
        return out;
      }
    }
  }
  if (!meets_open_box(*sol, Rat(0), Rat(2))) {
    out.reason = "no angles in (0, 2π)";
    return out;
  }
  out.feasible = true;
  out.solution = std::move(sol);
  return out;
}

std::vector<AngleType> all_types(const AngleCombination& c) {
  std::vector<Label> present;
  for (int l = 0; l < c.labels(); ++l) {
    if (c.slot_count[l] > 0) present.push_back(static_cast<Label>(l));
  }
  std::vector<AngleType> out;
  const int n = static_cast<int>(present.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) out.push_back({present[i], present[j], present[k]});
    }
  }
  return out;
}

std::vector<AngleType> vertex_type_candidates(const AngleCombination& c,
                                              const std::vector<AngleType>& asserted,
                                              const std::vector<std::pair<RatVec, Rat>>& extra) {
  std::vector<AngleType> out;
  for (const auto& t : all_types(c)) {
    auto set = asserted;
    if (std::find(set.begin(), set.end(), t) == set.end()) set.push_back(t);
    if (check_angle_system(c, set, extra).feasible) out.push_back(t);
  }
  return out;
}

std::vector<std::string> relation_strings(const AffineSet& s) {
  std::vector<std::string> out;
  const int n = static_cast<int>(s.base.size());
  for (int i = 0; i < n; ++i) {
    if (std::find(s.free_vars.begin(), s.free_vars.end(), i) != s.free_vars.end()) continue;
    std::string rhs;
    const RatVec e = s.expression(i);
    if (e[0] != 0) rhs = pi_multiple(e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) {
      if (e[k] == Rat(0)) continue;
      const Rat mag = e[k] < Rat(0) ? -e[k] : e[k];
      const std::string term = coef_label(mag, static_cast<Label>(s.free_vars[k - 1]));
      if (rhs.empty()) {
        rhs = e[k] < Rat(0) ? "-" + term : term;
      } else {
        rhs += (e[k] < Rat(0) ? " - " : " + ") + term;
      }
    }
    if (rhs.empty()) rhs = "0";
    out.push_back(angle_label_name(static_cast<Label>(i)) + " = " + rhs);
  }
  return out;
}

std::string type_equation_string(const AngleType& t) {
  std::string out;
  for (int i = 0; i < 3;) {
    int j = i;
    while (j < 3 && t[j] == t[i]) ++j;
    if (!out.empty()) out += " + ";
    out += coef_label(Rat(j - i), t[i]);
    i = j;
  }
  return out + " = 2π";
}

std::vector<std::vector<int>> counting_solutions(const AngleCombination& c,
                                                 const std::vector<AngleType>& types,
                                                 bool every_type_used) {
  const int n = c.labels();
  std::vector<int> need(n);
  for (int l = 0; l < n; ++l) need[l] = 12 * c.slot_count[l];
  std::vector<std::array<int, 8>> mult(types.size());
  for (std::size_t t = 0; t < types.size(); ++t) {
    mult[t].fill(0);
    for (Label l : types[t]) ++mult[t][l];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(types.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == types.size()) {
      if (std::all_of(need.begin(), need.end(), [](int x) { return x == 0; })) out.push_back(cur);
      return;
    }
    int cap = 1 << 20;
    for (int l = 0; l < n; ++l) {
      if (mult[t][l]) cap = std::min(cap, need[l] / mult[t][l]);
    }
    for (int k = every_type_used ? 1 : 0; k <= cap; ++k) {
      for (int l = 0; l < n; ++l) need[l] -= k * mult[t][l];
      cur[t] = k;
      rec(t + 1);
      for (int l = 0; l < n; ++l) need[l] += k * mult[t][l];
    }
    cur[t] = 0;
  };
  rec(0);
  return out;
}

std::vector<std::vector<Label>> angle_renamings(const AngleCombination& c) {
  const int n = c.labels();
  std::vector<Label> perm(n);
  std::iota(perm.begin(), perm.end(), Label{0});
  std::vector<std::vector<Label>> out;
  do {
    bool ok = perm[0] == 0;
    for (int l = 0; l < n && ok; ++l) ok = c.slot_count[perm[l]] == c.slot_count[l];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AngleCase> solve_angle_numerics() {
  std::vector<AngleCase> cases;

  for (int alpha = kSides; alpha >= 0; --alpha) {
    // Partitions of the remaining slots into label multiplicities, largest first.
    std::vector<std::vector<int>> parts;
    std::function<void(int, int, std::vector<int>&)> part = [&](int left, int maxp,
                                                                std::vector<int>& acc) {
      if (left == 0) {
        parts.push_back(acc);
        return;
      }
      for (int p = std::min(left, maxp); p >= 1; --p) {
        acc.push_back(p);
        part(left - p, p, acc);
        acc.pop_back();
      }
    };
    std::vector<int> acc;
    part(kSides - alpha, kSides, acc);

    for (const auto& pt : parts) {
      AngleCombination comb;
      comb.slot_count.push_back(alpha);
      comb.slot_count.insert(comb.slot_count.end(), pt.begin(), pt.end());
      const auto types = all_types(comb);

      // A type set is closed when it holds every type implied by its own
      // relations. Walk the feasible closed sets; any admissible support
      // lies inside one of them.
      auto closure = [&](const AffineSet& sol) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < types.size(); ++i) {
          RatVec sum(sol.dimension() + 1, Rat(0));
          for (Label l : types[i]) {
            const RatVec e = sol.expression(l);
            for (std::size_t k = 0; k < e.size(); ++k) sum[k] += e[k];
          }
          bool identical = sum[0] == kVertexSum;
          for (std::size_t k = 1; k < sum.size() && identical; ++k) identical = sum[k] == 0;
          if (identical) m |= 1ULL << i;
        }
        return m;
      };
      auto subset = [&](std::uint64_t m) {
        std::vector<AngleType> ts;
        for (std::size_t i = 0; i < types.size(); ++i) {
          if (m >> i & 1) ts.push_back(types[i]);
        }
        return ts;
      };

      std::set<std::uint64_t> closed;
      std::vector<std::uint64_t> stack;
      {
        const auto base = check_angle_system(comb, {});
        if (!base.feasible) continue;
        const std::uint64_t c0 = closure(*base.solution);
        closed.insert(c0);
        stack.push_back(c0);
      }
      while (!stack.empty()) {
        const std::uint64_t c = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < types.size(); ++i) {
          if (c >> i & 1) continue;
          const auto f = check_angle_system(comb, subset(c | 1ULL << i));
          if (!f.feasible) continue;
          const std::uint64_t next = closure(*f.solution);
          if (closed.insert(next).second) stack.push_back(next);
        }
      }

      // Supports read off the counting solutions inside each closed set.
      std::set<std::pair<std::uint64_t, std::vector<int>>> seen;
      std::map<std::uint64_t, std::vector<std::vector<int>>> by_support;
      for (std::uint64_t c : closed) {
        const auto ts = subset(c);
        for (const auto& counts : counting_solutions(comb, ts, false)) {
          std::uint64_t support = 0;
          std::vector<int> full(types.size(), 0);
          std::size_t k = 0;
          for (std::size_t i = 0; i < types.size(); ++i) {
            if (!(c >> i & 1)) continue;
            full[i] = counts[k++];
            if (full[i] > 0) support |= 1ULL << i;
          }
          if (seen.insert({support, full}).second) by_support[support].push_back(full);
        }
      }

      // Group by canonical relations.
      const auto renamings = angle_renamings(comb);
      std::map<std::vector<RatVec>, std::pair<LinearSystem, std::set<Avc>>> groups;
      for (const auto& [support, fulls] : by_support) {
        const auto ts = subset(support);
        if (!check_angle_system(comb, ts).feasible) continue;
        std::vector<RatVec> best_key;
        std::vector<std::vector<Label>> best_r;
        for (const auto& r : renamings) {
          std::vector<AngleType> rt;
          for (const auto& t : ts) rt.push_back(rename_type(t, r));
          const Rref rr = rref(angle_equations(comb, rt));
          if (best_r.empty() || rr.rows < best_key) {
            best_key = rr.rows;
            best_r = {r};
          } else if (rr.rows == best_key) {
            best_r.push_back(r);
          }
        }
        auto& grp = groups[best_key];
        if (grp.first.vars() == 0) {
          std::vector<AngleType> rt;
          for (const auto& t : ts) rt.push_back(rename_type(t, best_r[0]));
          grp.first = angle_equations(comb, rt);
        }
        for (const auto& full : fulls) {
          Avc a;
          for (std::size_t i = 0; i < types.size(); ++i) {
            if (full[i] > 0) a[types[i]] = full[i];
          }
          Avc best;
          bool first = true;
          for (const auto& r : best_r) {
            Avc img = rename_avc(a, r);
            if (first || img < best) best = img;
            first = false;
          }
          grp.second.insert(best);
        }
      }
      for (auto& [key, grp] : groups) {
        AngleCase ac;
        ac.combination = comb;
        ac.relations = grp.first;
        ac.solution = *solve_low_free(grp.first);
        ac.relation_text = relation_strings(ac.solution);
        if (ac.solution.dimension() == 1) ac.family = parameter_interval(ac.solution, 0, 2);
        ac.avcs.assign(grp.second.begin(), grp.second.end());
        cases.push_back(std::move(ac));
      }
    }
  }
  for (std::size_t i = 0; i < cases.size(); ++i) cases[i].index = static_cast<int>(i) + 1;
  return cases;
}

std::vector<Cycle> labeled_arrangements(const AngleCombination& c, bool up_to_renaming) {
  const auto renamings = up_to_renaming ? angle_renamings(c) : std::vector<std::vector<Label>>{};
  Cycle seq{};
  int pos = 0;
  for (int l = 0; l < c.labels(); ++l) {
    for (int k = 0; k < c.slot_count[l]; ++k) seq[pos++] = static_cast<Label>(l);
  }
  std::set<Cycle> reps;
  do {
    TileSchema s;
    s.corner = seq;
    Cycle best = dihedral_min(s).corner;
    for (const auto& r : renamings) {
      TileSchema t;
      for (int k = 0; k < kSides; ++k) t.corner[k] = r[seq[k]];
      best = std::min(best, dihedral_min(t).corner);
    }
    reps.insert(best);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return {reps.begin(), reps.end()};
}

AngleType vertex_angle_type(const DodecGraph& g, const CornerLabeling& l, int vertex) {
  const auto c = g.vertex_corners(vertex);
  return sorted_type(l[c[0]], l[c[1]], l[c[2]]);
}

Avc avc_of(const DodecGraph& g, const CornerLabeling& l) {
  Avc out;
  for (int v = 0; v < kVertices; ++v) ++out[vertex_angle_type(g, l, v)];
  return out;
}

CornerLabeling corner_representative(const CornerLabeling& l,
                                     const std::vector<std::vector<Label>>& renamings) {
  static const std::vector<std::vector<Label>> kIdentity{{}};
  const auto& names = renamings.empty() ? kIdentity : renamings;
  CornerLabeling best = l;
  CornerLabeling img;
  for (const auto& a : symmetry_group()) {
    for (const auto& r : names) {
      for (int c = 0; c < kCorners; ++c) img[a.corner[c]] = r.empty() ? l[c] : r[l[c]];
      if (img < best) best = img;
    }
  }
  return best;
}

bool corners_match_profile(const DodecGraph& g, const CornerLabeling& l, const Cycle& profile) {
  TileSchema want;
  want.corner = profile;
  for (int f = 0; f < kFaces; ++f) {
    if (!dihedral_equal(face_schema(g, f, {}, l), want)) return false;
  }
  return true;
}

bool corner_labeling_feasible(const DodecGraph& g, const CornerLabeling& l,
                              const AngleCombination& c) {
  std::set<AngleType> types;
  for (int v = 0; v < kVertices; ++v) types.insert(vertex_angle_type(g, l, v));
  return check_angle_system(c, {types.begin(), types.end()}).feasible;
}

namespace {

struct CornerSearch {
  const DodecGraph& g;
  const AngleCombination& comb;
  std::vector<Cycle> images;
  std::array<int, kFaces> order{};
  std::vector<std::vector<Label>> renamings;
  std::vector<AngleType> types;
  std::array<std::array<std::array<int, 8>, 8>, 8> type_index{};
  std::vector<Label> present;
  bool lookahead = true;
  std::unordered_map<std::uint64_t, bool> memo;
  CornerLabeling cur{};
  std::uint64_t mask = 0;
  std::set<CornerLabeling> found;
  std::uint64_t nodes = 0;
  std::uint64_t raw = 0;

  CornerSearch(const DodecGraph& graph, const AngleCombination& c, std::vector<Cycle> imgs,
               const std::array<int, kFaces>& ord, std::vector<std::vector<Label>> ren)
      : g(graph), comb(c), images(std::move(imgs)), order(ord), renamings(std::move(ren)) {}

  void init() {
    types = all_types(comb);
    for (auto& a : type_index) {
      for (auto& b : a) b.fill(-1);
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      const auto& t = types[i];
      // Every ordering maps to the same index.
      std::array<Label, 3> p = t;
      do {
        type_index[p[0]][p[1]][p[2]] = static_cast<int>(i);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    for (int l = 0; l < comb.labels(); ++l) {
      if (comb.slot_count[l] > 0) present.push_back(static_cast<Label>(l));
    }
    cur.fill(kUnset);
  }

  bool feasible(std::uint64_t m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<AngleType> ts;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (m >> i & 1) ts.push_back(types[i]);
    }
    const bool ok = check_angle_system(comb, ts).feasible;
    memo.emplace(m, ok);
    return ok;
  }

  bool vertex_ok(int v) {
    const auto c = g.vertex_corners(v);
    const Label x = cur[c[0]], y = cur[c[1]], z = cur[c[2]];
    const int unset = (x == kUnset) + (y == kUnset) + (z == kUnset);
    if (unset == 0) {
      const std::uint64_t m = mask | 1ULL << type_index[x][y][z];
      if (m != mask && !feasible(m)) return false;
      mask = m;
      return true;
    }
    if (unset == 1 && lookahead) {
      Label two[2];
      int n = 0;
      for (Label w : {x, y, z}) {
        if (w != kUnset) two[n++] = w;
      }
      const Label p = two[0], q = two[1];
      for (Label w : present) {
        const std::uint64_t m = mask | 1ULL << type_index[p][q][w];
        if (m == mask || feasible(m)) return true;
      }
      return false;
    }
    return true;
  }

  bool place(int face, const Cycle& img) {
    for (int k = 0; k < kSides; ++k) cur[face * kSides + k] = img[k];
    for (int v : g.boundary(face).vertices) {
      if (!vertex_ok(v)) return false;
    }
    return true;
  }

  void clear(int face) {
    for (int k = 0; k < kSides; ++k) cur[face * kSides + k] = kUnset;
  }

  void run(int depth) {
    ++nodes;
    if (depth == kFaces) {
      ++raw;
      found.insert(corner_representative(cur, renamings));
      return;
    }
    const int face = order[depth];
    for (const auto& img : images) {
      const std::uint64_t saved = mask;
      if (place(face, img)) run(depth + 1);
      clear(face);
      mask = saved;
    }
  }
};

std::vector<Cycle> corner_images(const Cycle& profile) {
  TileSchema s;
  s.corner = profile;
  std::vector<Cycle> out;
  for (const auto& img : distinct_images(s)) out.push_back(img.corner);
  return out;
}

}  // namespace

std::vector<CornerLabeling> enumerate_corner_labelings(const DodecGraph& g, const Cycle& profile,
                                                       const CornerSearchOptions& opts,
                                                       CornerSearchStats* stats) {
  const AngleCombination comb = combination_of(profile);
  const auto images = corner_images(profile);
  const auto order = bfs_face_order(g);
  const auto renamings = angle_renamings(comb);

  std::vector<std::pair<Cycle, Cycle>> branches;
  const std::vector<Cycle> first = opts.fix_first_face ? std::vector<Cycle>{profile} : images;
  for (const auto& f0 : first) {
    for (const auto& f1 : images) branches.emplace_back(f0, f1);
  }
  std::vector<CornerSearch> parts;
  parts.reserve(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    parts.emplace_back(g, comb, images, order, renamings);
    parts.back().lookahead = opts.pair_lookahead;
  }
  parallel_for(branches.size(), [&](std::size_t i) {
    CornerSearch& s = parts[i];
    s.init();
    s.nodes += 2;
    if (s.place(order[0], branches[i].first) && s.place(order[1], branches[i].second)) s.run(2);
  });
  std::set<CornerLabeling> all;
  CornerSearchStats local;
  for (const auto& s : parts) {
    all.insert(s.found.begin(), s.found.end());
    local.nodes += s.nodes;
    local.raw_solutions += s.raw;
  }
  if (stats) *stats = local;
  return {all.begin(), all.end()};
}

std::vector<CornerLabeling> enumerate_angle_combination(const DodecGraph& g,
                                                        const AngleCombination& c,
                                                        const CornerSearchOptions& opts) {
  const auto renamings = angle_renamings(c);
  std::set<CornerLabeling> all;
  for (const auto& p : labeled_arrangements(c, true)) {
    for (const auto& l : enumerate_corner_labelings(g, p, opts)) {
      all.insert(corner_representative(l, renamings));
    }
  }
  return {all.begin(), all.end()};
}

std::optional<CornerLabeling> exchange_at_edge(const DodecGraph& g, const CornerLabeling& l,
                                               int edge, Label x, Label y) {
  CornerLabeling out = l;
  for (int f : g.edge_faces(edge)) {
    const auto& b = g.boundary(f);
    const int k = static_cast<int>(std::find(b.edges.begin(), b.edges.end(), edge) - b.edges.begin());
    const int c1 = f * kSides + (k + kSides - 1) % kSides;
    const int c2 = f * kSides + k;
    const bool fits = (l[c1] == x && l[c2] == y) || (l[c1] == y && l[c2] == x);
    if (!fits) return std::nullopt;
    std::swap(out[c1], out[c2]);
  }
  return out;
}

ExchangeGraph exchange_graph(const DodecGraph& g, const std::vector<CornerLabeling>& set,
                             const AngleCombination& c,
                             std::vector<std::pair<Label, Label>> pairs) {
  ExchangeGraph out;
  if (pairs.empty()) {
    for (int x = 1; x < c.labels(); ++x) {
      for (int y = x + 1; y < c.labels(); ++y) pairs.emplace_back(x, y);
    }
  }
  const auto renamings = angle_renamings(c);
  std::map<CornerLabeling, int> index;
  for (std::size_t i = 0; i < set.size(); ++i) {
    index[corner_representative(set[i], renamings)] = static_cast<int>(i);
  }
  std::vector<int> parent(set.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };

  for (std::size_t i = 0; i < set.size(); ++i) {
    for (int e = 0; e < kEdges; ++e) {
     for (const auto& [x, y] : pairs) {
      auto next = exchange_at_edge(g, set[i], e, x, y);
      if (!next) continue;
      // Valid only if all faces still share one arrangement and the
      // vertex system stays feasible.
      const Cycle p0 = face_schema(g, 0, {}, *next).corner;
      if (!corners_match_profile(g, *next, p0) || !corner_labeling_feasible(g, *next, c)) continue;
      const auto it = index.find(corner_representative(*next, renamings));
      if (it == index.end()) {
        out.moves.emplace_back(static_cast<int>(i), -1);
        ++out.escaped;
        continue;
      }
      out.moves.emplace_back(static_cast<int>(i), it->second);
      parent[find(static_cast<int>(i))] = find(it->second);
     }
    }
  }
  std::map<int, std::vector<int>> comps;
  for (std::size_t i = 0; i < set.size(); ++i) comps[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [root, members] : comps) out.families.push_back(members);
  std::sort(out.families.begin(), out.families.end());
  return out;
}

}  // namespace pentile
