/*
 Copyright 2026 The gridflow authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "discrete.hpp"

#include <algorithm>
#include <unordered_set>

namespace gridflow {

bool Path::traverses(const Edge& e, size_t* pos) const {
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (edge(i) == e) {
      if (pos) *pos = i;
      return true;
    }
  }
  return false;
}

Path Path::checked(const GridGraph& g, std::vector<int64_t> verts) {
  if (verts.empty()) throw std::invalid_argument("Path: empty vertex list");
  std::unordered_set<int64_t> seen;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= g.num_vertices())
      throw std::invalid_argument("Path: vertex out of range");
    if (!seen.insert(verts[i]).second) throw std::invalid_argument("Path: repeated vertex");
    if (i > 0 && manhattan_dist(g, verts[i - 1], verts[i]) != 1)
      throw std::invalid_argument("Path: consecutive vertices not adjacent");
  }
  Path p;
  p.v = std::move(verts);
  return p;
}

void PathFamily::validate(const GridGraph& g, const Permutation& sigma) const {
  if (offset.size() != static_cast<size_t>(g.num_vertices()) + 1)
    throw std::invalid_argument("PathFamily: bad offset table");
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    Rat total = 0;
    for (int32_t i = offset[v]; i < offset[v + 1]; ++i) {
      const Path& p = paths[i];
      if (owner[i] != v) throw std::invalid_argument("PathFamily: owner mismatch");
      if (p.v.front() != v || p.v.back() != sigma(v))
        throw std::invalid_argument("PathFamily: path endpoints do not match sigma");
      if (weight[i] <= 0 || weight[i] > 1)
        throw std::invalid_argument("PathFamily: weight out of (0,1]");
      total += weight[i];
    }
    if (offset[v + 1] > offset[v] && total != 1)
      throw std::invalid_argument("PathFamily: weights do not sum to 1");
  }
}

const std::unordered_map<int64_t, Rat>& FlowSolution::usage_map() const {
  if (!usage_ready_) {
    usage_ = family_usage(graph, family);
    usage_ready_ = true;
  }
  return usage_;
}

std::unordered_map<int64_t, Rat> family_usage(const GridGraph& g, const PathFamily& family) {
  std::unordered_map<int64_t, Rat> m;
  int64_t nv = g.num_vertices();
  for (size_t pi = 0; pi < family.paths.size(); ++pi) {
    const Path& p = family.paths[pi];
    for (size_t i = 0; i + 1 < p.v.size(); ++i) {
      Edge e = p.edge(i);
      m[e.a * nv + e.b] += family.weight[pi];
    }
  }
  return m;
}

Rat usage(const FlowSolution& sol, const Edge& e) {
  const auto& m = sol.usage_map();
  auto it = m.find(sol.edge_key(e));
  return it == m.end() ? Rat(0) : it->second;
}

ConstraintReport check_time_constraint(const FlowSolution& sol) {
  ConstraintReport rep;
  rep.worst = 0;
  for (size_t pi = 0; pi < sol.family.size(); ++pi) {
    const auto& rho = sol.thickness.rho[pi];
    Rat lhs = 0;
    for (const Rat& r : rho) lhs += r;
    if (lhs > rep.worst) {
      rep.worst = lhs;
      rep.worst_index = static_cast<int64_t>(pi);
    }
  }
  rep.pass = rep.worst <= 1;
  rep.slack = Rat(1) - rep.worst;
  return rep;
}

ConstraintReport check_capacity_constraint(const FlowSolution& sol) {
  ConstraintReport rep;
  rep.worst = 0;
  std::unordered_map<int64_t, Rat> load;
  int64_t nv = sol.graph.num_vertices();
  for (size_t pi = 0; pi < sol.family.size(); ++pi) {
    const Path& p = sol.family.paths[pi];
    for (size_t i = 0; i + 1 < p.v.size(); ++i) {
      Edge e = p.edge(i);
      load[e.a * nv + e.b] += sol.family.weight[pi] * sol.thickness.at(static_cast<PathId>(pi), i);
    }
  }
  for (const auto& [key, lhs] : load) {
    if (lhs > rep.worst) {
      rep.worst = lhs;
      rep.worst_index = key;
    }
  }
  rep.pass = rep.worst <= 1;
  rep.slack = Rat(1) - rep.worst;
  return rep;
}

CostResult cost(const FlowSolution& sol, const Pexp& p) {
  CostResult res;
  if (p.is_inf()) {
    res.exact = true;
    res.exact_sup = 0;
    for (size_t pi = 0; pi < sol.family.size(); ++pi)
      for (const Rat& r : sol.thickness.rho[pi]) {
        Rat inv = 1 / r;
        if (inv > res.exact_sup) res.exact_sup = inv;
      }
    res.value = to_ld(res.exact_sup);
    return res;
  }
  if (p.is_int()) {
    res.exact = true;
    res.exact_pow = 0;
    for (size_t pi = 0; pi < sol.family.size(); ++pi) {
      Rat per_path = 0;
      for (const Rat& r : sol.thickness.rho[pi]) per_path += ratpow(r, 1 - p.k);
      res.exact_pow += sol.family.weight[pi] * per_path;
    }
    res.value = powl(to_ld(res.exact_pow), 1.0L / static_cast<long double>(p.k));
    return res;
  }
  long double acc = 0;
  for (size_t pi = 0; pi < sol.family.size(); ++pi) {
    long double w = to_ld(sol.family.weight[pi]);
    for (const Rat& r : sol.thickness.rho[pi]) acc += w * powl(to_ld(r), 1.0L - p.x);
  }
  res.value = powl(acc, 1.0L / p.x);
  return res;
}

BoundResult lower_bound(const GridGraph& g, const Permutation& sigma, const Pexp& p) {
  BoundResult res;
  if (p.is_inf()) {
    res.exact = true;
    res.exact_sup = displacement_sup(g, sigma);
    res.value = static_cast<long double>(res.exact_sup);
  } else if (p.is_int()) {
    res.exact = true;
    res.exact_pow = displacement_pow_sum(g, sigma, p.k);
    res.value = powl(to_ld(res.exact_pow), 1.0L / static_cast<long double>(p.k));
  } else {
    res.value = displacement_norm(g, sigma, p);
  }
  return res;
}

Thickness standard_thickness(const GridGraph& g, const PathFamily& family) {
  auto F = family_usage(g, family);
  int64_t nv = g.num_vertices();
  Thickness t;
  t.rho.resize(family.size());
  for (size_t pi = 0; pi < family.size(); ++pi) {
    const Path& p = family.paths[pi];
    size_t len = p.length();
    t.rho[pi].reserve(len);
    Rat rlen(static_cast<long>(len));
    for (size_t i = 0; i < len; ++i) {
      Edge e = p.edge(i);
      const Rat& fe = F.at(e.a * nv + e.b);
      const Rat& m = fe > rlen ? fe : rlen;
      t.rho[pi].push_back(1 / m);
    }
  }
  return t;
}

namespace {

// Lexicographic order on owner coordinates.
int lex_compare(const GridGraph& g, int64_t v, int64_t w) {
  Coords cv = g.coords(v), cw = g.coords(w);
  for (int i = 0; i < g.nu; ++i) {
    if (cv[i] != cw[i]) return cv[i] < cw[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int edge_order_compare(const GridGraph& g, const Edge& e, PathId g1, PathId g2,
                       const PathFamily& family) {
  if (g1 == g2) return 0;
  size_t p1 = 0, p2 = 0;
  const Path& a = family.paths[g1];
  const Path& b = family.paths[g2];
  if (!a.traverses(e, &p1) || !b.traverses(e, &p2))
    throw std::invalid_argument("edge_order_compare: path does not traverse edge");
  // forward = visits the smaller endpoint first
  bool fwd1 = a.v[p1] == e.a;
  bool fwd2 = b.v[p2] == e.a;
  int axis = edge_axis(g, e);
  // Axis-2 edges: forward block first, forward lexicographic, backward
  // reverse-lexicographic. Axis-1 edges mirror this. Other axes never carry
  // ordered pipes (the construction only routes in the first two coordinates).
  bool axis1_rule = (axis == 0);
  if (fwd1 != fwd2) {
    if (!axis1_rule) return fwd1 ? -1 : 1;
    return fwd1 ? 1 : -1;
  }
  int lex = lex_compare(g, family.owner[g1], family.owner[g2]);
  if (lex == 0)
    throw std::logic_error("edge_order_compare: distinct paths with identical owner");
  bool plain = axis1_rule ? !fwd1 : fwd1;  // lexicographic for this block?
  return plain ? lex : -lex;
}

PathFamily single_path_per_vertex(const GridGraph& g, const Permutation& sigma,
                                  std::vector<Path> paths) {
  if (paths.size() != static_cast<size_t>(g.num_vertices()))
    throw std::invalid_argument("single_path_per_vertex: need one path per vertex");
  PathFamily fam;
  fam.offset.resize(g.num_vertices() + 1);
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    fam.offset[v] = static_cast<int32_t>(fam.paths.size());
    fam.paths.push_back(std::move(paths[v]));
    fam.weight.push_back(Rat(1));
    fam.owner.push_back(v);
  }
  fam.offset[g.num_vertices()] = static_cast<int32_t>(fam.paths.size());
  fam.validate(g, sigma);
  return fam;
}

}  // namespace gridflow
