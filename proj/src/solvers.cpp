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
#include "solvers.hpp"

#include <algorithm>
#include <numeric>

namespace gridflow {

namespace {

// Walks from `from` to `to` changing one coordinate monotonically; appends
// everything after `from` to out.
void append_straight(const GridGraph& g, Coords& cur, const Coords& target, int axis,
                     std::vector<int64_t>& out) {
  int step = target[axis] > cur[axis] ? 1 : -1;
  while (cur[axis] != target[axis]) {
    cur[axis] += step;
    out.push_back(g.index(cur));
  }
}

}  // namespace

CanonicalFrame CanonicalFrame::normalize(const Coords& v, const Coords& w) {
  if (v.size() != w.size()) throw std::invalid_argument("CanonicalFrame: dimension mismatch");
  int nu = static_cast<int>(v.size());
  CanonicalFrame f;
  f.v_orig = v;
  f.w_orig = w;
  f.reflect.resize(nu);
  for (int i = 0; i < nu; ++i) f.reflect[i] = w[i] < v[i];
  f.axis.resize(nu);
  std::iota(f.axis.begin(), f.axis.end(), 0);
  std::stable_sort(f.axis.begin(), f.axis.end(), [&](int a, int b) {
    return std::abs(w[a] - v[a]) > std::abs(w[b] - v[b]);
  });
  return f;
}

Coords CanonicalFrame::to_frame(const Coords& x) const {
  int nu = static_cast<int>(axis.size());
  Coords out(nu);
  for (int j = 0; j < nu; ++j) {
    int i = axis[j];
    out[j] = reflect[i] ? v_orig[i] + w_orig[i] - x[i] : x[i];
  }
  return out;
}

Coords CanonicalFrame::from_frame(const Coords& x) const {
  int nu = static_cast<int>(axis.size());
  Coords out(nu);
  for (int j = 0; j < nu; ++j) {
    int i = axis[j];
    out[i] = reflect[i] ? v_orig[i] + w_orig[i] - x[j] : x[j];
  }
  return out;
}

std::vector<int> CanonicalFrame::gaps() const {
  std::vector<int> a(axis.size());
  for (size_t j = 0; j < axis.size(); ++j)
    a[j] = std::abs(w_orig[axis[j]] - v_orig[axis[j]]);
  return a;
}

// ---------------------------------------------------------------- 1D

FlowSolution solve_1d(const GridGraph& g, const Permutation& sigma) {
  if (g.nu != 1) throw std::invalid_argument("solve_1d: nu must be 1");
  std::vector<Path> paths(g.num_vertices());
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<int64_t> verts{v};
    Coords c = g.coords(v), target = g.coords(sigma(v));
    append_straight(g, c, target, 0, verts);
    paths[v].v = std::move(verts);
  }
  FlowSolution sol{g, sigma, single_path_per_vertex(g, sigma, std::move(paths)), {}};
  sol.thickness = standard_thickness(g, sol.family);
  return sol;
}

int64_t predict_usage_1d(const GridGraph& g, const Permutation& sigma, int64_t k) {
  if (g.nu != 1) throw std::invalid_argument("predict_usage_1d: nu must be 1");
  if (k < 0 || k + 1 >= g.n) throw std::invalid_argument("predict_usage_1d: bad edge");
  int64_t count = 0;
  for (int64_t j = 0; j < g.num_vertices(); ++j) {
    if (j > k && sigma(j) <= k) ++count;
    if (j <= k && sigma(j) > k) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- 2D

Path path_2d(const GridGraph& g, int64_t v, int64_t w) {
  Coords cv = g.coords(v), cw = g.coords(w);
  std::vector<int64_t> verts{v};
  Coords cur = cv;
  append_straight(g, cur, cw, 0, verts);
  append_straight(g, cur, cw, 1, verts);
  return Path{std::move(verts)};
}

FlowSolution solve_2d(const GridGraph& g, const Permutation& sigma) {
  if (g.nu != 2) throw std::invalid_argument("solve_2d: nu must be 2");
  std::vector<Path> paths(g.num_vertices());
  for (int64_t v = 0; v < g.num_vertices(); ++v) paths[v] = path_2d(g, v, sigma(v));
  FlowSolution sol{g, sigma, single_path_per_vertex(g, sigma, std::move(paths)), {}};
  sol.thickness = standard_thickness(g, sol.family);
  return sol;
}

int64_t predict_usage_2d(const GridGraph& g, const Permutation& sigma, const Edge& e) {
  if (g.nu != 2) throw std::invalid_argument("predict_usage_2d: nu must be 2");
  Coords ca = g.coords(e.a);
  int axis = edge_axis(g, e);
  int64_t count = 0;
  if (axis == 0) {
    // e = {(i,k),(i+1,k)}: first-leg crossings within row x2 = k
    int i = ca[0], k = ca[1];
    for (int j = 0; j < g.n; ++j) {
      int64_t vtx = g.index({j, k});
      int s1 = g.coords(sigma(vtx))[0];
      if (j > i && s1 <= i) ++count;
      if (j <= i && s1 > i) ++count;
    }
  } else {
    // e = {(i,k),(i,k+1)}: second-leg crossings within target column x1 = i
    int i = ca[0], k = ca[1];
    for (int64_t v = 0; v < g.num_vertices(); ++v) {
      Coords s = g.coords(sigma(v));
      if (s[0] != i) continue;
      int v2 = g.coords(v)[1];
      if (s[1] > k && v2 <= k) ++count;
      if (s[1] < k + 1 && v2 > k) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------- multi-D

std::vector<Path> canonical_family(const GridGraph& g, const Coords& v, const Coords& w) {
  int nu = g.nu;
  if (static_cast<int>(v.size()) != nu || static_cast<int>(w.size()) != nu)
    throw std::invalid_argument("canonical_family: dimension mismatch");
  CanonicalFrame f = CanonicalFrame::normalize(v, w);
  std::vector<int> a = f.gaps();
  Coords fv = f.to_frame(v), fw = f.to_frame(w);

  // index set A: alpha_j in [0, a_j], j = 1..nu-2 (empty product for nu <= 2)
  int nalpha = std::max(0, nu - 2);
  std::vector<int> alpha(nalpha, 0);
  std::vector<Path> out;
  auto emit = [&]() {
    Coords cur = fv;
    std::vector<int64_t> verts{g.index(f.from_frame(cur))};
    std::vector<Coords> world_track;  // build in frame, index via from_frame
    auto go = [&](int axis_frame, int target) {
      int step = target > cur[axis_frame] ? 1 : -1;
      while (cur[axis_frame] != target) {
        cur[axis_frame] += step;
        verts.push_back(g.index(f.from_frame(cur)));
      }
    };
    for (int j = 0; j < nalpha; ++j) go(j, fv[j] + alpha[j]);        // legs (1)-(2)
    if (nu >= 2) go(nu - 2, fw[nu - 2]);                              // leg (3)
    go(nu - 1, fw[nu - 1]);                                           // leg (4)
    for (int j = nalpha - 1; j >= 0; --j) go(j, fw[j]);               // legs (5)
    out.push_back(Path{std::move(verts)});
  };
  // odometer over alpha
  while (true) {
    emit();
    int j = nalpha - 1;
    while (j >= 0 && alpha[j] == a[j]) alpha[j--] = 0;
    if (j < 0) break;
    ++alpha[j];
  }
  // Degenerate displacements (all gaps but the largest zero) make every alpha
  // trace the same straight line; the family is a set, so collapse duplicates.
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) { return x.v < y.v; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Path& x, const Path& y) { return x.v == y.v; }),
            out.end());
  return out;
}

FlowSolution solve_multi(const GridGraph& g, const Permutation& sigma) {
  PathFamily fam;
  fam.offset.resize(g.num_vertices() + 1);
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    fam.offset[v] = static_cast<int32_t>(fam.paths.size());
    auto family_v = canonical_family(g, g.coords(v), g.coords(sigma(v)));
    Rat w(1, static_cast<long>(family_v.size()));
    w.canonicalize();
    for (auto& p : family_v) {
      fam.paths.push_back(std::move(p));
      fam.weight.push_back(w);
      fam.owner.push_back(v);
    }
  }
  fam.offset[g.num_vertices()] = static_cast<int32_t>(fam.paths.size());
  fam.validate(g, sigma);
  FlowSolution sol{g, sigma, std::move(fam), {}};
  sol.thickness = standard_thickness(g, sol.family);
  return sol;
}

// ---------------------------------------------------------------- counterexample

Permutation counterexample_permutation(int n) {
  if (n < 2) throw std::invalid_argument("counterexample_permutation: n >= 2");
  GridGraph g(3, n);
  std::vector<int64_t> m(g.num_vertices());
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    Coords c = g.coords(v);
    m[v] = g.index({c[2], n - 1 - c[1], c[0]});
  }
  return Permutation::checked(std::move(m));
}

Path single_path_family(const GridGraph& g, int64_t v, int64_t w) {
  Coords cur = g.coords(v), target = g.coords(w);
  std::vector<int64_t> verts{v};
  for (int axis = 0; axis < g.nu; ++axis) append_straight(g, cur, target, axis, verts);
  return Path{std::move(verts)};
}

int64_t counterexample_usage(int n, int j) {
  if (j < 0 || j + 1 >= n) throw std::invalid_argument("counterexample_usage: bad edge index");
  return 2LL * n * std::min<int64_t>(j, n - 1 - j);
}

CounterexampleCensus counterexample_census(int n) {
  GridGraph g(3, n);
  Permutation sigma = counterexample_permutation(n);
  std::unordered_map<int64_t, int64_t> count;
  int64_t nv = g.num_vertices();
  for (int64_t v = 0; v < nv; ++v) {
    Path p = single_path_family(g, v, sigma(v));
    for (size_t i = 0; i + 1 < p.v.size(); ++i) {
      Edge e = p.edge(i);
      ++count[e.a * nv + e.b];
    }
  }
  CounterexampleCensus c;
  int64_t n2 = int64_t(n) * n;
  for (const auto& [k, f] : count) {
    c.max_usage = std::max(c.max_usage, f);
    if (f >= n2) ++c.edges_at_least_n2;
  }
  c.sup_displacement = displacement_sup(g, sigma);
  return c;
}

VisitFraction visit_fraction_bound(const GridGraph& g, const Coords& v, const Coords& w,
                                   const Coords& z) {
  int nu = g.nu;
  if (nu < 3) throw std::invalid_argument("visit_fraction_bound: nu >= 3");
  for (int i = 0; i < nu; ++i) {
    int lo = std::min(v[i], w[i]), hi = std::max(v[i], w[i]);
    if (z[i] < lo || z[i] > hi)
      throw std::invalid_argument("visit_fraction_bound: z outside the box [v, w]");
  }
  VisitFraction res;
  int agree_v = 0, agree_w = 0;
  for (int i = 0; i < nu; ++i) {
    if (z[i] == v[i]) ++agree_v;
    if (z[i] == w[i]) ++agree_w;
  }
  res.m = std::max(agree_v, agree_w);

  CanonicalFrame f = CanonicalFrame::normalize(v, w);
  std::vector<int> a = f.gaps();
  if (res.m == 0) {
    res.bound = 0;
  } else if (res.m >= nu - 1) {
    res.bound = 1;
  } else {
    res.bound = 1;
    for (int j = 0; j < nu - res.m - 1; ++j) res.bound /= (a[j] + 1);
  }

  auto fam = canonical_family(g, v, w);
  int64_t zi = g.index(z);
  int64_t hits = 0;
  for (const Path& p : fam)
    if (std::find(p.v.begin(), p.v.end(), zi) != p.v.end()) ++hits;
  res.measured = Rat(static_cast<long>(hits), static_cast<long>(fam.size()));
  res.measured.canonicalize();
  return res;
}

}  // namespace gridflow
