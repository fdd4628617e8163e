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
#include "grid.hpp"

#include <algorithm>
#include <random>

namespace gridflow {

Pexp Pexp::parse(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF" || s == "oo") return infinity();
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size() || v < 1.0) throw std::invalid_argument("p must be in [1, inf]: " + s);
  return real(static_cast<long double>(v));
}

GridGraph::GridGraph(int nu_, int n_) : nu(nu_), n(n_) {
  if (nu < 1 || n < 2) throw std::invalid_argument("GridGraph: need nu >= 1, n >= 2");
  stride_.assign(nu, 1);
  nvert_ = 1;
  for (int i = nu - 1; i >= 0; --i) {
    stride_[i] = nvert_;
    nvert_ *= n;
    if (nvert_ > (int64_t(1) << 48)) throw std::invalid_argument("GridGraph: too large");
  }
}

int64_t GridGraph::num_edges() const {
  int64_t faces = 1;
  for (int i = 0; i < nu - 1; ++i) faces *= n;
  return int64_t(nu) * faces * (n - 1);
}

int64_t GridGraph::index(const Coords& c) const {
  if (static_cast<int>(c.size()) != nu) throw std::invalid_argument("index: dimension mismatch");
  int64_t idx = 0;
  for (int i = 0; i < nu; ++i) {
    if (c[i] < 0 || c[i] >= n) throw std::out_of_range("index: coordinate out of range");
    idx += stride_[i] * c[i];
  }
  return idx;
}

Coords GridGraph::coords(int64_t idx) const {
  Coords c(nu);
  for (int i = 0; i < nu; ++i) {
    c[i] = static_cast<int>(idx / stride_[i]);
    idx %= stride_[i];
  }
  return c;
}

bool GridGraph::in_range(const Coords& c) const {
  if (static_cast<int>(c.size()) != nu) return false;
  for (int x : c)
    if (x < 0 || x >= n) return false;
  return true;
}

int64_t GridGraph::neighbor(int64_t idx, int axis, int dir) const {
  int64_t digit = (idx / stride_[axis]) % n;
  int64_t d2 = digit + dir;
  if (d2 < 0 || d2 >= n) return -1;
  return idx + dir * stride_[axis];
}

int edge_axis(const GridGraph& g, const Edge& e) {
  Coords ca = g.coords(e.a), cb = g.coords(e.b);
  int axis = -1;
  for (int i = 0; i < g.nu; ++i) {
    if (ca[i] != cb[i]) {
      if (axis >= 0 || std::abs(ca[i] - cb[i]) != 1)
        throw std::invalid_argument("edge_axis: not a unit edge");
      axis = i;
    }
  }
  if (axis < 0) throw std::invalid_argument("edge_axis: degenerate edge");
  return axis;
}

bool Permutation::is_identity() const {
  for (int64_t i = 0; i < static_cast<int64_t>(map.size()); ++i)
    if (map[i] != i) return false;
  return true;
}

Permutation Permutation::identity(int64_t nvert) {
  Permutation p;
  p.map.resize(nvert);
  for (int64_t i = 0; i < nvert; ++i) p.map[i] = i;
  return p;
}

Permutation Permutation::checked(std::vector<int64_t> m) {
  std::vector<char> seen(m.size(), 0);
  for (int64_t x : m) {
    if (x < 0 || x >= static_cast<int64_t>(m.size()) || seen[x])
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    seen[x] = 1;
  }
  Permutation p;
  p.map = std::move(m);
  return p;
}

int64_t manhattan_dist(const Coords& v, const Coords& w) {
  if (v.size() != w.size()) throw std::invalid_argument("manhattan_dist: dimension mismatch");
  int64_t d = 0;
  for (size_t i = 0; i < v.size(); ++i) d += std::abs(static_cast<int64_t>(v[i]) - w[i]);
  return d;
}

int64_t manhattan_dist(const GridGraph& g, int64_t v, int64_t w) {
  return manhattan_dist(g.coords(v), g.coords(w));
}

mpz_class displacement_pow_sum(const GridGraph& g, const Permutation& sigma, long p) {
  mpz_class total = 0;
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    int64_t d = manhattan_dist(g, v, sigma(v));
    if (d == 0) continue;
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
    total += dp;
  }
  return total;
}

int64_t displacement_sup(const GridGraph& g, const Permutation& sigma) {
  int64_t m = 0;
  for (int64_t v = 0; v < g.num_vertices(); ++v)
    m = std::max(m, manhattan_dist(g, v, sigma(v)));
  return m;
}

long double displacement_norm(const GridGraph& g, const Permutation& sigma, const Pexp& p) {
  if (p.is_inf()) return static_cast<long double>(displacement_sup(g, sigma));
  if (p.is_int()) {
    mpz_class s = displacement_pow_sum(g, sigma, p.k);
    return powl(to_ld(s), 1.0L / static_cast<long double>(p.k));
  }
  long double acc = 0;
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    int64_t d = manhattan_dist(g, v, sigma(v));
    if (d) acc += powl(static_cast<long double>(d), p.x);
  }
  return powl(acc, 1.0L / p.x);
}

Permutation random_permutation(int64_t nvert, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Permutation p = Permutation::identity(nvert);
  for (int64_t i = nvert - 1; i > 0; --i) {
    std::uniform_int_distribution<int64_t> dist(0, i);
    std::swap(p.map[i], p.map[dist(rng)]);
  }
  return p;
}

Permutation random_s2_permutation(const GridGraph& g, uint64_t seed) {
  if (g.nu != 3) throw std::invalid_argument("random_s2_permutation: nu must be 3");
  int64_t cols = int64_t(g.n) * g.n;
  Permutation p2 = random_permutation(cols, seed);
  Permutation p = Permutation::identity(g.num_vertices());
  for (int64_t c = 0; c < cols; ++c) {
    int v1 = static_cast<int>(c / g.n), v2 = static_cast<int>(c % g.n);
    int64_t img = p2(c);
    int w1 = static_cast<int>(img / g.n), w2 = static_cast<int>(img % g.n);
    for (int v3 = 0; v3 < g.n; ++v3)
      p.map[g.index({v1, v2, v3})] = g.index({w1, w2, v3});
  }
  return p;
}

}  // namespace gridflow
