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
#pragma once

#include <cstdint>
#include <vector>
#include <string>
#include <cmath>
#include <stdexcept>

#include "rational.hpp"

namespace gridflow {

using Coords = std::vector<int>;

// Exponent p in [1, inf]. Integer p keeps exact arithmetic available.
struct Pexp {
  enum Kind { Int, Real, Inf } kind = Int;
  long k = 1;
  long double x = 1.0L;

  static Pexp integer(long p) { return Pexp{Int, p, static_cast<long double>(p)}; }
  static Pexp real(long double p) {
    if (p == std::floor(static_cast<double>(p)) && p < 1e15L) return integer(static_cast<long>(p));
    return Pexp{Real, 0, p};
  }
  static Pexp infinity() { return Pexp{Inf, 0, 0}; }
  bool is_inf() const { return kind == Inf; }
  bool is_int() const { return kind == Int; }
  long double value() const { return kind == Inf ? 0 : x; }
  std::string str() const {
    if (kind == Inf) return "inf";
    if (kind == Int) return std::to_string(k);
    return std::to_string(static_cast<double>(x));
  }
  static Pexp parse(const std::string& s);
};

// nu-dimensional lattice {0..n-1}^nu with unit edges.
struct GridGraph {
  int nu = 1;
  int n = 2;

  GridGraph() = default;
  GridGraph(int nu_, int n_);

  int64_t num_vertices() const { return nvert_; }
  int64_t num_edges() const;

  int64_t index(const Coords& c) const;
  Coords coords(int64_t idx) const;
  bool in_range(const Coords& c) const;

  // Neighbor index one step along +-axis, or -1 if off-grid.
  int64_t neighbor(int64_t idx, int axis, int dir) const;

 private:
  int64_t nvert_ = 2;
  std::vector<int64_t> stride_;  // stride_[i] = n^(nu-1-i), row-major flattening
};

// Canonical (smaller index first) unit edge.
struct Edge {
  int64_t a = 0, b = 0;
  Edge() = default;
  Edge(int64_t u, int64_t v) : a(u < v ? u : v), b(u < v ? v : u) {}
  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
  bool operator<(const Edge& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Axis along which e runs (endpoints differ in exactly one coordinate).
int edge_axis(const GridGraph& g, const Edge& e);

struct Permutation {
  std::vector<int64_t> map;  // image index per vertex index

  int64_t operator()(int64_t v) const { return map[v]; }
  bool is_identity() const;
  static Permutation identity(int64_t nvert);
  // Throws std::invalid_argument unless bijective over [0, nvert).
  static Permutation checked(std::vector<int64_t> m);
};

int64_t manhattan_dist(const Coords& v, const Coords& w);
int64_t manhattan_dist(const GridGraph& g, int64_t v, int64_t w);

// l^p norm of v -> dist(v, sigma(v)); sup for p = inf.
long double displacement_norm(const GridGraph& g, const Permutation& sigma, const Pexp& p);
// Exact Sum dist^p for integer p >= 1, and exact sup.
mpz_class displacement_pow_sum(const GridGraph& g, const Permutation& sigma, long p);
int64_t displacement_sup(const GridGraph& g, const Permutation& sigma);

// Seeded uniform random permutation (Fisher-Yates over a splitmix/xoshiro stream).
Permutation random_permutation(int64_t nvert, uint64_t seed);
// Random permutation fixing the third coordinate (nu = 3): a 2D permutation
// applied to (v1, v2) in every layer v3.
Permutation random_s2_permutation(const GridGraph& g, uint64_t seed);

}  // namespace gridflow
