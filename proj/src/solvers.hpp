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

#include "discrete.hpp"

namespace gridflow {

// Axis relabeling + reflections bringing (v, w) to the normal form
// v_i <= w_i with gaps sorted descending. Ties keep original axis order;
// coordinates with v_i == w_i are never reflected.
struct CanonicalFrame {
  std::vector<int> axis;      // frame axis j reads original axis[j]
  std::vector<bool> reflect;  // reflect original axis i across (v_i + w_i)/2
  Coords v_orig, w_orig;

  static CanonicalFrame normalize(const Coords& v, const Coords& w);
  Coords to_frame(const Coords& x) const;
  Coords from_frame(const Coords& x) const;
  // gap vector a_j = w_j - v_j in frame order (descending)
  std::vector<int> gaps() const;
};

// --- 1D ---
FlowSolution solve_1d(const GridGraph& g, const Permutation& sigma);
int64_t predict_usage_1d(const GridGraph& g, const Permutation& sigma, int64_t k);

// --- 2D (first coordinate, then second) ---
FlowSolution solve_2d(const GridGraph& g, const Permutation& sigma);
int64_t predict_usage_2d(const GridGraph& g, const Permutation& sigma, const Edge& e);
// The unique first-then-second shortest path from v to w.
Path path_2d(const GridGraph& g, int64_t v, int64_t w);

// --- multi-D canonical families ---
std::vector<Path> canonical_family(const GridGraph& g, const Coords& v, const Coords& w);
FlowSolution solve_multi(const GridGraph& g, const Permutation& sigma);

// --- counterexample (nu = 3) ---
Permutation counterexample_permutation(int n);
// Coordinate-by-coordinate correction path (coordinate 1, then 2, ..., nu).
Path single_path_family(const GridGraph& g, int64_t v, int64_t w);
// Closed form 2N*min(j, N-1-j) for the diagonal edge {(i,j,i),(i,j+1,i)}.
// This is the published formula; it is a lower bound on the true count
// (exact for j >= (N-1)/2, one band short below). Census values use exact
// counting via the path family.
int64_t counterexample_usage(int n, int j);

struct CounterexampleCensus {
  int64_t edges_at_least_n2 = 0;  // #{e : F(e) >= N^2}, exact
  int64_t max_usage = 0;          // max_e F(e), exact
  int64_t sup_displacement = 0;   // ||dist||_inf
};
CounterexampleCensus counterexample_census(int n);

struct VisitFraction {
  int m = 0;            // M(z): max #coordinates agreeing with v or w
  Rat bound;            // case bound from the path-count lemma
  Rat measured;         // #{gamma through z} / #Gamma_v by enumeration
};
VisitFraction visit_fraction_bound(const GridGraph& g, const Coords& v, const Coords& w,
                                   const Coords& z);

}  // namespace gridflow
