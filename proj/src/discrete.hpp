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

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grid.hpp"

namespace gridflow {

// Path as a vertex-index sequence; consecutive vertices adjacent, no repeats.
// A single-vertex path has length 0 and no edges.
struct Path {
  std::vector<int64_t> v;

  size_t length() const { return v.empty() ? 0 : v.size() - 1; }
  Edge edge(size_t i) const { return Edge(v[i], v[i + 1]); }
  bool traverses(const Edge& e, size_t* pos = nullptr) const;
  // Validates adjacency and distinctness against g; throws on violation.
  static Path checked(const GridGraph& g, std::vector<int64_t> verts);
};

using PathId = int32_t;

// All paths of a solution, flattened; paths of vertex v are
// [offset[v], offset[v+1]). Weights sum to 1 exactly per vertex.
struct PathFamily {
  std::vector<Path> paths;
  std::vector<Rat> weight;
  std::vector<int64_t> owner;        // owner vertex per path
  std::vector<int32_t> offset;       // per-vertex slice into paths (size nvert+1)

  size_t size() const { return paths.size(); }
  // Checks start/end endpoints against sigma and the weight decomposition.
  void validate(const GridGraph& g, const Permutation& sigma) const;
};

// rho(e, gamma) stored per path, aligned with the path's edge list.
struct Thickness {
  std::vector<std::vector<Rat>> rho;  // rho[path][edge_index], values in (0,1]

  const Rat& at(PathId p, size_t edge_idx) const { return rho[p][edge_idx]; }
};

struct FlowSolution {
  GridGraph graph;
  Permutation sigma;
  PathFamily family;
  Thickness thickness;

  FlowSolution() = default;
  FlowSolution(GridGraph g, Permutation s, PathFamily f, Thickness t)
      : graph(std::move(g)), sigma(std::move(s)), family(std::move(f)),
        thickness(std::move(t)) {}
  FlowSolution(const FlowSolution& o)
      : graph(o.graph), sigma(o.sigma), family(o.family), thickness(o.thickness) {}
  FlowSolution& operator=(const FlowSolution& o) {
    graph = o.graph; sigma = o.sigma; family = o.family; thickness = o.thickness;
    usage_ready_ = false; usage_.clear();
    return *this;
  }
  FlowSolution(FlowSolution&&) = default;
  FlowSolution& operator=(FlowSolution&&) = default;

  // Weighted edge usage F(e), computed once on demand.
  const std::unordered_map<int64_t, Rat>& usage_map() const;
  int64_t edge_key(const Edge& e) const { return e.a * graph.num_vertices() + e.b; }

 private:
  mutable std::unordered_map<int64_t, Rat> usage_;
  mutable bool usage_ready_ = false;
};

// F(e): weighted number of paths through e (0 if none).
Rat usage(const FlowSolution& sol, const Edge& e);

struct ConstraintReport {
  bool pass = true;
  Rat worst;              // max LHS over all constraints
  int64_t worst_index = -1;  // path id (time) or edge key (capacity)
  Rat slack;              // 1 - worst (negative when failing)
};

// Sum_{e in gamma} rho(e,gamma) <= 1 for every path.
ConstraintReport check_time_constraint(const FlowSolution& sol);
// Sum_{gamma through e} w(gamma) rho(e,gamma) <= 1 for every edge.
ConstraintReport check_capacity_constraint(const FlowSolution& sol);

struct CostResult {
  bool exact = false;
  Rat exact_pow;       // finite integer p: Sum w rho^(1-p)  (the p-th power of the cost)
  Rat exact_sup;       // p = inf: sup 1/rho
  long double value = 0;  // the cost itself
};

// c_p(rho, w); with unit weights this is the single-path cost.
CostResult cost(const FlowSolution& sol, const Pexp& p);

struct BoundResult {
  bool exact = false;
  mpz_class exact_pow;  // finite integer p: Sum dist^p
  int64_t exact_sup = 0;
  long double value = 0;
};

// || dist(., sigma(.)) ||_{l^p(V)}, the admissible-cost lower bound.
BoundResult lower_bound(const GridGraph& g, const Permutation& sigma, const Pexp& p);

// rho(e,gamma) = 1 / max(F(e), len(gamma)) on path edges, exact.
Thickness standard_thickness(const GridGraph& g, const PathFamily& family);

// Weighted F(e) for a family alone (no thickness needed).
std::unordered_map<int64_t, Rat> family_usage(const GridGraph& g, const PathFamily& family);

// Total order "<_e" on paths through an edge (direction first, then owner
// lexicographic or reverse-lexicographic depending on the edge axis).
// Returns -1, 0, +1. Throws if either path does not traverse e.
int edge_order_compare(const GridGraph& g, const Edge& e, PathId g1, PathId g2,
                       const PathFamily& family);

// Convenience: builds a family from one path per vertex (unit weights).
PathFamily single_path_per_vertex(const GridGraph& g, const Permutation& sigma,
                                  std::vector<Path> paths);

}  // namespace gridflow
