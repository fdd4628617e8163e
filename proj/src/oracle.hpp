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

// Direct scan, independent of the usage cache.
Rat count_paths_brute(const GridGraph& g, const PathFamily& family, const Edge& e);

struct ShortestPaths {
  mpz_class count;               // multinomial (sum a_i)! / prod a_i!
  std::vector<Path> listing;     // filled only when list = true
};

// Counts all monotone shortest paths v -> w; lists them when the Manhattan
// distance is within the listing budget (18).
ShortestPaths enumerate_all_shortest(const GridGraph& g, const Coords& v, const Coords& w,
                                     bool list = false);

struct ConvexInnerProblem {
  const GridGraph* graph = nullptr;
  const Permutation* sigma = nullptr;
  const PathFamily* family = nullptr;
  Pexp p = Pexp::integer(2);
  int iterations = 500;
  long double step0 = 0.25L;
};

struct OptimizeResult {
  Thickness rho;                     // admissible, rationalized
  bool feasible_exact = false;       // exact recheck after rationalization
  bool converged = false;            // improved or matched the start
  CostResult final_cost;
  std::vector<long double> trace;    // best-feasible cost per iteration (non-increasing)
};

// Numeric inner minimization of c_p over thicknesses for a fixed family:
// projected subgradient on s = 1/rho with multiplicative repair onto the
// time and capacity polytopes. Never returns worse than standard_thickness.
OptimizeResult optimize_thickness(const ConvexInnerProblem& prob);

}  // namespace gridflow
