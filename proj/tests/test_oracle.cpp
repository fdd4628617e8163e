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
#include <doctest.h>

#include "oracle.hpp"
#include "solvers.hpp"

using namespace gridflow;

TEST_CASE("enumerate_all_shortest: multinomial counts") {
  GridGraph g2(2, 3);
  CHECK(enumerate_all_shortest(g2, {0, 0}, {0, 0}).count == 1);
  CHECK(enumerate_all_shortest(g2, {0, 0}, {2, 1}).count == 3);
  GridGraph g3(3, 2);
  auto r = enumerate_all_shortest(g3, {0, 0, 0}, {1, 1, 1}, true);
  CHECK(r.count == 6);
  CHECK(r.listing.size() == 6);
  GridGraph big(2, 32);
  CHECK_THROWS(enumerate_all_shortest(big, {0, 0}, {15, 15}, true));
}

TEST_CASE("count_paths_brute equals the usage map on constructed solutions") {
  GridGraph g(2, 5);
  Permutation s = random_permutation(g.num_vertices(), 17);
  FlowSolution sol = solve_2d(g, s);
  const auto& U = sol.usage_map();
  for (const auto& [key, f] : U) {
    Edge e(key / g.num_vertices(), key % g.num_vertices());
    CHECK(count_paths_brute(g, sol.family, e) == f);
  }
}

TEST_CASE("optimizer: single path of length L converges to rho = 1/L") {
  GridGraph g(1, 5);
  std::vector<int64_t> m{4, 0, 1, 2, 3};  // cycle; vertex 0 has the long path
  Permutation s = Permutation::checked(std::move(m));
  FlowSolution sol = solve_1d(g, s);
  ConvexInnerProblem prob;
  prob.graph = &g;
  prob.sigma = &s;
  prob.family = &sol.family;
  prob.p = Pexp::integer(2);
  auto res = optimize_thickness(prob);
  CHECK(res.feasible_exact);
  // vertex 0's path has length 4 and shares edges with short unit paths;
  // the analytic single-path optimum for an isolated path is rho = 1/L:
  // check on a truly isolated instance
  GridGraph h(1, 4);
  std::vector<int64_t> mm{3, 1, 2, 0};
  Permutation t = Permutation::checked(std::move(mm));
  FlowSolution iso = solve_1d(h, t);
  ConvexInnerProblem prob2{&h, &t, &iso.family, Pexp::integer(2), 800, 0.25L};
  auto res2 = optimize_thickness(prob2);
  // two overlapping length-3 paths: optimum rho is 1/max(F, len) here too;
  // cost must sit inside the sandwich
  auto lb = lower_bound(h, t, Pexp::integer(2));
  FlowSolution iso_std = iso;
  auto std_cost = cost(iso_std, Pexp::integer(2));
  CHECK(res2.final_cost.value >= lb.value - 1e-9L);
  CHECK(res2.final_cost.value <= std_cost.value + 1e-9L);
}

TEST_CASE("optimizer: identity is empty with zero cost") {
  GridGraph g(1, 4);
  Permutation id = Permutation::identity(4);
  FlowSolution sol = solve_1d(g, id);
  ConvexInnerProblem prob{&g, &id, &sol.family, Pexp::integer(2), 100, 0.25L};
  auto res = optimize_thickness(prob);
  CHECK(res.final_cost.value == 0);
}

TEST_CASE("optimizer sandwich on 1D reversal, p = 2") {
  GridGraph g(1, 4);
  Permutation rev = Permutation::checked({3, 2, 1, 0});
  FlowSolution sol = solve_1d(g, rev);
  ConvexInnerProblem prob{&g, &rev, &sol.family, Pexp::integer(2), 500, 0.25L};
  auto res = optimize_thickness(prob);
  CHECK(res.feasible_exact);
  auto lb = lower_bound(g, rev, Pexp::integer(2));
  auto sc = cost(sol, Pexp::integer(2));
  CHECK(res.final_cost.value >= lb.value - 1e-9L);
  CHECK(res.final_cost.value <= sc.value + 1e-9L);
  // trace is non-increasing
  for (size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace[i] <= res.trace[i - 1] + 1e-15L);
  // exact feasibility after rationalization
  FlowSolution opt{g, rev, sol.family, res.rho};
  CHECK(check_time_constraint(opt).pass);
  CHECK(check_capacity_constraint(opt).pass);
}
