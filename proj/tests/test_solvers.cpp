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

#include <random>

#include "oracle.hpp"
#include "solvers.hpp"

using namespace gridflow;

TEST_CASE("solve_1d: reversal is admissible with c_inf = 4 <= 3*||dist||_inf") {
  GridGraph g(1, 4);
  Permutation rev = Permutation::checked({3, 2, 1, 0});
  FlowSolution sol = solve_1d(g, rev);
  CHECK(check_time_constraint(sol).pass);
  CHECK(check_capacity_constraint(sol).pass);
  auto c = cost(sol, Pexp::infinity());
  CHECK(c.exact_sup == 4);
  CHECK(c.exact_sup <= 3 * displacement_sup(g, rev));
}

TEST_CASE("solve_1d: N=2 swap attains the l1 lower bound") {
  GridGraph g(1, 2);
  FlowSolution sol = solve_1d(g, Permutation::checked({1, 0}));
  CHECK(cost(sol, Pexp::integer(1)).exact_pow == 2);
  CHECK(lower_bound(g, sol.sigma, Pexp::integer(1)).exact_pow == 2);
}

TEST_CASE("predict_usage_1d matches brute-force counts") {
  GridGraph g(1, 4);
  Permutation rev = Permutation::checked({3, 2, 1, 0});
  CHECK(predict_usage_1d(g, rev, 1) == 4);
  CHECK(predict_usage_1d(g, rev, 0) == 2);
  CHECK(predict_usage_1d(g, Permutation::identity(4), 1) == 0);

  for (uint64_t seed = 0; seed < 20; ++seed) {
    GridGraph line(1, 16);
    Permutation s = random_permutation(16, seed);
    FlowSolution sol = solve_1d(line, s);
    for (int k = 0; k + 1 < line.n; ++k) {
      Edge e(k, k + 1);
      CHECK(Rat(predict_usage_1d(line, s, k)) == count_paths_brute(line, sol.family, e));
    }
  }
}

TEST_CASE("solve_2d: transposition paths take the corner (sigma1(v), v2)") {
  GridGraph g(2, 2);
  // (0,0) <-> (1,0), others fixed
  std::vector<int64_t> m(4);
  m[g.index({0, 0})] = g.index({1, 0});
  m[g.index({1, 0})] = g.index({0, 0});
  m[g.index({0, 1})] = g.index({0, 1});
  m[g.index({1, 1})] = g.index({1, 1});
  FlowSolution sol = solve_2d(g, Permutation::checked(std::move(m)));
  CHECK(check_time_constraint(sol).pass);
  CHECK(check_capacity_constraint(sol).pass);
  const Path& p = sol.family.paths[sol.family.offset[g.index({0, 0})]];
  CHECK(p.v.size() == 2);  // adjacent columns: single horizontal step
}

TEST_CASE("solve_2d: first-coordinate-then-second rule, path through z=(w1,v2)") {
  GridGraph g(2, 4);
  Path p = path_2d(g, g.index({0, 1}), g.index({3, 3}));
  CHECK(p.length() == 5);
  // passes through (3,1) = (w1, v2)
  bool through_z = false;
  for (int64_t x : p.v) through_z |= (x == g.index({3, 1}));
  CHECK(through_z);
}

TEST_CASE("predict_usage_2d equals brute-force usage on every edge (random sigma)") {
  GridGraph g(2, 8);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Permutation s = random_permutation(g.num_vertices(), seed);
    FlowSolution sol = solve_2d(g, s);
    const auto& U = sol.usage_map();
    // all edges, including unused ones
    for (int x = 0; x < g.n; ++x)
      for (int y = 0; y < g.n; ++y) {
        for (int axis = 0; axis < 2; ++axis) {
          Coords c{x, y};
          if (c[axis] + 1 >= g.n) continue;
          Coords d = c;
          d[axis]++;
          Edge e(g.index(c), g.index(d));
          auto it = U.find(sol.edge_key(e));
          Rat brute = it == U.end() ? Rat(0) : it->second;
          CHECK(Rat(predict_usage_2d(g, s, e)) == brute);
        }
      }
  }
}

TEST_CASE("canonical_family: sizes and lengths") {
  GridGraph g(3, 4);
  auto same = canonical_family(g, {1, 2, 3}, {1, 2, 3});
  REQUIRE(same.size() == 1);
  CHECK(same[0].length() == 0);

  auto fam = canonical_family(g, {0, 0, 0}, {3, 2, 1});
  CHECK(fam.size() == 4);  // a1 + 1
  for (const auto& p : fam) CHECK(p.length() == 6);

  auto fam2 = canonical_family(g, {0, 0, 0}, {2, 2, 0});
  CHECK(fam2.size() == 3);
  for (const auto& p : fam2) CHECK(p.length() == 4);
}

TEST_CASE("canonical_family paths are pairwise distinct shortest paths") {
  GridGraph g(3, 4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Coords v{pick(rng), pick(rng), pick(rng)}, w{pick(rng), pick(rng), pick(rng)};
    auto fam = canonical_family(g, v, w);
    auto all = enumerate_all_shortest(g, v, w, true);
    int64_t dist = manhattan_dist(v, w);
    for (size_t i = 0; i < fam.size(); ++i) {
      CHECK(static_cast<int64_t>(fam[i].length()) == dist);
      bool member = false;
      for (const auto& q : all.listing) member |= (q.v == fam[i].v);
      CHECK(member);
      for (size_t j = i + 1; j < fam.size(); ++j) CHECK(fam[i].v != fam[j].v);
    }
  }
}

TEST_CASE("solve_multi: admissible and within the dimensional constant") {
  GridGraph g(3, 4);
  for (uint64_t seed = 0; seed < 3; ++seed) {
    Permutation s = random_permutation(g.num_vertices(), seed);
    FlowSolution sol = solve_multi(g, s);
    CHECK(check_time_constraint(sol).pass);
    CHECK(check_capacity_constraint(sol).pass);
    // c_p <= 25 ||dist||_p, exact comparison via p-th powers
    for (long p : {1L, 3L}) {
      auto c = cost(sol, Pexp::integer(p));
      mpz_class rhs = displacement_pow_sum(g, s, p);
      Rat bound = ratpow(Rat(25), p) * Rat(rhs, mpz_class(1));
      CHECK(c.exact_pow <= bound);
    }
    auto cinf = cost(sol, Pexp::infinity());
    CHECK(cinf.exact_sup <= Rat(25) * displacement_sup(g, s));
  }
}

TEST_CASE("solve_multi: adjacent transposition attains the l1 bound") {
  GridGraph g(3, 2);
  std::vector<int64_t> m(g.num_vertices());
  for (int64_t i = 0; i < g.num_vertices(); ++i) m[i] = i;
  std::swap(m[g.index({0, 0, 0})], m[g.index({1, 0, 0})]);
  FlowSolution sol = solve_multi(g, Permutation::checked(std::move(m)));
  CHECK(cost(sol, Pexp::integer(1)).exact_pow == 2);
}

TEST_CASE("multi-D usage linf bound for canonical families") {
  GridGraph g(3, 4);
  for (uint64_t seed = 0; seed < 3; ++seed) {
    Permutation s = random_permutation(g.num_vertices(), seed + 40);
    FlowSolution sol = solve_multi(g, s);
    Rat fmax = 0;
    for (const auto& [k, f] : sol.usage_map()) fmax = std::max(fmax, f);
    // 2^(nu+1) * nu * ||sigma - id||_inf with nu = 3
    CHECK(fmax <= Rat(48) * displacement_sup(g, s));
  }
}

TEST_CASE("counterexample permutation: formula instantiations and order 4") {
  Permutation p2 = counterexample_permutation(2);
  GridGraph g2(3, 2);
  CHECK(p2(g2.index({0, 0, 0})) == g2.index({0, 1, 0}));

  Permutation p8 = counterexample_permutation(8);
  GridGraph g8(3, 8);
  CHECK(p8(g8.index({1, 3, 5})) == g8.index({5, 4, 1}));

  for (int n : {2, 3, 5}) {
    GridGraph g(3, n);
    Permutation s = counterexample_permutation(n);
    for (int64_t v = 0; v < g.num_vertices(); ++v) CHECK(s(s(s(s(v)))) == v);
  }
}

TEST_CASE("single_path_family: coordinate-by-coordinate correction") {
  GridGraph g(3, 2);
  Path same = single_path_family(g, 3, 3);
  CHECK(same.length() == 0);
  Path p = single_path_family(g, g.index({0, 0, 0}), g.index({1, 1, 1}));
  REQUIRE(p.v.size() == 4);
  CHECK(p.v[1] == g.index({1, 0, 0}));
  CHECK(p.v[2] == g.index({1, 1, 0}));
  std::mt19937_64 rng(4);
  GridGraph g4(3, 4);
  std::uniform_int_distribution<int64_t> pick(0, g4.num_vertices() - 1);
  for (int i = 0; i < 50; ++i) {
    int64_t a = pick(rng), b = pick(rng);
    CHECK(static_cast<int64_t>(single_path_family(g4, a, b).length()) ==
          manhattan_dist(g4, a, b));
  }
}

TEST_CASE("counterexample usage: published formula is a certified lower bound") {
  // The closed form 2N*min(j, N-1-j) undercounts by one band of starting
  // heights for j below the middle; exact counts come from the census.
  CHECK(counterexample_usage(8, 3) == 48);
  CHECK(counterexample_usage(8, 0) == 0);

  for (int n : {4, 8}) {
    GridGraph g(3, n);
    Permutation s = counterexample_permutation(n);
    // exact per-edge counts on one diagonal line (i = 0)
    std::vector<Path> paths;
    for (int64_t v = 0; v < g.num_vertices(); ++v)
      paths.push_back(single_path_family(g, v, s(v)));
    for (int j = 0; j + 1 < n; ++j) {
      Edge e(g.index({0, j, 0}), g.index({0, j + 1, 0}));
      int64_t exact = 0;
      for (const auto& p : paths)
        if (p.traverses(e)) ++exact;
      CHECK(counterexample_usage(n, j) <= exact);
      if (2 * j >= n - 1) CHECK(counterexample_usage(n, j) == exact);
    }
  }
}

TEST_CASE("counterexample census: exact max usage is N^2 for even N") {
  for (int n : {4, 8}) {
    auto c = counterexample_census(n);
    CHECK(c.max_usage == n * n);
    CHECK(c.sup_displacement <= 3 * (n - 1));
    // the N^2-usage edges form exactly one band j = N/2-1 (N of them)
    CHECK(c.edges_at_least_n2 == n);
  }
}

TEST_CASE("counterexample scaling: c_inf lower bound ratio grows with N") {
  auto r = [](int n) {
    auto c = counterexample_census(n);
    return static_cast<long double>(c.max_usage) /
           static_cast<long double>(c.sup_displacement);
  };
  CHECK(r(8) >= 1.5L * r(4));
  CHECK(r(16) >= 1.5L * r(8));
}

TEST_CASE("visit fraction bounds") {
  GridGraph g(3, 4);
  // z strictly between: M = 0, no path visits it
  auto f0 = visit_fraction_bound(g, {0, 0, 0}, {3, 2, 1}, {1, 1, 1});
  // z=(1,1,1): agrees with w in coordinate 3 (z3=1=w3) so M=1 here; pick a
  // truly interior point in a bigger box instead
  GridGraph g5(3, 5);
  auto fi = visit_fraction_bound(g5, {0, 0, 0}, {4, 3, 2}, {1, 1, 1});
  CHECK(fi.m == 0);
  CHECK(fi.measured == 0);

  auto fv = visit_fraction_bound(g, {0, 0, 0}, {3, 2, 1}, {0, 0, 0});
  CHECK(fv.m == 3);
  CHECK(fv.bound == 1);
  CHECK(fv.measured == 1);

  auto fz = visit_fraction_bound(g, {0, 0, 0}, {3, 2, 1}, {1, 0, 0});
  CHECK(fz.m == 2);
  CHECK(fz.bound == 1);
  CHECK(fz.measured == Rat(3, 4));  // frozen from the enumeration oracle
  CHECK(fz.measured <= fz.bound);
  (void)f0;
}

TEST_CASE("visit fraction: measured never exceeds the bound (random boxes)") {
  GridGraph g(3, 5);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Coords v{pick(rng), pick(rng), pick(rng)}, w{pick(rng), pick(rng), pick(rng)};
    Coords z(3);
    for (int i = 0; i < 3; ++i) {
      int lo = std::min(v[i], w[i]), hi = std::max(v[i], w[i]);
      std::uniform_int_distribution<int> inb(lo, hi);
      z[i] = inb(rng);
    }
    auto f = visit_fraction_bound(g, v, w, z);
    CHECK(f.measured <= f.bound);
  }
}
