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
#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gridflow {

Rat count_paths_brute(const GridGraph& g, const PathFamily& family, const Edge& e) {
  (void)g;
  Rat total = 0;
  for (size_t pi = 0; pi < family.paths.size(); ++pi)
    if (family.paths[pi].traverses(e)) total += family.weight[pi];
  return total;
}

ShortestPaths enumerate_all_shortest(const GridGraph& g, const Coords& v, const Coords& w,
                                     bool list) {
  ShortestPaths out;
  std::vector<int64_t> gaps(g.nu);
  int64_t total = 0;
  for (int i = 0; i < g.nu; ++i) {
    gaps[i] = std::abs(static_cast<int64_t>(w[i]) - v[i]);
    total += gaps[i];
  }
  mpz_class cnt;
  mpz_fac_ui(cnt.get_mpz_t(), static_cast<unsigned long>(total));
  for (int i = 0; i < g.nu; ++i) {
    mpz_class fi;
    mpz_fac_ui(fi.get_mpz_t(), static_cast<unsigned long>(gaps[i]));
    mpz_divexact(cnt.get_mpz_t(), cnt.get_mpz_t(), fi.get_mpz_t());
  }
  out.count = cnt;
  if (!list) return out;
  if (total > 18) throw std::invalid_argument("enumerate_all_shortest: distance exceeds listing budget 18");

  std::vector<int> step(g.nu);
  for (int i = 0; i < g.nu; ++i) step[i] = w[i] >= v[i] ? 1 : -1;
  Coords cur = v;
  std::vector<int64_t> verts{g.index(cur)};
  std::vector<int64_t> remaining = gaps;
  std::function<void()> rec = [&]() {
    bool done = true;
    for (int i = 0; i < g.nu; ++i)
      if (remaining[i]) done = false;
    if (done) {
      out.listing.push_back(Path{verts});
      return;
    }
    for (int i = 0; i < g.nu; ++i) {
      if (!remaining[i]) continue;
      --remaining[i];
      cur[i] += step[i];
      verts.push_back(g.index(cur));
      rec();
      verts.pop_back();
      cur[i] -= step[i];
      ++remaining[i];
    }
  };
  rec();
  return out;
}

namespace {

struct Var {
  PathId path;
  int edge_idx;
  int64_t edge_key;
};

}  // namespace

OptimizeResult optimize_thickness(const ConvexInnerProblem& prob) {
  const GridGraph& g = *prob.graph;
  const PathFamily& fam = *prob.family;
  // p = inf is smoothed by a large finite exponent; acceptance-grade bounds
  // for the sup case come from the analytic argument, not from here.
  long double pval = prob.p.is_inf() ? 64.0L : prob.p.value();

  Thickness start = standard_thickness(g, fam);
  std::vector<Var> vars;
  std::vector<long double> s;      // s = 1/rho >= 1
  std::vector<long double> wgt;    // path weight per variable
  std::vector<std::vector<int>> by_path(fam.size());
  std::unordered_map<int64_t, std::vector<int>> by_edge;
  int64_t nv = g.num_vertices();
  for (size_t pi = 0; pi < fam.size(); ++pi) {
    const Path& p = fam.paths[pi];
    for (size_t i = 0; i + 1 < p.v.size(); ++i) {
      Edge e = p.edge(i);
      int id = static_cast<int>(vars.size());
      vars.push_back({static_cast<PathId>(pi), static_cast<int>(i), e.a * nv + e.b});
      s.push_back(to_ld(Rat(1) / start.rho[pi][i]));
      wgt.push_back(to_ld(fam.weight[pi]));
      by_path[pi].push_back(id);
      by_edge[vars.back().edge_key].push_back(id);
    }
  }

  auto objective = [&](const std::vector<long double>& sv) {
    long double acc = 0;
    for (size_t i = 0; i < sv.size(); ++i) acc += wgt[i] * powl(sv[i], pval - 1.0L);
    return acc;
  };
  auto repair = [&](std::vector<long double>& sv) {
    for (int rounds = 0; rounds < 64; ++rounds) {
      bool ok = true;
      for (size_t pi = 0; pi < fam.size(); ++pi) {
        long double lhs = 0;
        for (int id : by_path[pi]) lhs += 1.0L / sv[id];
        if (lhs > 1.0L) {
          ok = false;
          for (int id : by_path[pi]) sv[id] *= lhs;
        }
      }
      for (auto& [key, ids] : by_edge) {
        long double lhs = 0;
        for (int id : ids) lhs += wgt[id] / sv[id];
        if (lhs > 1.0L) {
          ok = false;
          for (int id : ids) sv[id] *= lhs;
        }
      }
      for (auto& x : sv) x = std::max(x, 1.0L);
      if (ok) break;
    }
  };

  OptimizeResult res;
  repair(s);
  std::vector<long double> best = s;
  long double best_obj = objective(s);
  res.trace.push_back(best_obj);

  long double scale = 0;
  for (auto x : s) scale = std::max(scale, x);
  for (int it = 1; it <= prob.iterations; ++it) {
    long double eta = prob.step0 * scale / sqrtl(static_cast<long double>(it));
    std::vector<long double> cand = best;
    long double gnorm = 0;
    std::vector<long double> grad(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) {
      grad[i] = wgt[i] * (pval - 1.0L) * powl(cand[i], pval - 2.0L);
      gnorm += grad[i] * grad[i];
    }
    gnorm = sqrtl(gnorm);
    if (gnorm == 0) break;
    for (size_t i = 0; i < cand.size(); ++i) cand[i] -= eta * grad[i] / gnorm;
    repair(cand);
    long double obj = objective(cand);
    if (obj < best_obj) {
      best_obj = obj;
      best = cand;
      res.converged = true;
    }
    res.trace.push_back(best_obj);
  }

  // Rationalize with a safety margin, then recheck exactly; fall back to the
  // standard thickness if the rounded point is infeasible.
  Thickness rounded;
  rounded.rho.resize(fam.size());
  for (size_t pi = 0; pi < fam.size(); ++pi) rounded.rho[pi].resize(by_path[pi].size());
  for (size_t i = 0; i < best.size(); ++i) {
    long double rho = (1.0L - 1e-9L) / best[i];
    Rat r = rat_limit_denominator(static_cast<long double>(rho), 1000000000UL);
    if (r <= 0) r = Rat(1, 1000000000L);
    if (r > 1) r = 1;
    rounded.rho[vars[i].path][vars[i].edge_idx] = r;
  }
  FlowSolution cand_sol{g, *prob.sigma, fam, rounded};
  bool ok = check_time_constraint(cand_sol).pass && check_capacity_constraint(cand_sol).pass;
  CostResult cand_cost = cost(cand_sol, prob.p);
  FlowSolution start_sol{g, *prob.sigma, fam, start};
  CostResult start_cost = cost(start_sol, prob.p);
  if (ok && cand_cost.value <= start_cost.value) {
    res.rho = std::move(rounded);
    res.feasible_exact = true;
    res.final_cost = cand_cost;
  } else {
    res.rho = std::move(start);
    res.feasible_exact = true;
    res.converged = false;
    res.final_cost = start_cost;
  }
  return res;
}

}  // namespace gridflow
