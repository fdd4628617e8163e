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
#include "json_io.hpp"

#include <fstream>
#include <json.hpp>

namespace gridflow {

using nlohmann::json;

PermFile load_permutation_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("nu") || !j.contains("n") || !j.contains("perm"))
    throw std::invalid_argument("permutation json: need nu, n, perm");
  GridGraph g(j.at("nu").get<int>(), j.at("n").get<int>());
  std::vector<int64_t> m = j.at("perm").get<std::vector<int64_t>>();
  if (static_cast<int64_t>(m.size()) != g.num_vertices())
    throw std::invalid_argument("permutation json: perm length != n^nu");
  return PermFile{g, Permutation::checked(std::move(m))};
}

PermFile load_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_permutation_json(text);
}

std::string dump_permutation_json(const GridGraph& g, const Permutation& sigma) {
  json j;
  j["nu"] = g.nu;
  j["n"] = g.n;
  j["perm"] = sigma.map;
  return j.dump();
}

std::string dump_solution_json(const FlowSolution& sol) {
  json j;
  j["nu"] = sol.graph.nu;
  j["n"] = sol.graph.n;
  j["perm"] = sol.sigma.map;
  json paths = json::array();
  for (size_t pi = 0; pi < sol.family.size(); ++pi) {
    json p;
    p["owner"] = sol.family.owner[pi];
    p["vertices"] = sol.family.paths[pi].v;
    p["weight"] = frac_str(sol.family.weight[pi]);
    json rho = json::array();
    for (const Rat& r : sol.thickness.rho[pi]) rho.push_back(frac_str(r));
    p["rho"] = std::move(rho);
    paths.push_back(std::move(p));
  }
  j["paths"] = std::move(paths);
  return j.dump();
}

FlowSolution load_solution_json(const std::string& text) {
  json j = json::parse(text);
  GridGraph g(j.at("nu").get<int>(), j.at("n").get<int>());
  Permutation sigma = Permutation::checked(j.at("perm").get<std::vector<int64_t>>());
  PathFamily fam;
  Thickness th;
  fam.offset.assign(g.num_vertices() + 1, 0);
  std::vector<std::vector<size_t>> per_owner(g.num_vertices());
  const json& paths = j.at("paths");
  for (size_t i = 0; i < paths.size(); ++i)
    per_owner[paths[i].at("owner").get<int64_t>()].push_back(i);
  for (int64_t v = 0; v < g.num_vertices(); ++v) {
    fam.offset[v] = static_cast<int32_t>(fam.paths.size());
    for (size_t i : per_owner[v]) {
      const json& p = paths[i];
      fam.paths.push_back(Path::checked(g, p.at("vertices").get<std::vector<int64_t>>()));
      fam.weight.push_back(parse_frac(p.at("weight").get<std::string>()));
      fam.owner.push_back(v);
      std::vector<Rat> rho;
      for (const auto& r : p.at("rho")) rho.push_back(parse_frac(r.get<std::string>()));
      if (rho.size() != fam.paths.back().length())
        throw std::invalid_argument("solution json: rho length mismatch");
      for (const Rat& r : rho)
        if (r <= 0 || r > 1) throw std::invalid_argument("solution json: rho out of (0,1]");
      th.rho.push_back(std::move(rho));
    }
  }
  fam.offset[g.num_vertices()] = static_cast<int32_t>(fam.paths.size());
  fam.validate(g, sigma);
  return FlowSolution{g, sigma, std::move(fam), std::move(th)};
}

}  // namespace gridflow
