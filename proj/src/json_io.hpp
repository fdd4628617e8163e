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

#include <string>

#include "discrete.hpp"

namespace gridflow {

struct PermFile {
  GridGraph graph;
  Permutation sigma;
};

// {"nu": int, "n": int, "perm": [flattened indices]}
PermFile load_permutation_json(const std::string& text);
PermFile load_permutation_file(const std::string& path);
std::string dump_permutation_json(const GridGraph& g, const Permutation& sigma);

// FlowSolution dump: paths as vertex-index arrays, weights and rho as "num/den".
std::string dump_solution_json(const FlowSolution& sol);
FlowSolution load_solution_json(const std::string& text);

}  // namespace gridflow
