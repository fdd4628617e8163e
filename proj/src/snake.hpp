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

#include <utility>

#include "rational.hpp"

namespace gridflow {

struct SnakeTrace {
  enum Status { BUDGET, EXIT_GOUT, EXIT_GIN, STUCK };
  Rat x, y;
  Rat time_used;
  Status status = BUDGET;
};

struct SnakeTraceLd {
  long double x = 0, y = 0, time_used = 0;
  SnakeTrace::Status status = SnakeTrace::BUDGET;
};

// Boustrophedon flow inside one subcube plus its gate, in subcube-local
// coordinates: cube (0,ell)^2, gate box (ell, ell+lambda/2) x
// (ell/2-lambda/2, ell/2+lambda/2); the third coordinate is inert.
// All geometry lives on the (lambda/2)-grid, so trajectories are exact
// rational polylines.
struct SnakeGeom {
  Rat ell, lambda, mu0;
  long kappa = 2;

  enum Region { B1, B2, B3, B4, B5, B6, GMID, OUTSIDE };

  Region region(const Rat& x, const Rat& y) const;
  Region region_ld(long double x, long double y) const;
  // unit direction of the flow in a region
  std::pair<int, int> dir(Region r) const;
  std::pair<long double, long double> velocity_dir(long double x, long double y) const;

  bool in_cube(long double x, long double y, long double slack) const;
  bool in_gate_box(long double x, long double y, long double slack) const;

  // Exact trace from an interior point for up to `budget` time units
  // (budget < 0 = run until the flow leaves through a gate face).
  SnakeTrace trace(Rat x, Rat y, Rat budget) const;
  SnakeTraceLd trace_ld(long double x, long double y, long double budget) const;

  // A_in entry-to-exit passage time at entry height y (the lemma's t_z).
  Rat passage_time(const Rat& y_entry) const;
  // G_in to G_out total (the gate corollary): (2 ell kappa + lambda) / mu0.
  Rat gate_transit() const;
};

}  // namespace gridflow
