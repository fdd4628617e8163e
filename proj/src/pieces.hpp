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

#include <memory>
#include <string>

#include "geom.hpp"
#include "rational.hpp"

namespace gridflow {

struct SnakeGeom;  // snake.hpp

enum class PieceKind { Constant, PipeWidth, CornerHalf, Rotation, SnakeCell, GateCell };

const char* piece_kind_name(PieceKind k);

// Straight pipe in the local frame: flow along +z from z = 0 to z = D.
// The x-span interpolates linearly between source and sink (width change
// and/or shear); the y-span has constant width wy and a linear shear.
// Constant kind means w_in == w_out (pure transport, paper's parallel flow);
// PipeWidth covers the width-change flow and sheared combinations.
struct PipeParams {
  Real D = 1;
  Real x0_in = 0, w_in = 1;
  Real x0_out = 0, w_out = 1;
  Real y0_in = 0, wy = 1, y0_out = 0;
  Real mu_in = 1;

  Real mu_out() const { return mu_in * w_in / w_out; }
  Real width(Real z) const { return w_in + (w_out - w_in) * z / D; }
  Real x0(Real z) const { return x0_in + (x0_out - x0_in) * z / D; }
  Real y0(Real z) const { return y0_in + (y0_out - y0_in) * z / D; }
};

// Banked corner in the lemma frame: source A = (0,a1) x (0,a2) x {0} entered
// along +z, sink B = {L} x (0,a2) x (L-a1, L) exited along +x, L > a1.
// half = 1 is the Lambert-W deceleration half (A to the diagonal checkpoint),
// half = 2 its reflection (diagonal to B).
struct CornerParams {
  Real a1 = 0.25, a2 = 1, L = 1, mu = 1;
  int half = 1;

  Real F(Real x1) const;       // banked angular rate profile, F(0) = 0
  Real spread() const;         // e^{L/(L-a1)}: max factor on the a2 span
};

// Quarter-turn lift: source A' x {0} rotates to A'_{pi/2} x {h}.
struct RotationParams {
  Real r = 1;                   // containment radius of A'
  Real mu0 = 1;
  Real h = 1;                   // lift height (the lemma states h = 1)
  Real x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;  // A' in local xy
  int turn = 1;                 // +1 ccw, -1 cw
};

struct SnakeParams {
  std::shared_ptr<const SnakeGeom> geom;
};

struct FieldPiece {
  PieceKind kind = PieceKind::Constant;
  Frame frame;
  PipeParams pipe;
  CornerParams corner;
  RotationParams rot;
  SnakeParams snake;
  int piece_id = -1;

  // velocity at a world point (zero outside the support)
  Vec3 eval(const Vec3& world) const;
  bool contains(const Vec3& world, Real slack = 0) const;

  AABB bbox() const;
  // conservative convex decomposition of the support, for the union audit
  std::vector<ConvexPoly> hull() const;

  Real transit_time() const;          // source-to-sink time
  AffineMap checkpoint_map() const;   // world-coordinate source->sink map
  Rect2D source_rect() const;
  Rect2D sink_rect() const;
  Real source_speed() const;
  Real sink_speed() const;

  Real sup_bound() const;             // certified bound on |u|
  Real volume() const;                // support measure (exact; swept volume)
  // certified upper bound on the integral of |u|^p over the support,
  // and the exactly integrable part (the normal component for pipes)
  Real lp_pow_bound(Real p) const;
  Real lp_pow_exact_normal(Real p) const;

  struct Advance {
    Vec3 end;
    Real used = 0;
    bool exited = false;  // reached the sink surface
  };
  // Closed-form motion inside the piece for up to t_budget.
  Advance advance(const Vec3& world, Real t_budget) const;

  // --- constructors for the paper's primitives (lemma frames) ---
  static FieldPiece parallel(const Frame& f, Real a1, Real wy, Real D1, Real D3, Real mu);
  static FieldPiece pipe_width(const Frame& f, Real a1, Real b1, Real wy, Real D3, Real mu_in);
  static FieldPiece rotation(const Frame& f, Real x_lo, Real x_hi, Real y_lo, Real y_hi,
                             Real mu0, int turn = 1, Real h = 1);
};

// The corner comes as a reflected pair sharing one frame.
std::pair<FieldPiece, FieldPiece> corner_pair(const Frame& f, Real a1, Real a2, Real L, Real mu);
// Full source->sink data for a corner pair.
Real corner_transit(Real L, Real mu);
AffineMap corner_map_local();  // (x1,x2,0) -> (L,x2,L-x1) given L via frame helper in .cpp

}  // namespace gridflow
