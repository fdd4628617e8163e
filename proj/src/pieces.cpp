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
#include "pieces.hpp"

#include <algorithm>

#include "lambert.hpp"
#include "snake.hpp"

namespace gridflow {

const char* piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Constant: return "constant";
    case PieceKind::PipeWidth: return "pipe_width";
    case PieceKind::CornerHalf: return "corner_half";
    case PieceKind::Rotation: return "rotation";
    case PieceKind::SnakeCell: return "snake_cell";
    case PieceKind::GateCell: return "gate_cell";
  }
  return "?";
}

AffineMap AffineMap::compose(const AffineMap& f, const AffineMap& g) {
  AffineMap r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = 0;
      for (int k = 0; k < 3; ++k) r.m[i][j] += f.m[i][k] * g.m[k][j];
    }
  }
  r.t = f(g.t) - f(Vec3{}) + f.t;  // f(g(x)) = f.m (g.m x + g.t) + f.t
  r.t = f.t;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.t[i] += f.m[i][k] * g.t[k];
  return r;
}

namespace {

// Conjugate a local affine map by the frame isometry.
AffineMap to_world_map(const Frame& f, const AffineMap& local) {
  AffineMap R;  // world = R_m * local + origin
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R.m[i][j] = 0;
  for (int j = 0; j < 3; ++j) R.m[f.axis[j]][j] = static_cast<Real>(f.sgn[j]);
  R.t = f.origin;
  AffineMap Rinv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Rinv.m[i][j] = 0;
  for (int j = 0; j < 3; ++j) Rinv.m[j][f.axis[j]] = static_cast<Real>(f.sgn[j]);
  Rinv.t = Vec3{};
  Vec3 o = f.origin;
  for (int j = 0; j < 3; ++j) Rinv.t[j] = -static_cast<Real>(f.sgn[j]) * o[f.axis[j]];
  return AffineMap::compose(R, AffineMap::compose(local, Rinv));
}

HalfSpace plane_to_world(const Frame& f, const Vec3& n_local, Real d_local) {
  Vec3 n_world = f.dir_to_world(n_local);
  return HalfSpace{n_world, d_local + n_world.dot(f.origin)};
}

Rect2D rect_from_local(const Frame& f, int local_normal, Real off, int la, Interval sa, int lb,
                       Interval sb, int flow_sign) {
  // rectangle with local normal axis local_normal at local offset off,
  // spanning sa on local axis la and sb on local axis lb
  Rect2D r;
  r.normal_axis = f.axis[local_normal];
  r.offset = f.sgn[local_normal] * off + f.origin[r.normal_axis];
  int wa = f.axis[la], wb = f.axis[lb];
  auto mk = [&](int lax, Interval s) {
    Real a = f.sgn[lax == la ? la : lb], base = f.origin[f.axis[lax]];
    Interval w{base + a * s.lo, base + a * s.hi};
    if (w.lo > w.hi) std::swap(w.lo, w.hi);
    return w;
  };
  Interval ia = mk(la, sa), ib = mk(lb, sb);
  if (wa < wb) {
    r.span[0] = ia;
    r.span[1] = ib;
  } else {
    r.span[0] = ib;
    r.span[1] = ia;
  }
  r.orient = f.sgn[local_normal] * flow_sign;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- corner math

Real CornerParams::F(Real x1) const {
  if (x1 <= 0) return 0;
  Real q = L / (x1 - L);  // in (-L/(L-a1), -1)
  Real arg = q * expl(q);
  Real w = lambert_w_principal(arg);
  return (mu / L) * (w - q);
}

Real CornerParams::spread() const { return expl(L / (L - a1)); }

// ---------------------------------------------------------------- FieldPiece

Vec3 FieldPiece::eval(const Vec3& world) const {
  if (!contains(world)) return Vec3{};
  Vec3 p = frame.to_local(world);
  Vec3 u;
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real w = q.width(p.z);
      Real uz = q.mu_in * q.w_in / w;
      Real xi = (p.x - q.x0(p.z)) / w;
      Real dx0 = (q.x0_out - q.x0_in) / q.D, dw = (q.w_out - q.w_in) / q.D;
      Real dy0 = (q.y0_out - q.y0_in) / q.D;
      u = {uz * (dx0 + xi * dw), uz * dy0, uz};
      break;
    }
    case PieceKind::CornerHalf: {
      const auto& c = corner;
      if (c.half == 1) {
        Real F = c.F(p.x);
        u = {0, F * p.y, c.mu - F * p.z};
      } else {
        Real F = c.F(c.L - p.z);
        u = {c.mu - F * (c.L - p.x), -F * p.y, 0};
      }
      break;
    }
    case PieceKind::Rotation: {
      Real om = rot.turn * (M_PIl / 2) * rot.mu0 / rot.h;
      u = {-om * p.y, om * p.x, rot.mu0};
      break;
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell: {
      auto dir = snake.geom->velocity_dir(to_ld_pair(p.x, p.y));
      Real mu = to_ld(snake.geom->mu0);
      u = {dir.first * mu, dir.second * mu, 0};
      break;
    }
  }
  return frame.dir_to_world(u);
}

bool FieldPiece::contains(const Vec3& world, Real slack) const {
  Vec3 p = frame.to_local(world);
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      if (p.z <= slack || p.z >= q.D - slack) return false;
      Real x0 = q.x0(p.z), w = q.width(p.z), y0 = q.y0(p.z);
      return p.x > x0 + slack && p.x < x0 + w - slack && p.y > y0 + slack &&
             p.y < y0 + q.wy - slack;
    }
    case PieceKind::CornerHalf: {
      const auto& c = corner;
      Real x = p.x, y = p.y, z = p.z;
      if (c.half == 2) {
        x = c.L - p.z;
        z = c.L - p.x;
      }
      if (x <= slack || x >= c.a1 - slack) return false;
      if (z <= slack || z >= c.L - x - slack) return false;
      Real F = c.F(x);
      Real zeta = 1 - F * z / c.mu;
      Real y0 = y * zeta;
      return y0 > slack && y0 < c.a2 - slack;
    }
    case PieceKind::Rotation: {
      if (p.z <= slack || p.z >= rot.h - slack) return false;
      Real th = rot.turn * (M_PIl / 2) * p.z / rot.h;
      Real cx = cosl(th), sx = sinl(th);
      Real qx = cx * p.x + sx * p.y, qy = -sx * p.x + cx * p.y;
      return qx > rot.x_lo + slack && qx < rot.x_hi - slack && qy > rot.y_lo + slack &&
             qy < rot.y_hi - slack;
    }
    case PieceKind::SnakeCell:
      return snake.geom->in_cube(p.x, p.y, slack) && p.z > slack &&
             p.z < to_ld(snake.geom->ell) - slack &&
             snake.geom->region_ld(p.x, p.y) != SnakeGeom::OUTSIDE;
    case PieceKind::GateCell:
      return snake.geom->in_gate_box(p.x, p.y, slack) && p.z > slack &&
             p.z < to_ld(snake.geom->ell) - slack;
  }
  return false;
}

AABB FieldPiece::bbox() const {
  // assemble local corner candidates, then map through the frame
  std::vector<Vec3> pts;
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      for (Real z : {static_cast<Real>(0), q.D}) {
        Real x0 = q.x0(z), w = q.width(z), y0 = q.y0(z);
        for (Real x : {x0, x0 + w})
          for (Real y : {y0, y0 + q.wy}) pts.push_back({x, y, z});
      }
      break;
    }
    case PieceKind::CornerHalf: {
      const auto& c = corner;
      Real ymax = c.a2 * c.spread();
      if (c.half == 1) {
        pts = {{0, 0, 0}, {c.a1, ymax, c.L}};
      } else {
        pts = {{0, 0, c.L - c.a1}, {c.L, ymax, c.L}};
      }
      break;
    }
    case PieceKind::Rotation: {
      Real r = rot.r;
      pts = {{-r, -r, 0}, {r, r, rot.h}};
      break;
    }
    case PieceKind::SnakeCell: {
      Real l = to_ld(snake.geom->ell);
      pts = {{0, 0, 0}, {l, l, l}};
      break;
    }
    case PieceKind::GateCell: {
      Real l = to_ld(snake.geom->ell), la = to_ld(snake.geom->lambda);
      pts = {{l, l / 2 - la / 2, 0}, {l + la / 2, l / 2 + la / 2, l}};
      break;
    }
  }
  AABB box{frame.to_world(pts[0]), frame.to_world(pts[0])};
  for (const auto& p : pts) box.expand(frame.to_world(p));
  return box;
}

std::vector<ConvexPoly> FieldPiece::hull() const {
  std::vector<ConvexPoly> out;
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      ConvexPoly poly;
      Real dx0 = (q.x0_out - q.x0_in) / q.D, dw = (q.w_out - q.w_in) / q.D;
      Real dy0 = (q.y0_out - q.y0_in) / q.D;
      poly.planes.push_back(plane_to_world(frame, {0, 0, -1}, 0));
      poly.planes.push_back(plane_to_world(frame, {0, 0, 1}, q.D));
      poly.planes.push_back(plane_to_world(frame, {-1, 0, dx0}, -q.x0_in));
      poly.planes.push_back(plane_to_world(frame, {1, 0, -(dx0 + dw)}, q.x0_in + q.w_in));
      poly.planes.push_back(plane_to_world(frame, {0, -1, dy0}, -q.y0_in));
      poly.planes.push_back(plane_to_world(frame, {0, 1, -dy0}, q.y0_in + q.wy));
      out.push_back(std::move(poly));
      break;
    }
    case PieceKind::CornerHalf: {
      // the lemma's containment boxes, tight enough for the disjointness audit
      const auto& c = corner;
      Real ymax = c.a2 * c.spread();
      ConvexPoly poly;
      if (c.half == 1) {
        poly.planes.push_back(plane_to_world(frame, {-1, 0, 0}, 0));
        poly.planes.push_back(plane_to_world(frame, {1, 0, 0}, c.a1));
        poly.planes.push_back(plane_to_world(frame, {0, 0, -1}, 0));
        poly.planes.push_back(plane_to_world(frame, {1, 0, 1}, c.L));  // x1 + x3 <= L
      } else {
        poly.planes.push_back(plane_to_world(frame, {0, 0, -1}, -(c.L - c.a1)));
        poly.planes.push_back(plane_to_world(frame, {0, 0, 1}, c.L));
        poly.planes.push_back(plane_to_world(frame, {1, 0, 0}, c.L));
        poly.planes.push_back(plane_to_world(frame, {-1, 0, -1}, -c.L));  // x1 + x3 >= L
      }
      poly.planes.push_back(plane_to_world(frame, {0, -1, 0}, 0));
      poly.planes.push_back(plane_to_world(frame, {0, 1, 0}, ymax));
      out.push_back(std::move(poly));
      break;
    }
    case PieceKind::Rotation: {
      ConvexPoly poly;
      poly.add_box(bbox());
      out.push_back(std::move(poly));
      break;
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell: {
      ConvexPoly poly;
      poly.add_box(bbox());
      out.push_back(std::move(poly));
      break;
    }
  }
  return out;
}

Real FieldPiece::transit_time() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return pipe.D * (pipe.w_in + pipe.w_out) / (2 * pipe.mu_in * pipe.w_in);
    case PieceKind::CornerHalf:
      return corner.L / corner.mu;
    case PieceKind::Rotation:
      return rot.h / rot.mu0;
    case PieceKind::SnakeCell:
    case PieceKind::GateCell:
      throw std::logic_error("transit_time: snake/gate times depend on the entry point");
  }
  return 0;
}

AffineMap FieldPiece::checkpoint_map() const {
  AffineMap local;
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real s = q.w_out / q.w_in;
      local.m = {{{s, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
      local.t = {q.x0_out - q.x0_in * s, q.y0_out - q.y0_in, q.D};
      break;
    }
    case PieceKind::Rotation: {
      Real s = static_cast<Real>(rot.turn);
      local.m = {{{0, -s, 0}, {s, 0, 0}, {0, 0, 0}}};
      local.t = {0, 0, rot.h};
      break;
    }
    default:
      throw std::logic_error("checkpoint_map: not affine for this piece kind");
  }
  return to_world_map(frame, local);
}

Rect2D FieldPiece::source_rect() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return rect_from_local(frame, 2, 0, 0, {pipe.x0_in, pipe.x0_in + pipe.w_in}, 1,
                             {pipe.y0_in, pipe.y0_in + pipe.wy}, 1);
    case PieceKind::CornerHalf:
      if (corner.half == 1)
        return rect_from_local(frame, 2, 0, 0, {0, corner.a1}, 1, {0, corner.a2}, 1);
      throw std::logic_error("source_rect: corner half 2 starts at the diagonal");
    case PieceKind::Rotation:
      return rect_from_local(frame, 2, 0, 0, {rot.x_lo, rot.x_hi}, 1, {rot.y_lo, rot.y_hi}, 1);
    default:
      throw std::logic_error("source_rect: undefined for this piece kind");
  }
}

Rect2D FieldPiece::sink_rect() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return rect_from_local(frame, 2, pipe.D, 0, {pipe.x0_out, pipe.x0_out + pipe.w_out}, 1,
                             {pipe.y0_out, pipe.y0_out + pipe.wy}, 1);
    case PieceKind::CornerHalf:
      if (corner.half == 2)
        return rect_from_local(frame, 0, corner.L, 2, {corner.L - corner.a1, corner.L}, 1,
                               {0, corner.a2}, 1);
      throw std::logic_error("sink_rect: corner half 1 ends at the diagonal");
    case PieceKind::Rotation: {
      // quarter turn of A' lifted to z = h
      Interval xs, ys;
      if (rot.turn == 1) {
        xs = {-rot.y_hi, -rot.y_lo};
        ys = {rot.x_lo, rot.x_hi};
      } else {
        xs = {rot.y_lo, rot.y_hi};
        ys = {-rot.x_hi, -rot.x_lo};
      }
      return rect_from_local(frame, 2, rot.h, 0, xs, 1, ys, 1);
    }
    default:
      throw std::logic_error("sink_rect: undefined for this piece kind");
  }
}

Real FieldPiece::source_speed() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return pipe.mu_in;
    case PieceKind::CornerHalf:
      return corner.mu;
    case PieceKind::Rotation:
      return rot.mu0;
    default:
      throw std::logic_error("source_speed: undefined");
  }
}

Real FieldPiece::sink_speed() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return pipe.mu_out();
    case PieceKind::CornerHalf:
      return corner.mu;
    case PieceKind::Rotation:
      return rot.mu0;
    default:
      throw std::logic_error("sink_speed: undefined");
  }
}

Real FieldPiece::sup_bound() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real mu_max = q.mu_in * q.w_in / std::min(q.w_in, q.w_out);
      Real dx0 = (q.x0_out - q.x0_in) / q.D, dw = (q.w_out - q.w_in) / q.D;
      Real sx = std::max(fabsl(dx0), fabsl(dx0 + dw));
      Real sy = fabsl((q.y0_out - q.y0_in) / q.D);
      return mu_max * sqrtl(1 + sx * sx + sy * sy);
    }
    case PieceKind::CornerHalf: {
      const auto& c = corner;
      return c.mu * (1 + (c.a2 / c.L) * expl(2 * c.L / (c.L - c.a1)));
    }
    case PieceKind::Rotation: {
      Real rad = 0;
      for (Real x : {rot.x_lo, rot.x_hi})
        for (Real y : {rot.y_lo, rot.y_hi}) rad = std::max(rad, sqrtl(x * x + y * y));
      Real om = (M_PIl / 2) / rot.h;
      return rot.mu0 * sqrtl(1 + om * om * rad * rad);
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell:
      return to_ld(snake.geom->mu0);
  }
  return 0;
}

Real FieldPiece::volume() const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth:
      return pipe.wy * (pipe.w_in + pipe.w_out) / 2 * pipe.D;
    case PieceKind::CornerHalf:
      // swept volume = source flux * transit (incompressibility)
      return corner.mu * corner.a1 * corner.a2 * (corner.L / corner.mu);
    case PieceKind::Rotation:
      return (rot.x_hi - rot.x_lo) * (rot.y_hi - rot.y_lo) * rot.h;
    case PieceKind::SnakeCell: {
      Real l = to_ld(snake.geom->ell);
      return l * l * l;
    }
    case PieceKind::GateCell: {
      Real l = to_ld(snake.geom->ell), la = to_ld(snake.geom->lambda);
      return (la / 2) * la * l;
    }
  }
  return 0;
}

Real FieldPiece::lp_pow_exact_normal(Real p) const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real flux = q.mu_in * q.w_in;
      Real dw = (q.w_out - q.w_in) / q.D;
      Real integral;  // int_0^D w(z)^(1-p) dz
      if (fabsl(dw) < 1e-30L) {
        integral = q.D * powl(q.w_in, 1 - p);
      } else if (fabsl(p - 2) < 1e-18L) {
        integral = logl(q.w_out / q.w_in) / dw;
      } else {
        integral = (powl(q.w_out, 2 - p) - powl(q.w_in, 2 - p)) / (dw * (2 - p));
      }
      return q.wy * powl(flux, p) * integral;
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell:
      return powl(to_ld(snake.geom->mu0), p) * volume();
    default:
      return volume() * powl(sup_bound(), p);
  }
}

Real FieldPiece::lp_pow_bound(Real p) const {
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real dx0 = (q.x0_out - q.x0_in) / q.D, dw = (q.w_out - q.w_in) / q.D;
      Real sx = std::max(fabsl(dx0), fabsl(dx0 + dw));
      Real sy = fabsl((q.y0_out - q.y0_in) / q.D);
      Real factor = powl(sqrtl(1 + sx * sx + sy * sy), p);
      return factor * lp_pow_exact_normal(p);
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell:
      return lp_pow_exact_normal(p);  // |u| = mu0 exactly
    default:
      return volume() * powl(sup_bound(), p);
  }
}

FieldPiece::Advance FieldPiece::advance(const Vec3& world, Real t_budget) const {
  Vec3 p = frame.to_local(world);
  Advance adv;
  switch (kind) {
    case PieceKind::Constant:
    case PieceKind::PipeWidth: {
      const auto& q = pipe;
      Real dw = (q.w_out - q.w_in) / q.D;
      auto W = [&](Real z) { return q.w_in * z + dw * z * z / 2; };
      Real flux = q.mu_in * q.w_in;
      Real t_exit = (W(q.D) - W(p.z)) / flux;
      Real xi = (p.x - q.x0(p.z)) / q.width(p.z);
      Real eta = p.y - q.y0(p.z);
      Real dy0 = (q.y0_out - q.y0_in) / q.D;
      if (t_budget >= t_exit) {
        adv.exited = true;
        adv.used = t_exit;
        adv.end = frame.to_world({q.x0_out + xi * q.w_out, q.y0_out + eta, q.D});
      } else {
        Real target = W(p.z) + flux * t_budget;
        Real z1;
        if (fabsl(dw) < 1e-30L) {
          z1 = target / q.w_in;
        } else {
          z1 = (-q.w_in + sqrtl(q.w_in * q.w_in + 2 * dw * target)) / dw;
        }
        adv.used = t_budget;
        adv.end = frame.to_world({q.x0(z1) + xi * q.width(z1), q.y0(z1) + eta + dy0 * 0, z1});
        // y is eta above the sheared floor
        adv.end = frame.to_world({q.x0(z1) + xi * q.width(z1), q.y0(z1) + eta, z1});
      }
      break;
    }
    case PieceKind::CornerHalf: {
      const auto& c = corner;
      Real tstar = c.L / c.mu;
      if (c.half == 1) {
        Real F = c.F(p.x);
        if (F < 1e-28L) {
          // outermost lane: straight run
          Real t_exit = (c.L - p.x - p.z) / c.mu;
          if (t_budget >= t_exit) {
            adv.exited = true;
            adv.used = t_exit;
            adv.end = frame.to_world({p.x, p.y, c.L - p.x});
          } else {
            adv.used = t_budget;
            adv.end = frame.to_world({p.x, p.y, p.z + c.mu * t_budget});
          }
          break;
        }
        Real zeta = 1 - F * p.z / c.mu;
        Real t_cur = -logl(zeta) / F;
        Real y0 = p.y * zeta;
        Real t_exit = tstar - t_cur;
        if (t_budget >= t_exit) {
          adv.exited = true;
          adv.used = t_exit;
          adv.end = frame.to_world({p.x, y0 * expl(F * tstar), c.L - p.x});
        } else {
          Real t1 = t_cur + t_budget;
          adv.used = t_budget;
          adv.end = frame.to_world({p.x, y0 * expl(F * t1), (c.mu / F) * (1 - expl(-F * t1))});
        }
      } else {
        // reflect into half-1 coordinates and run time backwards
        Vec3 q{c.L - p.z, p.y, c.L - p.x};
        Real F = c.F(q.x);
        if (F < 1e-28L) {
          Real t_exit = q.z / c.mu;
          if (t_budget >= t_exit) {
            adv.exited = true;
            adv.used = t_exit;
            adv.end = frame.to_world({c.L, q.y, c.L - q.x});
          } else {
            adv.used = t_budget;
            Vec3 q1{q.x, q.y, q.z - c.mu * t_budget};
            adv.end = frame.to_world({c.L - q1.z, q1.y, c.L - q1.x});
          }
          break;
        }
        Real zeta = 1 - F * q.z / c.mu;
        Real s_cur = -logl(zeta) / F;  // time-from-diagonal remaining = s_cur
        Real y0 = q.y * zeta;
        if (t_budget >= s_cur) {
          adv.exited = true;
          adv.used = s_cur;
          adv.end = frame.to_world({c.L, y0, c.L - q.x});
        } else {
          Real s1 = s_cur - t_budget;
          adv.used = t_budget;
          Vec3 q1{q.x, y0 * expl(F * s1), (c.mu / F) * (1 - expl(-F * s1))};
          adv.end = frame.to_world({c.L - q1.z, q1.y, c.L - q1.x});
        }
      }
      break;
    }
    case PieceKind::Rotation: {
      Real om = rot.turn * (M_PIl / 2) * rot.mu0 / rot.h;
      Real t_exit = (rot.h - p.z) / rot.mu0;
      Real t = std::min(t_budget, t_exit);
      Real th = om * t;
      Real cx = cosl(th), sx = sinl(th);
      adv.exited = t_budget >= t_exit;
      adv.used = t;
      adv.end = frame.to_world({cx * p.x - sx * p.y, sx * p.x + cx * p.y, p.z + rot.mu0 * t});
      break;
    }
    case PieceKind::SnakeCell:
    case PieceKind::GateCell: {
      auto tr = snake.geom->trace_ld(p.x, p.y, t_budget);
      adv.end = frame.to_world({tr.x, tr.y, p.z});
      adv.used = tr.time_used;
      adv.exited = tr.status != SnakeTrace::BUDGET;
      break;
    }
  }
  return adv;
}

// ---------------------------------------------------------------- constructors

FieldPiece FieldPiece::parallel(const Frame& f, Real a1, Real wy, Real D1, Real D3, Real mu) {
  FieldPiece p;
  p.kind = PieceKind::Constant;
  p.frame = f;
  p.pipe = PipeParams{D3, 0, a1, D1, a1, 0, wy, 0, mu};
  return p;
}

FieldPiece FieldPiece::pipe_width(const Frame& f, Real a1, Real b1, Real wy, Real D3,
                                  Real mu_in) {
  FieldPiece p;
  p.kind = (a1 == b1) ? PieceKind::Constant : PieceKind::PipeWidth;
  p.frame = f;
  p.pipe = PipeParams{D3, 0, a1, 0, b1, 0, wy, 0, mu_in};
  return p;
}

FieldPiece FieldPiece::rotation(const Frame& f, Real x_lo, Real x_hi, Real y_lo, Real y_hi,
                                Real mu0, int turn, Real h) {
  FieldPiece p;
  p.kind = PieceKind::Rotation;
  p.frame = f;
  Real rad = 0;
  for (Real x : {x_lo, x_hi})
    for (Real y : {y_lo, y_hi}) rad = std::max(rad, sqrtl(x * x + y * y));
  p.rot = RotationParams{rad, mu0, h, x_lo, x_hi, y_lo, y_hi, turn};
  return p;
}

std::pair<FieldPiece, FieldPiece> corner_pair(const Frame& f, Real a1, Real a2, Real L,
                                              Real mu) {
  if (L <= a1) throw std::invalid_argument("corner_pair: need L > a1");
  FieldPiece h1, h2;
  h1.kind = h2.kind = PieceKind::CornerHalf;
  h1.frame = h2.frame = f;
  h1.corner = CornerParams{a1, a2, L, mu, 1};
  h2.corner = CornerParams{a1, a2, L, mu, 2};
  return {h1, h2};
}

Real corner_transit(Real L, Real mu) { return 2 * L / mu; }

}  // namespace gridflow
