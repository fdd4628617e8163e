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
#include "snake.hpp"

#include <stdexcept>

namespace gridflow {

namespace {

mpz_class rat_floor(const Rat& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

SnakeGeom::Region SnakeGeom::region(const Rat& x, const Rat& y) const {
  const Rat half = ell / 2, lh = lambda / 2;
  if (x > ell && x < ell + lh && y > half - lh && y < half + lh) {
    if (y > half && x + y < 3 * half + lh) return B5;
    if (y < half && x - y < half + lh) return B6;
    return GMID;
  }
  if (x <= 0 || x >= ell || y <= 0 || y >= ell) return OUTSIDE;

  bool upper = y > half;
  Rat yy = upper ? y : ell - y;

  // triangles hanging from the top edge: {x+yy > l+j*lam} & {yy-x > l-(j+1)*lam}
  if (yy < ell) {
    Rat s = x + yy - ell;
    if (s > 0) {
      mpz_class j = rat_floor(s / lambda);
      if (Rat(j) * lambda == s) --j;  // strict
      if (j >= 0 && j < kappa && yy - x > ell - Rat(j + 1) * lambda)
        return upper ? B1 : B2;
    }
  }
  // sawtooth above the middle line: {x+yy < l/2+lam/2+j*lam} &
  // {yy-x < l/2-lam/2-(j-1)*lam}; j runs to kappa, the last triangle being
  // clipped by the cube face (it feeds the gates)
  {
    Rat lo = (x + yy - half - lh) / lambda;  // need j > lo
    mpz_class j = rat_floor(lo) + 1;
    if (j >= 1 && j <= kappa && yy - x < half - lh - Rat(j - 1) * lambda)
      return upper ? B1 : B2;
  }
  mpz_class jx = rat_floor(x / lambda);
  Rat frac = x - Rat(jx) * lambda;
  return frac < lh ? B3 : B4;
}

SnakeGeom::Region SnakeGeom::region_ld(long double x, long double y) const {
  return region(rat_from_ld(x), rat_from_ld(y));
}

std::pair<int, int> SnakeGeom::dir(Region r) const {
  switch (r) {
    case B1: return {1, 0};
    case B2: return {-1, 0};
    case B3: return {0, 1};
    case B4: return {0, -1};
    case B5: return {1, 0};
    case B6: return {-1, 0};
    case GMID: return {0, 1};
    default: return {0, 0};
  }
}

std::pair<long double, long double> SnakeGeom::velocity_dir(long double x, long double y) const {
  auto d = dir(region_ld(x, y));
  return {static_cast<long double>(d.first), static_cast<long double>(d.second)};
}

bool SnakeGeom::in_cube(long double x, long double y, long double slack) const {
  long double l = to_ld(ell);
  return x > slack && x < l - slack && y > slack && y < l - slack;
}

bool SnakeGeom::in_gate_box(long double x, long double y, long double slack) const {
  long double l = to_ld(ell), lh = to_ld(lambda) / 2, half = l / 2;
  return x > l + slack && x < l + lh - slack && y > half - lh + slack && y < half + lh - slack;
}

SnakeTrace SnakeGeom::trace(Rat x, Rat y, Rat budget) const {
  const Rat h = lambda / 2;
  const Rat half = ell / 2;
  const bool unbounded = budget < 0;
  Rat dist_left = unbounded ? Rat(0) : budget * mu0;

  SnakeTrace out;
  out.time_used = 0;

  auto next_dist = [&](const Rat& f, int rate) -> Rat {
    if (rate == 0) return Rat(-1);
    Rat g = rate > 0 ? f : -f;
    Rat d = Rat(rat_floor(g / h) + 1) * h - g;
    if (d == 0) d = h;
    return d;
  };
  // shortest distance to the next grid boundary when moving along (vx, vy)
  auto grid_dist = [&](const Rat& px, const Rat& py, int vx, int vy) -> Rat {
    Rat d(-1);
    auto consider = [&](const Rat& c) {
      if (c > 0 && (d < 0 || c < d)) d = c;
    };
    consider(next_dist(px, vx));
    consider(next_dist(py, vy));
    consider(next_dist(px + py, vx + vy));
    consider(next_dist(px - py, vx - vy));
    return d;
  };
  // vertical long jump through a plain column band (no triangles there)
  auto band_jump = [&](const Rat& py, int vy) -> Rat {
    if (vy > 0) {
      if (py >= h && py < half - h) return half - h - py;
      if (py >= half + h && py < ell - h) return ell - h - py;
    } else if (vy < 0) {
      if (py > half + h && py <= ell - h) return py - (half + h);
      if (py > h && py <= half - h) return py - h;
    }
    return Rat(-1);
  };

  Region r = region(x, y);
  if (r == OUTSIDE) {
    out.x = x;
    out.y = y;
    out.status = SnakeTrace::STUCK;
    return out;
  }

  const long max_steps = 64L * kappa * kappa + 4096;
  for (long step = 0; step < max_steps; ++step) {
    // settle on a self-consistent segment (direction may turn at a joint)
    Rat d(-1);
    int vx = 0, vy = 0;
    bool valid = false;
    for (int retry = 0; retry < 6 && !valid; ++retry) {
      std::tie(vx, vy) = dir(r);
      d = grid_dist(x, y, vx, vy);
      if ((r == B3 || r == B4)) {
        Rat bj = band_jump(y, vy);
        if (bj > 0) d = bj;
      }
      if (d <= 0) break;
      Region rm = region(x + d / 2 * vx, y + d / 2 * vy);
      if (rm == r) {
        valid = true;
      } else if (rm == OUTSIDE) {
        // the domain ends ahead; we must be standing on a gate face
        if (vy > 0 && y == half + h && x > ell) {
          out.x = x; out.y = y; out.status = SnakeTrace::EXIT_GOUT;
          return out;
        }
        if (vy < 0 && y == half - h && x > ell) {
          out.x = x; out.y = y; out.status = SnakeTrace::EXIT_GIN;
          return out;
        }
        out.x = x; out.y = y; out.status = SnakeTrace::STUCK;
        return out;
      } else {
        r = rm;  // turn: adopt the downstream region and re-derive the segment
      }
    }
    if (!valid) {
      out.x = x; out.y = y; out.status = SnakeTrace::STUCK;
      return out;
    }
    if (!unbounded && dist_left <= d) {
      x += dist_left * vx;
      y += dist_left * vy;
      out.time_used += dist_left / mu0;
      out.x = x; out.y = y; out.status = SnakeTrace::BUDGET;
      return out;
    }
    x += d * vx;
    y += d * vy;
    out.time_used += d / mu0;
    if (!unbounded) dist_left -= d;
  }
  out.x = x;
  out.y = y;
  out.status = SnakeTrace::STUCK;
  return out;
}

SnakeTraceLd SnakeGeom::trace_ld(long double x, long double y, long double budget) const {
  SnakeTrace t = trace(rat_from_ld(x), rat_from_ld(y), rat_from_ld(budget));
  return SnakeTraceLd{to_ld(t.x), to_ld(t.y), to_ld(t.time_used), t.status};
}

Rat SnakeGeom::passage_time(const Rat& y_entry) const {
  return (2 * ell * kappa - lambda + 4 * (ell / 2 - y_entry)) / mu0;
}

Rat SnakeGeom::gate_transit() const { return (2 * ell * kappa + lambda) / mu0; }

}  // namespace gridflow
