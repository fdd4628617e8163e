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

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gridflow {

using Real = long double;

struct Vec3 {
  Real x = 0, y = 0, z = 0;
  Real& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  Real operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(Real s) const { return {x * s, y * s, z * s}; }
  Real dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Real norm() const { return sqrtl(dot(*this)); }
  Real norm_inf() const { return std::max({fabsl(x), fabsl(y), fabsl(z)}); }
};

inline Vec3 axis_vec(int axis, Real s = 1) {
  Vec3 v;
  v[axis] = s;
  return v;
}

// Isometry world = origin + sum_j local_j * sgn_j * e_{axis_j} (signed axis
// permutation plus translation). All continuum primitives are stated in one
// canonical orientation and wrapped by one of these.
struct Frame {
  std::array<int, 3> axis{0, 1, 2};
  std::array<int, 3> sgn{1, 1, 1};
  Vec3 origin;

  Vec3 to_world(const Vec3& local) const {
    Vec3 w = origin;
    for (int j = 0; j < 3; ++j) w[axis[j]] += sgn[j] * local[j];
    return w;
  }
  Vec3 to_local(const Vec3& world) const {
    Vec3 l;
    for (int j = 0; j < 3; ++j) l[j] = sgn[j] * (world[axis[j]] - origin[axis[j]]);
    return l;
  }
  Vec3 dir_to_world(const Vec3& local_dir) const {
    Vec3 w;
    for (int j = 0; j < 3; ++j) w[axis[j]] += sgn[j] * local_dir[j];
    return w;
  }
  Vec3 local_axis_in_world(int j) const { return axis_vec(axis[j], static_cast<Real>(sgn[j])); }
  bool valid() const {
    bool seen[3] = {false, false, false};
    for (int j = 0; j < 3; ++j) {
      if (axis[j] < 0 || axis[j] > 2 || seen[axis[j]]) return false;
      seen[axis[j]] = true;
      if (sgn[j] != 1 && sgn[j] != -1) return false;
    }
    return true;
  }
};

struct Interval {
  Real lo = 0, hi = 0;
  Real len() const { return hi - lo; }
  bool contains(Real t) const { return t > lo && t < hi; }
  bool overlaps(const Interval& o, Real slack = 0) const {
    return lo + slack < o.hi && o.lo + slack < hi;
  }
};

struct AABB {
  Vec3 lo, hi;
  bool overlaps(const AABB& o, Real slack = 0) const {
    for (int i = 0; i < 3; ++i)
      if (lo[i] + slack >= o.hi[i] || o.lo[i] + slack >= hi[i]) return false;
    return true;
  }
  void expand(const Vec3& p) {
    for (int i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  Vec3 extent() const { return hi - lo; }
};

// Half-space set {x : n.x <= d}; intersection is a convex polytope.
struct HalfSpace {
  Vec3 n;
  Real d;
};

struct ConvexPoly {
  std::vector<HalfSpace> planes;

  void add(const Vec3& n, Real d) { planes.push_back({n, d}); }
  void add_box(const AABB& b) {
    for (int i = 0; i < 3; ++i) {
      add(axis_vec(i, -1), -b.lo[i]);
      add(axis_vec(i, 1), b.hi[i]);
    }
  }
  bool contains(const Vec3& p, Real slack = 0) const {
    for (const auto& h : planes)
      if (h.n.dot(p) > h.d + slack) return false;
    return true;
  }
};

// Do two convex polytopes share an interior point? Planes are shifted inward
// by `shrink` and feasibility is decided by vertex enumeration over plane
// triples (all polytopes here are bounded by construction).
bool polys_intersect_interior(const ConvexPoly& a, const ConvexPoly& b, Real shrink);

// 2D axis-aligned rectangle embedded in 3D: the checkpoint surface type.
struct Rect2D {
  int normal_axis = 2;  // world axis of the normal
  Real offset = 0;      // position along the normal axis
  // spans on the two remaining world axes, in increasing axis order
  Interval span[2];
  int orient = 1;  // +1: normal points along +axis, -1: opposite

  std::array<int, 2> span_axes() const {
    std::array<int, 2> s{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != normal_axis) s[k++] = i;
    return s;
  }
  Real area() const { return span[0].len() * span[1].len(); }
  bool contains(const Vec3& p, Real tol) const {
    if (fabsl(p[normal_axis] - offset) > tol) return false;
    auto ax = span_axes();
    return span[0].contains(p[ax[0]]) && span[1].contains(p[ax[1]]);
  }
  bool same_geometry(const Rect2D& o, Real tol) const {
    if (normal_axis != o.normal_axis) return false;
    if (fabsl(offset - o.offset) > tol) return false;
    for (int i = 0; i < 2; ++i)
      if (fabsl(span[i].lo - o.span[i].lo) > tol || fabsl(span[i].hi - o.span[i].hi) > tol)
        return false;
    return true;
  }
};

// Affine map x -> M x + t (checkpoint-to-checkpoint flow maps are affine).
struct AffineMap {
  std::array<std::array<Real, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 t;

  Vec3 operator()(const Vec3& p) const {
    Vec3 r = t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p[j];
    return r;
  }
  static AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
  static AffineMap identity() { return AffineMap{}; }
};

}  // namespace gridflow
