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
#include "lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace gridflow {

long double lambert_w_principal(long double y) {
  static const long double kInvE = expl(-1.0L);
  if (!(y > -kInvE && y < 0.0L))
    throw std::domain_error("lambert_w_principal: y must lie in (-1/e, 0)");

  // Seed: w ~ y e away from the branch point, series w = -1 + sqrt(2(1+e y))
  // near it. Both stay inside (-1, 0) on this interval.
  long double w;
  if (y > -0.25L) {
    w = y * expl(1.0L) / (1.0L + y * expl(1.0L));  // Pade-flavored tweak of w0 = y e
    if (w <= -1.0L || w >= 0.0L) w = y * expl(1.0L);
  } else {
    long double q = 2.0L * (1.0L + expl(1.0L) * y);
    long double s = sqrtl(q > 0 ? q : 0);
    w = -1.0L + s - q / 3.0L;
    if (w >= 0.0L) w = -1e-6L;
    if (w <= -1.0L) w = -1.0L + 1e-18L;
  }

  long double lo = -1.0L, hi = 0.0L;  // bisection bracket for the fallback
  const long double tol = 1e-14L;
  for (int it = 0; it < 100; ++it) {
    long double ew = expl(w);
    long double f = w * ew - y;
    if (fabsl(f) <= tol * fabsl(y)) return w;
    if (f > 0) hi = w; else lo = w;  // w e^w increases on (-1, 0)
    long double fp = ew * (1.0L + w);
    long double fpp = ew * (2.0L + w);
    long double denom = fp - 0.5L * f * fpp / fp;
    long double next = (fp != 0 && denom != 0) ? w - f / denom : w;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);  // guarded step
    if (next == w) next = 0.5L * (lo + hi);
    w = next;
  }
  // Halley has stalled (only possible at the extreme ends); finish by bisection.
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    long double mid = 0.5L * (lo + hi);
    long double f = mid * expl(mid) - y;
    if (fabsl(f) <= tol * fabsl(y)) return mid;
    (f > 0 ? hi : lo) = mid;
  }
  return 0.5L * (lo + hi);
}

}  // namespace gridflow
