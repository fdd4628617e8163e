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

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace gridflow {

// Exact rational arithmetic. All admissibility checks and finite integer-p
// costs run on Rat; floats only appear at reporting boundaries.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// x^k for integer k (k may be negative; x must be nonzero then).
inline Rat ratpow(const Rat& x, long k) {
  if (k == 0) return Rat(1);
  bool neg = k < 0;
  unsigned long a = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Rat num, den;
  mpz_pow_ui(num.get_num_mpz_t(), x.get_num_mpz_t(), a);
  mpz_pow_ui(num.get_den_mpz_t(), x.get_den_mpz_t(), a);
  if (neg) {
    if (x == 0) throw std::domain_error("ratpow: 0 to negative power");
    mpq_inv(num.get_mpq_t(), num.get_mpq_t());
  }
  num.canonicalize();
  return num;
}

// long double conversion keeping ~64 mantissa bits (mpq_get_d only keeps 53).
inline long double to_ld(const mpz_class& z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  // refine: subtract the leading part and add the remainder
  long double head = ldexpl(static_cast<long double>(d), static_cast<int>(e));
  if (mpz_sizeinbase(z.get_mpz_t(), 2) <= 52) return head;
  mpz_class approx;
  mpz_set_d(approx.get_mpz_t(), static_cast<double>(head));
  mpz_class rem = z - approx;
  return head + static_cast<long double>(mpz_get_d(rem.get_mpz_t()));
}

inline long double to_ld(const Rat& q) {
  return to_ld(q.get_num()) / to_ld(q.get_den());
}

inline std::string frac_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_frac(const std::string& s) {
  auto slash = s.find('/');
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(mpz_class(s));
  } else {
    r = Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }
  r.canonicalize();
  return r;
}

// Exact conversion: every finite long double is a rational.
inline Rat rat_from_ld(long double v) {
  if (v == 0.0L) return Rat(0);
  bool neg = v < 0;
  int e = 0;
  long double m = frexpl(neg ? -v : v, &e);  // m in [0.5, 1)
  mpz_class num = 0;
  for (int i = 0; i < 5 && m != 0.0L; ++i) {
    m = ldexpl(m, 13);
    long double ip;
    m = modfl(m, &ip);
    num = (num << 13) + static_cast<long>(ip);
    e -= 13;
  }
  Rat q(num);
  mpz_class two_e;
  mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) q *= Rat(two_e);
  else q /= Rat(two_e);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

// Nearest rational with denominator <= max_den (continued fractions).
// Used when rounding numeric optimizer output back to exact arithmetic.
inline Rat rat_limit_denominator(long double x, unsigned long max_den) {
  bool neg = x < 0;
  if (neg) x = -x;
  unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double frac = x;
  for (int it = 0; it < 64; ++it) {
    unsigned long a = static_cast<unsigned long>(frac);
    unsigned long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double rest = frac - static_cast<long double>(a);
    if (rest < 1e-18L) break;
    frac = 1.0L / rest;
  }
  Rat r(static_cast<unsigned long>(p1), static_cast<unsigned long>(q1 == 0 ? 1 : q1));
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace gridflow
