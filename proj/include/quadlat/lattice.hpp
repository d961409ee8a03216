#pragma once

// The quadratic lattice mu(t) = t^2 + c2*t + c3 and the structural
// coefficient sequences f_n, g_n attached to its theta basis.

#include "quadlat/rational.hpp"

namespace quadlat {

struct LatticeParams {
  Rational c2 = 0;
  Rational c3 = 0;
  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

inline Rational mu_at(const LatticeParams& lp, const Rational& t) {
  return t * t + lp.c2 * t + lp.c3;
}

/// mu(t + 1/2) - mu(t - 1/2) = 2t + c2; the divided-difference denominator.
inline Rational mu_half_gap(const LatticeParams& lp, const Rational& t) {
  return 2 * t + lp.c2;
}

/// f_n = -c2^2/4 + (2n+1)^2/16 + c3.  One closed form for every integer n;
/// the n < 0 values only ever appear multiplied by vanishing factors.
inline Rational f_coeff(const LatticeParams& lp, long long n) {
  const Rational odd(2 * n + 1);
  return -lp.c2 * lp.c2 / 4 + odd * odd / 16 + lp.c3;
}

/// g_n = n(2n - 1)/4.
inline Rational g_coeff(long long n) { return Rational(n * (2 * n - 1)) / 4; }

/// Companion constant of the mean operator: m2(t) = mu(t) + delta_x is the
/// exact square ((2t + c2)/2)^2.
inline Rational delta_x(const LatticeParams& lp) { return lp.c2 * lp.c2 / 4 - lp.c3; }

inline Rational m2_at(const LatticeParams& lp, const Rational& t) {
  return mu_at(lp, t) + delta_x(lp);
}

/// The other companion constant, m1 = 1/2.
inline Rational m1_const() { return Rational(1, 2); }

}  // namespace quadlat
