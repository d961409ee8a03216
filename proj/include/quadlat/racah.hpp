#pragma once

// Independent oracle: monic Racah polynomials from their terminating
// hypergeometric series, reconstructed as theta-basis members by exact
// interpolation in the mu coordinate.  Nothing here touches the equation
// solver, so agreement with it is a genuine cross-check.

#include <string>
#include <vector>

#include "quadlat/bochner.hpp"
#include "quadlat/family.hpp"

namespace quadlat {

struct RacahParams {
  Rational alpha, beta, gamma, delta;
};

inline LatticeParams racah_lattice(const RacahParams& rp) {
  return LatticeParams{rp.gamma + rp.delta + 1, Rational(0)};
}

/// Difference-equation data whose eigenfamily is the monic Racah family.
inline BochnerData racah_bochner(const RacahParams& rp) {
  const Rational &a = rp.alpha, &b = rp.beta, &g = rp.gamma, &d = rp.delta;
  BochnerData bd;
  bd.lattice = racah_lattice(rp);
  bd.a0 = -1;
  bd.a1 = (-a * (2 * b + d + g + 3) + b * (d - g - 3) - 2 * (d * g + d + g + 2)) / 2;
  bd.a2 = -(a + 1) * (g + 1) * (b + d + 1) * (d + g + 1) / 2;
  bd.b0 = -(a + b + 2);
  bd.b1 = -(a + 1) * (g + 1) * (b + d + 1);
  return bd;
}

/// Monic Racah value r_n(t): normalized terminating 4F3 sum.
inline Rational racah_eval(const RacahParams& rp, int n, const Rational& t) {
  if (n < 0) throw SizeMismatch("racah_eval: negative degree");
  const Rational &a = rp.alpha, &b = rp.beta, &g = rp.gamma, &d = rp.delta;

  Rational prefactor = 1;
  for (int j = 0; j < n; ++j) {
    const Rational den = n + a + b + 1 + j;
    if (den == 0)
      throw ParameterPole("racah_eval: zero factor in (n+alpha+beta+1)_n");
    prefactor *= (a + 1 + j) * (b + d + 1 + j) * (g + 1 + j) / den;
  }

  const Rational c2 = g + d + 1;
  Rational sum = 0;
  Rational term = 1;
  for (int k = 0;; ++k) {
    sum += term;
    if (k == n) break;
    const Rational den = (a + 1 + k) * (b + d + 1 + k) * (g + 1 + k) * (k + 1);
    if (den == 0)
      throw ParameterPole("racah_eval: zero factor in a series denominator");
    term *= (k - n) * (n + a + b + 1 + k) * (k - t) * (t + c2 + k) / den;
  }
  return prefactor * sum;
}

/// Newton interpolation through (mu(t_i), v_i), returned in the theta basis.
inline ThetaPoly interpolate_in_mu(const LatticeParams& lp,
                                   const std::vector<Rational>& nodes,
                                   const std::vector<Rational>& values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw SizeMismatch("interpolate_in_mu: need equally many nodes and values");
  const int count = static_cast<int>(nodes.size());

  std::vector<Rational> xs;
  for (const Rational& t : nodes) xs.push_back(mu_at(lp, t));
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (xs[i] == xs[j])
        throw NodesCollide("interpolate_in_mu: nodes share a mu value");

  std::vector<Rational> dd = values;
  std::vector<Rational> newton(count);
  newton[0] = dd[0];
  for (int level = 1; level < count; ++level) {
    for (int i = 0; i + level < count; ++i)
      dd[i] = (dd[i + 1] - dd[i]) / (xs[i + level] - xs[i]);
    newton[level] = dd[0];
  }

  MuPoly p({newton[count - 1]});
  for (int k = count - 2; k >= 0; --k) {
    p = p * MuPoly({-xs[k], Rational(1)}) + MuPoly({newton[k]});
  }
  return mu_to_theta(p, lp);
}

/// Interpolate n+1 samples and insist the result is monic of degree n.
inline ThetaPoly monic_from_evals(const LatticeParams& lp, int n,
                                  const std::vector<Rational>& nodes,
                                  const std::vector<Rational>& values) {
  if (static_cast<int>(nodes.size()) != n + 1)
    throw SizeMismatch("monic_from_evals: need n+1 nodes");
  ThetaPoly p = interpolate_in_mu(lp, nodes, values);
  if (p.degree() != n || !p.is_monic())
    throw NotMonic("monic_from_evals: samples do not define a monic polynomial of degree " +
                   std::to_string(n));
  return p;
}

/// r_0..r_nmax via series evaluation + interpolation.  Nodes start at
/// t = 0,1,...,n and shift by halves until all mu values are distinct.
inline PolyFamily racah_family(const RacahParams& rp, int nmax) {
  if (nmax < 0) throw SizeMismatch("racah_family: negative nmax");
  const LatticeParams lp = racah_lattice(rp);
  std::vector<ThetaPoly> members;
  for (int n = 0; n <= nmax; ++n) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      const Rational offset(attempt, 2);
      std::vector<Rational> nodes, values;
      bool distinct = true;
      for (int i = 0; i <= n && distinct; ++i) {
        const Rational t = offset + i;
        const Rational x = mu_at(lp, t);
        for (const Rational& prev : nodes)
          if (mu_at(lp, prev) == x) distinct = false;
        if (distinct) nodes.push_back(t);
      }
      if (!distinct) continue;
      for (const Rational& t : nodes) values.push_back(racah_eval(rp, n, t));
      members.push_back(monic_from_evals(lp, n, nodes, values));
      placed = true;
    }
    if (!placed)
      throw NodesCollide("racah_family: no admissible node set for degree " +
                         std::to_string(n));
  }
  return make_family(lp, std::move(members));
}

}  // namespace quadlat
