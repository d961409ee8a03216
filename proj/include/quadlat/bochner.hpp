#pragma once

// The Bochner-type divided-difference equation on a quadratic lattice:
//
//   L_n = phi(mu) D^2 + psi(mu) S D - lambda_n I,
//   phi = a0 mu^2 + a1 mu + a2,  psi = b0 mu + b1,
//   lambda_n = n((n-1) a0 + b0),
//
// its unique monic polynomial eigenfamily, and the closed-form three-term
// recurrence coefficients that family satisfies.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadlat/errors.hpp"
#include "quadlat/family.hpp"
#include "quadlat/report.hpp"
#include "quadlat/theta.hpp"

namespace quadlat {

struct BochnerData {
  LatticeParams lattice;
  Rational a0, a1, a2;  // phi = a0 mu^2 + a1 mu + a2
  Rational b0, b1;      // psi = b0 mu + b1

  MuPoly phi() const { return MuPoly({a2, a1, a0}); }
  MuPoly psi() const { return MuPoly({b1, b0}); }
  friend bool operator==(const BochnerData&, const BochnerData&) = default;
};

inline Rational lambda_n(const BochnerData& bd, long long n) {
  return Rational(n) * (Rational(n - 1) * bd.a0 + bd.b0);
}

/// Bochner data of the derivative family {D P_{k+1} / (k+1)}: applying D to
/// the equation for P_{k+1} and commuting D past phi and psi with the product
/// rules yields the same equation with
///   phi^ = S phi + (1/2) S psi + b0 m2,   psi^ = D phi + S psi + (1/2) b0,
/// expanded below in the mu-coefficients.  Its eigenvalues are
/// lambda^_k = k((k+1) a0 + b0) = lambda_{k+1} - lambda_1.
inline BochnerData derivative_data(const BochnerData& bd) {
  const Rational dx = delta_x(bd.lattice);
  BochnerData out;
  out.lattice = bd.lattice;
  out.a0 = bd.a0;
  out.a1 = Rational(3, 2) * bd.a0 + bd.a1 + Rational(3, 2) * bd.b0;
  out.a2 = bd.a0 * (dx + Rational(1, 16)) + bd.a1 / 4 + bd.a2 + bd.b1 / 2 +
           bd.b0 / 8 + bd.b0 * dx;
  out.b0 = 2 * bd.a0 + bd.b0;
  out.b1 = bd.a1 + bd.b1 + bd.a0 / 2 + Rational(3, 4) * bd.b0;
  return out;
}

/// First index violating the degree-n uniqueness conditions:
/// lambda_m != lambda_n for m < n, and lambda_m != 0 for 1 <= m <= n.
/// nullopt when the monic solution of degree n is unique.
inline std::optional<int> uniqueness_failure(const BochnerData& bd, int n) {
  const Rational ln = lambda_n(bd, n);
  for (int m = 0; m < n; ++m)
    if (lambda_n(bd, m) == ln) return m;
  for (int m = 1; m <= n; ++m)
    if (lambda_n(bd, m) == 0) return m;
  return std::nullopt;
}

inline bool check_uniqueness(const BochnerData& bd, int n) {
  return !uniqueness_failure(bd, n).has_value();
}

/// Enforce uniqueness for every degree up to n (deeper routines divide by
/// arbitrary eigenvalue gaps below the working degree).
inline void require_uniqueness_through(const BochnerData& bd, int n) {
  for (int m = 0; m <= n; ++m)
    if (auto bad = uniqueness_failure(bd, m)) throw DegenerateEigenvalues(*bad);
}

/// Action on the theta basis: L_n(theta_j) = k0 theta_j + k1 theta_{j-1}
/// + k2 theta_{j-2}.  Only k0 depends on n (through lambda_n).
struct KCoeffs {
  Rational k0, k1, k2;
};

inline KCoeffs k_coeffs(const BochnerData& bd, int n, int j) {
  const LatticeParams& lp = bd.lattice;
  const Rational jj(j);
  const Rational jj1 = jj * (jj - 1);
  const Rational fj1 = f_coeff(lp, j - 1);
  const Rational fj2 = f_coeff(lp, j - 2);
  const Rational gj1 = g_coeff(j - 1);
  KCoeffs k;
  k.k0 = bd.a0 * jj1 + bd.b0 * jj - lambda_n(bd, n);
  k.k1 = bd.a0 * jj1 * (fj1 + fj2) + bd.b0 * jj * fj1 + bd.a1 * jj1 + bd.b0 * jj * gj1 +
         bd.b1 * jj;
  k.k2 = bd.a0 * jj1 * fj2 * fj2 + bd.a1 * jj1 * fj2 + bd.b0 * jj * gj1 * fj2 +
         bd.a2 * jj1 + bd.b1 * jj * gj1;
  return k;
}

/// L_n applied through the coefficient-level operator maps (D first, then S
/// in the mixed term).
inline ThetaPoly apply_Ln(const BochnerData& bd, int n, const ThetaPoly& p) {
  if (!(p.params() == bd.lattice))
    throw MixedLattice("operator and operand on different lattices");
  const ThetaPoly dp = apply_D(p);
  return apply_mu_poly(bd.phi(), apply_D(dp)) + apply_mu_poly(bd.psi(), apply_S(dp)) -
         lambda_n(bd, n) * p;
}

/// Unique monic degree-n solution of L_n(P) = 0, by the downward recursion
///   (lambda_m - lambda_n) q_m + k1_{m+1} q_{m+1} + k2_{m+2} q_{m+2} = 0
/// from q_n = 1.
inline ThetaPoly solve_pn(const BochnerData& bd, int n) {
  require_uniqueness_through(bd, n);
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1, Rational(0));
  q[static_cast<std::size_t>(n)] = 1;
  const Rational ln = lambda_n(bd, n);
  for (int m = n - 1; m >= 0; --m) {
    Rational rhs = k_coeffs(bd, n, m + 1).k1 * q[static_cast<std::size_t>(m) + 1];
    if (m + 2 <= n) rhs += k_coeffs(bd, n, m + 2).k2 * q[static_cast<std::size_t>(m) + 2];
    q[static_cast<std::size_t>(m)] = -rhs / (lambda_n(bd, m) - ln);
  }
  return ThetaPoly(bd.lattice, std::move(q));
}

inline PolyFamily solve_family(const BochnerData& bd, int nmax) {
  std::vector<ThetaPoly> members;
  members.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) members.push_back(solve_pn(bd, n));
  return make_family(bd.lattice, std::move(members));
}

/// Closed forms for the two top subleading theta coefficients of P_n,
/// with p_{1,0} = 0 and p_{2,n} = 0 for n < 2 by convention.
inline std::pair<Rational, Rational> closed_p1_p2(const BochnerData& bd, int n) {
  const LatticeParams& lp = bd.lattice;
  const Rational &a = bd.a0, &b = bd.a1, &c = bd.a2, &r = bd.b0, &s = bd.b1;
  Rational p1 = 0, p2 = 0;
  if (n >= 1) {
    const Rational nn(n);
    p1 = -nn *
         (a * (nn - 1) * (f_coeff(lp, n - 2) + f_coeff(lp, n - 1)) + b * (nn - 1) +
          r * (f_coeff(lp, n - 1) + g_coeff(n - 1)) + s) /
         (lambda_n(bd, n - 1) - lambda_n(bd, n));
  }
  if (n >= 2) {
    const Rational nn(n);
    const Rational fn2 = f_coeff(lp, n - 2);
    p2 = -((nn - 1) * (p1 * (a * (nn - 2) * (f_coeff(lp, n - 3) + fn2) + b * (nn - 2) +
                             r * (fn2 + g_coeff(n - 2)) + s) +
                       nn * (fn2 * (a * fn2 + b) + c)) +
           nn * g_coeff(n - 1) * (r * fn2 + s)) /
         (lambda_n(bd, n - 2) - lambda_n(bd, n));
  }
  return {std::move(p1), std::move(p2)};
}

/// beta_n = p_{1,n} - p_{1,n+1} + f_n;
/// gamma_n = p_{1,n}(f_{n-1} - beta_n) + p_{2,n} - p_{2,n+1}.
/// Returns beta_0..beta_nmax and gamma_1..gamma_nmax.
inline RecurrenceCoeffs ttrr_coeffs(const BochnerData& bd, int nmax) {
  require_uniqueness_through(bd, nmax + 1);
  RecurrenceCoeffs rec;
  auto [p1, p2] = closed_p1_p2(bd, 0);
  for (int n = 0; n <= nmax; ++n) {
    const auto [p1next, p2next] = closed_p1_p2(bd, n + 1);
    const Rational beta = p1 - p1next + f_coeff(bd.lattice, n);
    rec.beta.push_back(beta);
    if (n >= 1)
      rec.gamma.push_back(p1 * (f_coeff(bd.lattice, n - 1) - beta) + p2 - p2next);
    p1 = p1next;
    p2 = p2next;
  }
  return rec;
}

/// t_n, the proportionality constant in U_n = t_n P_{n-1}.
inline Rational un_constant(const BochnerData& bd, int n) {
  const auto [p1, p2] = closed_p1_p2(bd, n);
  const auto [p1next, p2next] = closed_p1_p2(bd, n + 1);
  const Rational beta = p1 - p1next + f_coeff(bd.lattice, n);
  return k_coeffs(bd, n, n + 1).k2 +
         (f_coeff(bd.lattice, n) + p1 - beta) * k_coeffs(bd, n, n).k1 +
         (p1 * f_coeff(bd.lattice, n - 1) + p2 - beta * p1) *
             (lambda_n(bd, n - 1) - lambda_n(bd, n + 1));
}

/// Cross-validate the recurrence data along three independent routes, for
/// every n <= nmax:
///   0: beta_n also as p_{1,n} + f_n + k1_{n+1} / (lambda_n - lambda_{n+1});
///   1: gamma_n also as t_n / (lambda_{n-1} - lambda_{n+1})   (n >= 1);
///   2: P_{n+1} = (mu - beta_n) P_n - gamma_n P_{n-1} as exact polynomials.
inline CheckReport ttrr_cross_check(const BochnerData& bd, int nmax) {
  require_uniqueness_through(bd, nmax + 1);
  CheckReport rep;
  rep.kind = "ttrr_cross_check";
  rep.size = nmax;
  rep.pass = true;
  const RecurrenceCoeffs rec = ttrr_coeffs(bd, nmax);

  auto fail = [&](int n, int assertion, const Rational& residual) {
    const Rational mag = abs(residual);
    if (rep.pass || mag > rep.residual_max) rep.residual_max = mag;
    if (!rep.witness) rep.witness = {n, assertion};
    rep.pass = false;
  };

  ThetaPoly prev = solve_pn(bd, 0);  // P_{n-1} rolling
  ThetaPoly cur = prev;              // P_n rolling
  for (int n = 0; n <= nmax; ++n) {
    ++rep.valid_rows;
    const auto [p1, p2] = closed_p1_p2(bd, n);
    const Rational beta_alt = p1 + f_coeff(bd.lattice, n) +
                              k_coeffs(bd, n, n + 1).k1 /
                                  (lambda_n(bd, n) - lambda_n(bd, n + 1));
    if (beta_alt != rec.beta_at(n)) fail(n, 0, beta_alt - rec.beta_at(n));

    if (n >= 1) {
      const Rational gamma_alt =
          un_constant(bd, n) / (lambda_n(bd, n - 1) - lambda_n(bd, n + 1));
      if (gamma_alt != rec.gamma_at(n)) fail(n, 1, gamma_alt - rec.gamma_at(n));
    }

    const ThetaPoly next = solve_pn(bd, n + 1);
    ThetaPoly rhs = mul_mu(cur) - rec.beta_at(n) * cur;
    if (n >= 1) rhs = rhs - rec.gamma_at(n) * prev;
    if (!(next == rhs)) {
      const ThetaPoly diff = next - rhs;
      Rational worst = 0;
      for (const auto& d : diff.coeffs())
        if (abs(d) > worst) worst = abs(d);
      fail(n, 2, worst);
    }
    prev = cur;
    cur = next;
  }
  return rep;
}

/// The lemma behind gamma_n, verified end to end for one n >= 1:
///   U_n := L_{n+1}((mu - beta_n) P_n) has degree n-1,
///   L_{n-1}(U_n) = 0,
///   U_n = t_n P_{n-1}.
inline CheckReport verify_un(const BochnerData& bd, int n) {
  if (n < 1) throw SizeMismatch("verify_un needs n >= 1");
  require_uniqueness_through(bd, n + 1);
  CheckReport rep;
  rep.kind = "un_lemma";
  rep.size = n;
  rep.valid_rows = 3;
  rep.pass = true;

  auto fail = [&](int assertion, const Rational& residual) {
    if (rep.pass) {
      rep.witness = {n, assertion};
      rep.residual_max = abs(residual);
      rep.pass = false;
    }
  };

  const RecurrenceCoeffs rec = ttrr_coeffs(bd, n);
  const ThetaPoly pn = solve_pn(bd, n);
  const ThetaPoly pn1 = solve_pn(bd, n - 1);
  const ThetaPoly un = apply_Ln(bd, n + 1, mul_mu(pn) - rec.beta_at(n) * pn);

  if (un.degree() != n - 1) fail(0, un.is_zero() ? Rational(1) : un.coeff(un.degree()));
  const ThetaPoly lu = apply_Ln(bd, n - 1, un);
  if (!lu.is_zero()) fail(1, lu.coeff(lu.degree()));
  const ThetaPoly diff = un - un_constant(bd, n) * pn1;
  if (!diff.is_zero()) fail(2, diff.coeff(diff.degree()));
  return rep;
}

}  // namespace quadlat
