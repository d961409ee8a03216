#pragma once

// Graded monic polynomial families P_0..P_K on one lattice, expansions in
// such families, and the Jacobi (three-term recurrence) data they induce.

#include <utility>
#include <vector>

#include "quadlat/errors.hpp"
#include "quadlat/theta.hpp"

namespace quadlat {

struct PolyFamily {
  LatticeParams params;
  std::vector<ThetaPoly> members;  // members[n] has degree exactly n, monic

  int max_degree() const { return static_cast<int>(members.size()) - 1; }
  const ThetaPoly& at(int n) const { return members.at(static_cast<std::size_t>(n)); }
};

/// Bundle and validate: member n must be monic of degree exactly n and live
/// on the given lattice.
inline PolyFamily make_family(const LatticeParams& lp, std::vector<ThetaPoly> members) {
  for (std::size_t n = 0; n < members.size(); ++n) {
    if (!(members[n].params() == lp))
      throw MixedLattice("family member on a different lattice");
    if (members[n].degree() != static_cast<int>(n) || !members[n].is_monic())
      throw NotGradedMonic("family member " + std::to_string(n) +
                           " is not monic of degree " + std::to_string(n));
  }
  return PolyFamily{lp, std::move(members)};
}

/// Q_k = D P_{k+1} / (k+1); one member shorter than the source family.
inline PolyFamily derivative_family(const PolyFamily& fam) {
  std::vector<ThetaPoly> out;
  for (int k = 0; k + 1 <= fam.max_degree(); ++k)
    out.push_back(Rational(1, k + 1) * apply_D(fam.at(k + 1)));
  return make_family(fam.params, std::move(out));
}

/// {S P_k}: the mean operator preserves degree and leading coefficient, so
/// the image of a graded monic family is again one.
inline PolyFamily mean_family(const PolyFamily& fam) {
  std::vector<ThetaPoly> out;
  out.reserve(fam.members.size());
  for (const auto& p : fam.members) out.push_back(apply_S(p));
  return make_family(fam.params, std::move(out));
}

/// Coefficients of `target` in the graded monic family: target = sum c_n P_n.
/// Returns c_0..c_d with d = deg(target); empty for the zero polynomial.
inline std::vector<Rational> expansion_coeffs(const ThetaPoly& target, const PolyFamily& basis) {
  if (!(target.params() == basis.params))
    throw MixedLattice("expansion target on a different lattice");
  const int d = target.degree();
  if (d > basis.max_degree())
    throw SizeMismatch("expansion target degree exceeds the family");
  if (d < 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
  ThetaPoly rest = target;
  for (int n = d; n >= 0; --n) {
    out[n] = rest.coeff(n);  // basis member n is monic of degree n
    if (out[n] != 0) rest = rest - out[n] * basis.at(n);
  }
  if (!rest.is_zero()) throw Error("expansion_coeffs: nonzero remainder");
  return out;
}

/// Three-term recurrence data: beta[n] = beta_n (n = 0..K-1) and
/// gamma[n-1] = gamma_n (n = 1..K-1).
struct RecurrenceCoeffs {
  std::vector<Rational> beta;
  std::vector<Rational> gamma;

  const Rational& beta_at(int n) const { return beta.at(static_cast<std::size_t>(n)); }
  const Rational& gamma_at(int n) const { return gamma.at(static_cast<std::size_t>(n) - 1); }
  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;
};

/// Read beta_n, gamma_n off the expansions mu P_n = P_{n+1} + beta_n P_n +
/// gamma_n P_{n-1}.  Any extra term means the family obeys no three-term
/// recurrence: NotThreeTerm.
inline RecurrenceCoeffs jacobi_from_family(const PolyFamily& fam) {
  RecurrenceCoeffs rec;
  for (int n = 0; n + 1 <= fam.max_degree(); ++n) {
    const std::vector<Rational> c = expansion_coeffs(mul_mu(fam.at(n)), fam);
    for (int j = 0; j + 1 < n; ++j)
      if (c[static_cast<std::size_t>(j)] != 0)
        throw NotThreeTerm("mu P_" + std::to_string(n) + " has a component on P_" +
                           std::to_string(j));
    rec.beta.push_back(c[static_cast<std::size_t>(n)]);
    if (n >= 1) rec.gamma.push_back(c[static_cast<std::size_t>(n) - 1]);
  }
  return rec;
}

}  // namespace quadlat
