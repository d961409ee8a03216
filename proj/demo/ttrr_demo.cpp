// Library walkthrough: set up equation data for a Racah family, solve for
// the monic eigenfamily, and print its three-term recurrence exactly.

#include <iostream>

#include "quadlat/quadlat.hpp"

using namespace quadlat;

int main() {
  const RacahParams rp{Rational(1), Rational(1), Rational(1), Rational(1, 2)};
  const BochnerData bd = racah_bochner(rp);

  std::cout << "lattice: mu(t) = t^2 + (" << to_string(bd.lattice.c2) << ") t + ("
            << to_string(bd.lattice.c3) << ")\n";
  std::cout << "phi: a0 = " << to_string(bd.a0) << ", a1 = " << to_string(bd.a1)
            << ", a2 = " << to_string(bd.a2) << "\n";
  std::cout << "psi: b0 = " << to_string(bd.b0) << ", b1 = " << to_string(bd.b1)
            << "\n\n";

  const int nmax = 6;
  const RecurrenceCoeffs rec = ttrr_coeffs(bd, nmax);
  std::cout << "P_{n+1} = (mu - beta_n) P_n - gamma_n P_{n-1}\n";
  for (int n = 0; n <= nmax; ++n) {
    std::cout << "  n = " << n << ": beta = " << to_string(rec.beta_at(n));
    if (n >= 1) std::cout << ", gamma = " << to_string(rec.gamma_at(n));
    std::cout << ", lambda = " << to_string(lambda_n(bd, n)) << "\n";
  }

  const ThetaPoly p3 = solve_pn(bd, 3);
  std::cout << "\nP_3 in the theta basis:";
  for (int k = 0; k <= 3; ++k) std::cout << " " << to_string(p3.coeff(k));
  const MuPoly q3 = theta_to_mu(p3);
  std::cout << "\nP_3 in powers of mu:   ";
  for (int k = 0; k <= 3; ++k) std::cout << " " << to_string(q3.coeff(k));
  std::cout << "\n\nconsistency: the series oracle gives the same polynomials: ";
  const PolyFamily oracle = racah_family(rp, 3);
  std::cout << (oracle.at(3) == p3 ? "yes" : "NO") << "\n";
  return 0;
}
