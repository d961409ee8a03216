#pragma once

// Shared randomized-test plumbing.  The seed comes from QUADLAT_SEED when
// set, so failing runs can be replayed exactly.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#include "quadlat/quadlat.hpp"

namespace support {

using namespace quadlat;

inline std::uint64_t env_seed(std::uint64_t fallback = 12345) {
  if (const char* s = std::getenv("QUADLAT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return fallback;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = env_seed()) : rng_(seed) {}

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long long span, long long max_den) {
    return make_rational(range(-span, span), range(1, max_den));
  }

  Rational nonzero_rational(long long span, long long max_den) {
    Rational r = rational(span, max_den);
    while (r == 0) r = rational(span, max_den);
    return r;
  }

  LatticeParams lattice() { return LatticeParams{rational(6, 4), rational(6, 4)}; }

  ThetaPoly theta_poly(const LatticeParams& lp, int degree) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rational(6, 3);
    coeffs.back() = nonzero_rational(6, 3);
    return ThetaPoly(lp, std::move(coeffs));
  }

  // Data whose eigenfamily AND derivative eigenfamily are well-posed well
  // past degree nmax: the characterization suite at size nmax+4 reads
  // recurrence rows through that size, so admissibility is enforced through
  // nmax+4.  The rejection is purely structural (eigenvalue collisions);
  // residual checks downstream stay honest.
  BochnerData admissible_data(int nmax) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
      BochnerData bd;
      bd.lattice = lattice();
      bd.a0 = rational(4, 2);
      bd.a1 = rational(4, 2);
      bd.a2 = rational(4, 2);
      bd.b0 = rational(4, 2);
      bd.b1 = rational(4, 2);
      if (!eigenvalues_admissible(bd, nmax + 4)) continue;
      BochnerData hat = bd;  // derivative-family eigenvalues via shifted b0
      hat.b0 = 2 * bd.a0 + bd.b0;
      if (!eigenvalues_admissible(hat, nmax + 4)) continue;
      return bd;
    }
    throw Error("admissible_data: sampling stalled");
  }

  // A point where 2t+c2 avoids {0, +1, -1}.
  Rational safe_point(const LatticeParams& lp) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const Rational t = rational(30, 4);
      const Rational gap = mu_half_gap(lp, t);
      if (gap != 0 && gap != 1 && gap != -1) return t;
    }
    throw Error("safe_point: sampling stalled");
  }

 private:
  static bool eigenvalues_admissible(const BochnerData& bd, int through) {
    for (int m = 0; m <= through; ++m)
      if (uniqueness_failure(bd, m)) return false;
    return true;
  }

  std::mt19937_64 rng_;
};

}  // namespace support
