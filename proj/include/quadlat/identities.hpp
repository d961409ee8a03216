#pragma once

// Randomized verification of the five product/composition rules.  Each rule's
// left side is computed through the coefficient machinery (operator actions on
// theta expansions) and its right side purely pointwise from shifted function
// values, so the two evaluation routes check each other.  Sample points avoid
// 2t + c2 in {0, +1, -1}: the composite rules take divided differences at
// t and at t +- 1/2.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quadlat/theta.hpp"

namespace quadlat {

struct IdentityRunConfig {
  std::uint64_t seed = 12345;
  int trials = 100;
  int max_degree = 6;
  int lattices = 10;
};

struct IdentityReport {
  std::string rule;  // "a".."e"
  int trials = 0;
  int points = 0;
  bool pass = true;
  Rational residual_max = 0;
};

namespace detail {

using PointFn = std::function<Rational(const Rational&)>;

inline PointFn d_op(const LatticeParams& lp, PointFn h) {
  return [lp, h = std::move(h)](const Rational& t) {
    const Rational gap = mu_half_gap(lp, t);
    if (gap == 0) throw SingularPoint("divided difference at a singular point");
    const Rational half(1, 2);
    return (h(t + half) - h(t - half)) / gap;
  };
}

inline PointFn s_op(PointFn h) {
  return [h = std::move(h)](const Rational& t) {
    const Rational half(1, 2);
    return (h(t + half) + h(t - half)) / 2;
  };
}

class IdentitySampler {
 public:
  explicit IdentitySampler(std::uint64_t seed) : rng_(seed) {}

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long long span, long long max_den) {
    return make_rational(range(-span, span), range(1, max_den));
  }

  LatticeParams lattice() { return LatticeParams{rational(8, 4), rational(8, 4)}; }

  ThetaPoly theta_poly(const LatticeParams& lp, int degree) {
    std::vector<Rational> coeffs(degree + 1);
    for (int k = 0; k <= degree; ++k) coeffs[k] = rational(6, 3);
    while (coeffs[degree] == 0) coeffs[degree] = rational(6, 3);
    return ThetaPoly(lp, std::move(coeffs));
  }

  // Distinct points with 2t+c2 not in {0, +1, -1}.
  std::vector<Rational> points(const LatticeParams& lp, int count) {
    std::vector<Rational> out;
    std::set<Rational> used;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
      if (++guard > 10000) throw Error("point sampling stalled");
      const Rational t = rational(40, 4);
      const Rational gap = mu_half_gap(lp, t);
      if (gap == 0 || gap == 1 || gap == -1) continue;
      if (!used.insert(t).second) continue;
      out.push_back(t);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Run all five rules over random polynomial pairs; reports indexed a..e.
inline std::vector<IdentityReport> run_identity_suite(const IdentityRunConfig& cfg) {
  if (cfg.trials < 1 || cfg.max_degree < 0 || cfg.lattices < 1)
    throw ParseError("identity run config: trials >= 1, max_degree >= 0, lattices >= 1");

  std::vector<IdentityReport> reports;
  for (const char* rule : {"a", "b", "c", "d", "e"})
    reports.push_back(IdentityReport{rule});

  auto record = [&](int idx, const Rational& lhs, const Rational& rhs) {
    reports[idx].points += 1;
    const Rational diff = abs(Rational(lhs - rhs));
    if (diff != 0) {
      reports[idx].pass = false;
      if (diff > reports[idx].residual_max) reports[idx].residual_max = diff;
    }
  };

  detail::IdentitySampler sampler(cfg.seed);
  const int per_lattice = (cfg.trials + cfg.lattices - 1) / cfg.lattices;
  LatticeParams lp;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    if (trial % per_lattice == 0) lp = sampler.lattice();

    const ThetaPoly f =
        sampler.theta_poly(lp, static_cast<int>(sampler.range(0, cfg.max_degree)));
    const ThetaPoly g =
        sampler.theta_poly(lp, static_cast<int>(sampler.range(0, cfg.max_degree)));
    const int npts = 2 * (f.degree() + g.degree()) + 3;
    const std::vector<Rational> pts = sampler.points(lp, npts);

    for (auto& rep : reports) rep.trials += 1;

    const detail::PointFn F = [&f](const Rational& t) { return eval(f, t); };
    const detail::PointFn G = [&g](const Rational& t) { return eval(g, t); };
    const detail::PointFn Df = detail::d_op(lp, F);
    const detail::PointFn Dg = detail::d_op(lp, G);
    const detail::PointFn Sf = detail::s_op(F);
    const detail::PointFn Sg = detail::s_op(G);
    const detail::PointFn SDf = detail::s_op(detail::d_op(lp, F));
    const detail::PointFn DDf = detail::d_op(lp, detail::d_op(lp, F));

    const ThetaPoly fg = f * g;
    const ThetaPoly a_lhs = apply_D(fg);
    const ThetaPoly b_lhs = apply_S(fg);
    const ThetaPoly mu_theta =
        ThetaPoly::basis(lp, 1) + f_coeff(lp, 0) * ThetaPoly::basis(lp, 0);
    const ThetaPoly c_lhs = apply_S(mu_theta);
    const ThetaPoly d_lhs = apply_D(apply_S(f));
    const ThetaPoly e_lhs = apply_S(apply_S(f));

    const Rational half(1, 2);
    for (const Rational& t : pts) {
      record(0, eval(a_lhs, t), Sf(t) * Dg(t) + Df(t) * Sg(t));
      record(1, eval(b_lhs, t), m2_at(lp, t) * Df(t) * Dg(t) + Sf(t) * Sg(t));
      record(2, eval(c_lhs, t), mu_at(lp, t) + Rational(1, 4));
      record(3, eval(d_lhs, t), SDf(t) + half * DDf(t));
      record(4, eval(e_lhs, t), half * SDf(t) + m2_at(lp, t) * DDf(t) + F(t));
    }
  }
  return reports;
}

}  // namespace quadlat
