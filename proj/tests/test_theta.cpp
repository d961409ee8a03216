#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace quadlat;

namespace {
const LatticeParams kPlain{Rational(0), Rational(0)};
}

TEST_CASE("basis values on the plain lattice") {
  // theta_2(1) = (mu(1) - f_0)(mu(1) - f_1) = (1 - 1/16)(1 - 9/16)
  CHECK(theta_eval(kPlain, 2, Rational(1)) == Rational(105, 256));
  CHECK(theta_eval(kPlain, 0, Rational(7, 3)) == 1);
  for (int n = 0; n <= 5; ++n) {
    const ThetaPoly b = ThetaPoly::basis(kPlain, n);
    CHECK(eval(b, Rational(1)) == theta_eval(kPlain, n, Rational(1)));
    CHECK(b.is_monic());
  }
}

TEST_CASE("dual evaluation routes agree on random lattices") {
  support::Sampler sampler;
  for (int rep = 0; rep < 40; ++rep) {
    const LatticeParams lp = sampler.lattice();
    const Rational t = sampler.rational(15, 6);
    const int n = static_cast<int>(sampler.range(0, 7));
    // theta_eval would throw if its two internal routes ever disagreed.
    const Rational via_product = theta_eval(lp, n, t);
    Rational manual = 1;
    for (int k = 0; k < n; ++k) manual *= mu_at(lp, t) - f_coeff(lp, k);
    CHECK(via_product == manual);
  }
}

TEST_CASE("operator actions on basis elements") {
  const ThetaPoly theta2 = ThetaPoly::basis(kPlain, 2);

  const ThetaPoly d2 = apply_D(theta2);
  REQUIRE(d2.degree() == 1);
  CHECK(d2.coeff(1) == 2);
  CHECK(d2.coeff(0) == 0);
  CHECK(eval(d2, Rational(1)) == Rational(15, 8));

  const ThetaPoly s2 = apply_S(theta2);
  REQUIRE(s2.degree() == 2);
  CHECK(s2.coeff(2) == 1);
  CHECK(s2.coeff(1) == Rational(3, 2));
  CHECK(s2.coeff(0) == 0);

  const ThetaPoly m1 = mul_mu(ThetaPoly::basis(kPlain, 1));
  REQUIRE(m1.degree() == 2);
  CHECK(m1.coeff(2) == 1);
  CHECK(m1.coeff(1) == Rational(9, 16));
  CHECK(m1.coeff(0) == 0);

  const ThetaPoly m2 = mul_mu(mul_mu(ThetaPoly::basis(kPlain, 0)));
  REQUIRE(m2.degree() == 2);
  CHECK(m2.coeff(2) == 1);
  CHECK(m2.coeff(1) == Rational(5, 8));
  CHECK(m2.coeff(0) == Rational(1, 256));
}

TEST_CASE("coefficient actions match pointwise shifts") {
  support::Sampler sampler;
  for (int rep = 0; rep < 30; ++rep) {
    const LatticeParams lp = sampler.lattice();
    const ThetaPoly p = sampler.theta_poly(lp, static_cast<int>(sampler.range(0, 6)));
    const Rational t = sampler.safe_point(lp);
    CHECK(eval(apply_D(p), t) == pointwise_op_oracle(ShiftOp::D, p, t));
    CHECK(eval(apply_S(p), t) == pointwise_op_oracle(ShiftOp::S, p, t));
    CHECK(eval(mul_mu(p), t) == mu_at(lp, t) * eval(p, t));
  }
}

TEST_CASE("pointwise oracle refuses the singular point") {
  LatticeParams lp{Rational(3), Rational(1)};
  const ThetaPoly p = ThetaPoly::basis(lp, 2);
  CHECK_THROWS_AS(pointwise_op_oracle(ShiftOp::D, p, Rational(-3, 2)), SingularPoint);
}

TEST_CASE("mu-basis conversion roundtrip") {
  support::Sampler sampler;
  for (int rep = 0; rep < 20; ++rep) {
    const LatticeParams lp = sampler.lattice();
    const ThetaPoly p = sampler.theta_poly(lp, static_cast<int>(sampler.range(0, 6)));
    const MuPoly q = theta_to_mu(p);
    CHECK(mu_to_theta(q, lp) == p);
    const Rational t = sampler.rational(10, 4);
    CHECK(q.eval(mu_at(lp, t)) == eval(p, t));
  }
}

TEST_CASE("products evaluate pointwise") {
  support::Sampler sampler;
  for (int rep = 0; rep < 20; ++rep) {
    const LatticeParams lp = sampler.lattice();
    const ThetaPoly f = sampler.theta_poly(lp, static_cast<int>(sampler.range(0, 5)));
    const ThetaPoly g = sampler.theta_poly(lp, static_cast<int>(sampler.range(0, 5)));
    const ThetaPoly fg = f * g;
    CHECK(fg.degree() == f.degree() + g.degree());
    const Rational t = sampler.rational(12, 5);
    CHECK(eval(fg, t) == eval(f, t) * eval(g, t));
  }
}

TEST_CASE("mixed lattices are rejected") {
  const ThetaPoly a = ThetaPoly::basis(kPlain, 1);
  const ThetaPoly b = ThetaPoly::basis(LatticeParams{Rational(1), Rational(0)}, 1);
  CHECK_THROWS_AS(a + b, MixedLattice);
  CHECK_THROWS_AS(a * b, MixedLattice);
}

TEST_CASE("product and composition rules hold at random samples") {
  IdentityRunConfig cfg;
  cfg.seed = support::env_seed();
  cfg.trials = 12;
  cfg.max_degree = 4;
  cfg.lattices = 3;
  const auto reports = run_identity_suite(cfg);
  REQUIRE(reports.size() == 5);
  for (const auto& rep : reports) {
    INFO("rule " << rep.rule);
    CHECK(rep.trials == 12);
    CHECK(rep.points > 0);
    CHECK(rep.pass);
    CHECK(rep.residual_max == 0);
  }
}
