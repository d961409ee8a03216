#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace quadlat;

TEST_CASE("rational construction and parsing") {
  CHECK(make_rational(2, 4) == Rational(1, 2));
  CHECK(make_rational(7, -14) == make_rational(-1, 2));
  CHECK(make_rational(-3, -9) == Rational(1, 3));
  CHECK_THROWS_AS(make_rational(1, 0), ParseError);

  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7/14") == make_rational(-1, 2));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(parse_rational("0") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("3/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("two"), ParseError);
}

TEST_CASE("rational serialization") {
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(make_rational(-5, 4), 1) == "-1.3");
  CHECK(to_decimal(Rational(1, 2), 0) == "1");
  CHECK(to_decimal(Rational(0), 2) == "0.00");
}

TEST_CASE("lattice evaluation") {
  LatticeParams lp{Rational(1, 2), Rational(-3)};
  const Rational t(5, 4);
  CHECK(mu_at(lp, t) == t * t + lp.c2 * t + lp.c3);
  CHECK(mu_half_gap(lp, t) == 2 * t + lp.c2);
  CHECK(delta_x(lp) == lp.c2 * lp.c2 / 4 - lp.c3);
  CHECK(m2_at(lp, t) == mu_at(lp, t) + delta_x(lp));
  CHECK(m1_const() == Rational(1, 2));
}

TEST_CASE("interlacing sequence identities hold on random lattices") {
  support::Sampler sampler;
  for (int rep = 0; rep < 25; ++rep) {
    const LatticeParams lp = sampler.lattice();
    const Rational f0 = f_coeff(lp, 0);
    CHECK(f0 == lp.c3 + Rational(1, 16) - lp.c2 * lp.c2 / 4);
    for (long long n = -3; n <= 9; ++n) {
      CHECK(f_coeff(lp, n + 1) - f_coeff(lp, n) == Rational(n + 1, 2));
      CHECK(f_coeff(lp, n + 1) + f_coeff(lp, n) ==
            Rational((n + 1) * (n + 1)) / 2 + 2 * f0);
    }
    const Rational t = sampler.rational(20, 8);
    for (long long n = 0; n <= 6; ++n) {
      const Rational half_gap = (2 * t + lp.c2) / 2;
      const Rational node(2 * n + 1, 4);
      CHECK(mu_at(lp, t) - f_coeff(lp, n) == half_gap * half_gap - node * node);
    }
  }
}

TEST_CASE("companion sequence") {
  CHECK(g_coeff(0) == 0);
  CHECK(g_coeff(1) == Rational(1, 4));
  CHECK(g_coeff(2) == Rational(3, 2));
  for (long long n = 0; n <= 10; ++n)
    CHECK(g_coeff(n + 1) - g_coeff(n) == Rational(4 * n + 1, 4));
}

TEST_CASE("lattice parameter equality") {
  CHECK(LatticeParams{Rational(1), Rational(2)} == LatticeParams{Rational(1), Rational(2)});
  CHECK(!(LatticeParams{Rational(1), Rational(2)} == LatticeParams{Rational(1), Rational(3)}));
}
