#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace quadlat;

namespace {
const LatticeParams kPlain{Rational(0), Rational(0)};

BochnerData plain_data(Rational a0, Rational a1, Rational a2, Rational b0, Rational b1) {
  BochnerData bd;
  bd.lattice = kPlain;
  bd.a0 = std::move(a0);
  bd.a1 = std::move(a1);
  bd.a2 = std::move(a2);
  bd.b0 = std::move(b0);
  bd.b1 = std::move(b1);
  return bd;
}
}  // namespace

TEST_CASE("eigenvalues and uniqueness") {
  const BochnerData bd = plain_data(1, 0, 0, Rational(1, 3), 0);
  CHECK(lambda_n(bd, 0) == 0);
  CHECK(lambda_n(bd, 2) == 2 * (1 + Rational(1, 3)));

  // a0 = 1, b0 = 0: lambda_1 = lambda_0 = 0, reported at the colliding
  // lower index.
  const BochnerData bad = plain_data(1, 2, 3, 0, 1);
  CHECK(uniqueness_failure(bad, 1).has_value());
  CHECK_FALSE(check_uniqueness(bad, 1));
  try {
    require_uniqueness_through(bad, 3);
    FAIL("expected DegenerateEigenvalues");
  } catch (const DegenerateEigenvalues& e) {
    CHECK(e.index == 0);
  }

  // a0 = 1, b0 = -2 gives lambda_1 = lambda_2 = -2: a nonadjacent-degree
  // collision the per-degree scan must still see.
  const BochnerData pair = plain_data(1, 0, 0, -2, 0);
  CHECK(uniqueness_failure(pair, 2).has_value());
}

TEST_CASE("operator action matches the closed coefficient formulas") {
  support::Sampler sampler;
  for (int rep = 0; rep < 20; ++rep) {
    BochnerData bd;
    bd.lattice = sampler.lattice();
    bd.a0 = sampler.rational(5, 3);
    bd.a1 = sampler.rational(5, 3);
    bd.a2 = sampler.rational(5, 3);
    bd.b0 = sampler.rational(5, 3);
    bd.b1 = sampler.rational(5, 3);
    const int n = static_cast<int>(sampler.range(0, 6));
    const int j = static_cast<int>(sampler.range(0, 6));
    const ThetaPoly image = apply_Ln(bd, n, ThetaPoly::basis(bd.lattice, j));
    const KCoeffs k = k_coeffs(bd, n, j);
    CHECK(image.coeff(j) == k.k0);
    if (j >= 1) CHECK(image.coeff(j - 1) == k.k1);
    if (j >= 2) CHECK(image.coeff(j - 2) == k.k2);
    CHECK(image.degree() <= j);
  }
}

TEST_CASE("solver produces monic eigenfunctions") {
  support::Sampler sampler;
  const BochnerData bd = sampler.admissible_data(7);
  for (int n = 0; n <= 7; ++n) {
    const ThetaPoly p = solve_pn(bd, n);
    CHECK(p.degree() == n);
    CHECK(p.is_monic());
    CHECK(apply_Ln(bd, n, p).is_zero());
  }
}

TEST_CASE("leading coefficient formulas agree with the solver") {
  support::Sampler sampler;
  for (int rep = 0; rep < 6; ++rep) {
    const BochnerData bd = sampler.admissible_data(7);
    for (int n = 0; n <= 6; ++n) {
      const ThetaPoly p = solve_pn(bd, n);
      const auto [p1, p2] = closed_p1_p2(bd, n);
      CHECK((n >= 1 ? p.coeff(n - 1) : Rational(0)) == p1);
      CHECK((n >= 2 ? p.coeff(n - 2) : Rational(0)) == p2);
    }
  }
}

TEST_CASE("first recurrence values in closed form") {
  support::Sampler sampler;
  for (int rep = 0; rep < 10; ++rep) {
    BochnerData bd = sampler.admissible_data(4);
    const auto [p1, p2] = closed_p1_p2(bd, 1);
    CHECK(p1 == f_coeff(bd.lattice, 0) + bd.b1 / bd.b0);
    CHECK(p2 == 0);
    const RecurrenceCoeffs rec = ttrr_coeffs(bd, 2);
    CHECK(rec.beta_at(0) == -bd.b1 / bd.b0);
  }
}

TEST_CASE("closed-form recurrence equals the recurrence of the solved family") {
  support::Sampler sampler;
  for (int rep = 0; rep < 8; ++rep) {
    const BochnerData bd = sampler.admissible_data(7);
    const RecurrenceCoeffs closed = ttrr_coeffs(bd, 6);
    const RecurrenceCoeffs from_family = jacobi_from_family(solve_family(bd, 7));
    CHECK(closed == from_family);
  }
}

TEST_CASE("recurrence cross-check along independent routes") {
  support::Sampler sampler;
  for (int rep = 0; rep < 8; ++rep) {
    const BochnerData bd = sampler.admissible_data(7);
    const CheckReport r = ttrr_cross_check(bd, 6);
    CHECK(r.pass);
    CHECK(r.residual_max == 0);
    CHECK(r.valid_rows == 7);
  }
}

TEST_CASE("the auxiliary polynomial collapses to one term") {
  support::Sampler sampler;
  const BochnerData bd = sampler.admissible_data(6);
  for (int n = 1; n <= 4; ++n) {
    const CheckReport r = verify_un(bd, n);
    CHECK(r.pass);
    CHECK(r.residual_max == 0);
  }
  CHECK_THROWS_AS(verify_un(bd, 0), SizeMismatch);
}

TEST_CASE("a family that is not an eigenfamily fails the three-term test") {
  std::vector<ThetaPoly> members;
  members.push_back(ThetaPoly::basis(kPlain, 0));
  members.push_back(ThetaPoly::basis(kPlain, 1));
  members.push_back(ThetaPoly::basis(kPlain, 2) + ThetaPoly::basis(kPlain, 0));
  members.push_back(ThetaPoly::basis(kPlain, 3));
  const PolyFamily fam = make_family(kPlain, members);

  // mu P_2 picks up a P_0 component of f_0 - f_2 = 1/16 - 25/16.
  const std::vector<Rational> c = expansion_coeffs(mul_mu(fam.at(2)), fam);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Rational(-3, 2));
  CHECK_THROWS_AS(jacobi_from_family(fam), NotThreeTerm);
}

TEST_CASE("family construction guards") {
  std::vector<ThetaPoly> members;
  members.push_back(ThetaPoly::basis(kPlain, 0));
  members.push_back(2 * ThetaPoly::basis(kPlain, 1));  // not monic
  CHECK_THROWS_AS(make_family(kPlain, members), NotGradedMonic);

  std::vector<ThetaPoly> gap;
  gap.push_back(ThetaPoly::basis(kPlain, 0));
  gap.push_back(ThetaPoly::basis(kPlain, 2));  // wrong degree at index 1
  CHECK_THROWS_AS(make_family(kPlain, gap), NotGradedMonic);
}
