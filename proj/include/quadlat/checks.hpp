#pragma once

// The matrix characterization suite.  Each check compares two independently
// assembled truncations over their jointly valid rows; a pass means the
// residual is exactly zero there.
//
// When a context carries Bochner data, the tridiagonal L comes from that
// data's closed-form recurrence coefficients (so perturbed data is visible
// to every L-based identity); for family-only contexts L falls back to
// jacobi_from_family.  M always comes from the derivative family, A and A~
// from the subject family, and W from the data's phi and psi.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadlat/bochner.hpp"
#include "quadlat/matrix.hpp"
#include "quadlat/report.hpp"

namespace quadlat {

enum class CheckKind {
  lemma1,
  hahn,
  geronimus_noo,
  geronimus_gern,
  newchar,
  tricomi_main,
  tricomi_uw,
  tricomi_wu,
  bochner,
  aux_LU,
  aux_UM,
  aux_DtildeD,
  aux_commutator,
};

inline const std::vector<std::pair<CheckKind, const char*>>& check_kind_names() {
  static const std::vector<std::pair<CheckKind, const char*>> table = {
      {CheckKind::lemma1, "lemma1"},
      {CheckKind::hahn, "hahn"},
      {CheckKind::geronimus_noo, "geronimus_noo"},
      {CheckKind::geronimus_gern, "geronimus_gern"},
      {CheckKind::newchar, "newchar"},
      {CheckKind::tricomi_main, "tricomi_main"},
      {CheckKind::tricomi_uw, "tricomi_uw"},
      {CheckKind::tricomi_wu, "tricomi_wu"},
      {CheckKind::bochner, "bochner"},
      {CheckKind::aux_LU, "aux_LU"},
      {CheckKind::aux_UM, "aux_UM"},
      {CheckKind::aux_DtildeD, "aux_DtildeD"},
      {CheckKind::aux_commutator, "aux_commutator"},
  };
  return table;
}

inline std::string check_kind_name(CheckKind kind) {
  for (const auto& [k, name] : check_kind_names())
    if (k == kind) return name;
  throw Error("unknown check kind");
}

inline std::optional<CheckKind> check_kind_from_name(const std::string& name) {
  for (const auto& [k, n] : check_kind_names())
    if (name == n) return k;
  return std::nullopt;
}

inline std::vector<CheckKind> all_check_kinds() {
  std::vector<CheckKind> out;
  for (const auto& [k, name] : check_kind_names()) out.push_back(k);
  return out;
}

struct CheckContext {
  LatticeParams lattice;
  int size = 0;
  std::optional<BochnerData> data;
  std::optional<PolyFamily> family;
};

/// Context with the family solved from the data (members P_0..P_nmax).
inline CheckContext make_check_context(const BochnerData& bd, int size, int nmax) {
  return CheckContext{bd.lattice, size, bd, solve_family(bd, nmax)};
}

/// Family-only context: lattice checks and family identities, no phi/psi.
inline CheckContext make_check_context(const PolyFamily& fam, int size) {
  return CheckContext{fam.params, size, std::nullopt, fam};
}

/// Explicit pairing, e.g. a family held fixed against perturbed data.
inline CheckContext make_check_context(const BochnerData& bd, PolyFamily fam, int size) {
  if (!(bd.lattice == fam.params))
    throw MixedLattice("context family and data on different lattices");
  return CheckContext{bd.lattice, size, bd, std::move(fam)};
}

/// One compared pair of truncations.
struct CheckSides {
  TruncatedMatrix lhs, rhs;
};

namespace detail {

struct CheckBuilder {
  const CheckContext& ctx;

  const PolyFamily& family() const {
    if (!ctx.family) throw MissingInput("check requires a polynomial family");
    return *ctx.family;
  }
  const BochnerData& data() const {
    if (!ctx.data) throw MissingInput("check requires bochner data");
    return *ctx.data;
  }

  int n() const { return ctx.size; }

  TruncatedMatrix L() const {
    if (ctx.data) return build_L(ttrr_coeffs(*ctx.data, n() - 1), n());
    return build_L(jacobi_from_family(family()), n());
  }
  TruncatedMatrix M() const { return build_M(family(), n()); }
  TruncatedMatrix A() const { return build_A(family(), n()); }
  TruncatedMatrix Atilde() const { return build_Atilde(family(), n()); }
  TruncatedMatrix U() const {
    return matmul(matmul(A(), build_G(n())), invert_unit_lower(Atilde()));
  }
  TruncatedMatrix phi_X1() const {
    return poly_of_matrix(data().phi(), build_X1(ctx.lattice, n()));
  }
  TruncatedMatrix psi_X1() const {
    return poly_of_matrix(data().psi(), build_X1(ctx.lattice, n()));
  }
  TruncatedMatrix Lambda() const {
    std::vector<Rational> diag;
    for (int i = 0; i < n(); ++i) diag.push_back(lambda_n(data(), i));
    return build_diagonal(diag, n());
  }
  TruncatedMatrix zero() const { return TruncatedMatrix(n(), -n(), n()); }

  /// Column of generalized moments <u, theta_j> of the dual functional of a
  /// family whose coefficient matrix is `base` (A or A~), padded with zero
  /// columns: base^{-1} diag(1, 0, ..., 0).
  TruncatedMatrix moments(const TruncatedMatrix& base) const {
    return matmul(invert_unit_lower(base), build_first_column_selector(n()));
  }
};

}  // namespace detail

/// The two sides of the identity a kind asserts (two pairs for aux_DtildeD).
inline std::vector<CheckSides> check_sides(const CheckContext& ctx, CheckKind kind) {
  const detail::CheckBuilder b{ctx};
  const int n = ctx.size;
  const Rational quarter(1, 4);
  const Rational half(1, 2);

  switch (kind) {
    case CheckKind::lemma1:
      return {{matmul(b.L(), b.A()), matmul(b.A(), build_X1(ctx.lattice, n))}};

    case CheckKind::hahn:
      return {{matmul(b.M(), b.Atilde()), matmul(b.Atilde(), build_X1(ctx.lattice, n))}};

    case CheckKind::geronimus_noo: {
      const TruncatedMatrix rhs =
          sub(matmul(b.L(), build_D(n)),
              matmul(build_D(n), add(b.M(), scalar_mul(quarter, identity_matrix(n)))));
      return {{b.U(), rhs}};
    }

    case CheckKind::geronimus_gern: {
      const TruncatedMatrix u =
          sub(matmul(b.L(), build_D(n)),
              matmul(build_D(n), add(b.M(), scalar_mul(quarter, identity_matrix(n)))));
      return {{matmul(b.A(), build_G(n)), matmul(u, b.Atilde())}};
    }

    case CheckKind::newchar: {
      const TruncatedMatrix L = b.L();
      const TruncatedMatrix M = b.M();
      const TruncatedMatrix D = build_D(n);
      const TruncatedMatrix LD = matmul(L, D);
      const TruncatedMatrix DM = matmul(D, M);
      TruncatedMatrix lhs = sub(matmul(L, LD), scalar_mul(2, matmul(LD, M)));
      lhs = add(lhs, matmul(D, matmul(M, M)));
      lhs = sub(lhs, scalar_mul(half, add(LD, DM)));
      lhs = add(lhs, scalar_mul(f_coeff(ctx.lattice, 0), D));
      return {{lhs, b.zero()}};
    }

    // The dual functional u of the family (<u, P_0> = 1, <u, P_n> = 0) is a
    // weak solution of the lattice Pearson equation
    //   <u, phi D p + psi S p> = 0 for every polynomial p,
    // with exactly the Bochner pair (phi, psi); on the generalized moments
    // nu_j = <u, theta_j> this is the three-banded recursion W nu = 0.
    case CheckKind::tricomi_main: {
      const TruncatedMatrix w =
          build_W(ctx.lattice, b.data().phi(), b.data().psi(), n);
      return {{matmul(w, b.moments(b.A())), b.zero()}};
    }

    // The same Pearson equation for the derivative family's functional, with
    // the hat data (phi^, psi^) of that family's own Bochner equation.
    case CheckKind::tricomi_uw: {
      const BochnerData hat = derivative_data(b.data());
      const TruncatedMatrix w = build_W(ctx.lattice, hat.phi(), hat.psi(), n);
      return {{matmul(w, b.moments(b.Atilde())), b.zero()}};
    }

    // Rodrigues-type step between the two functionals: with Q_k the
    // derivative family,
    //   <u, phi S Q_k + m2 psi D Q_k> = -lambda_1 gamma_1 delta_{k,0},
    // a consequence of the Pearson equation applied to the product Q_k mu,
    // the equation D-image (phi D + psi S) Q_k = (lambda_{k+1}/(k+1)) P_{k+1},
    // and the three-term recurrence.
    case CheckKind::tricomi_wu: {
      const TruncatedMatrix X1 = build_X1(ctx.lattice, n);
      const TruncatedMatrix m2 =
          add(X1, scalar_mul(delta_x(ctx.lattice), identity_matrix(n)));
      const TruncatedMatrix op = add(matmul(build_G(n), b.phi_X1()),
                                     matmul(build_D(n), matmul(b.psi_X1(), m2)));
      std::vector<Rational> head(static_cast<std::size_t>(n), Rational(0));
      head[0] = -lambda_n(b.data(), 1) * ttrr_coeffs(b.data(), 2).gamma_at(1);
      return {{matmul(b.Atilde(), matmul(op, b.moments(b.A()))),
               build_diagonal(head, n)}};
    }

    case CheckKind::bochner: {
      const TruncatedMatrix D = build_D(n);
      const TruncatedMatrix op =
          add(matmul(matmul(D, D), b.phi_X1()),
              matmul(D, matmul(build_G(n), b.psi_X1())));
      return {{matmul(b.A(), op), matmul(b.Lambda(), b.A())}};
    }

    case CheckKind::aux_LU: {
      const TruncatedMatrix L = b.L();
      const TruncatedMatrix LD = matmul(L, build_D(n));
      const TruncatedMatrix rhs =
          sub(sub(matmul(L, LD), matmul(LD, b.M())), scalar_mul(quarter, LD));
      return {{matmul(L, b.U()), rhs}};
    }

    case CheckKind::aux_UM: {
      const TruncatedMatrix M = b.M();
      const TruncatedMatrix D = build_D(n);
      const TruncatedMatrix DM = matmul(D, M);
      const TruncatedMatrix rhs =
          sub(sub(matmul(b.L(), DM), matmul(DM, M)), scalar_mul(quarter, DM));
      return {{matmul(b.U(), M), rhs}};
    }

    case CheckKind::aux_DtildeD: {
      const TruncatedMatrix D = build_D(n);
      const TruncatedMatrix Dt = build_Dtilde(n);
      return {{matmul(Dt, D), identity_matrix(n)}, {matmul(D, Dt), build_J(n)}};
    }

    case CheckKind::aux_commutator: {
      const TruncatedMatrix X1 = build_X1(ctx.lattice, n);
      const TruncatedMatrix E = build_E(n);
      const TruncatedMatrix D = build_D(n);
      const TruncatedMatrix X1D = matmul(X1, D);
      const TruncatedMatrix DX1 = matmul(D, X1);
      const TruncatedMatrix lhs = sub(matmul(X1, E), matmul(E, X1));
      TruncatedMatrix rhs = sub(scalar_mul(half, add(X1D, DX1)),
                                scalar_mul(quarter, sub(X1D, DX1)));
      rhs = sub(rhs, scalar_mul(f_coeff(ctx.lattice, 0), D));
      return {{lhs, rhs}};
    }
  }
  throw Error("unknown check kind");
}

/// Run one check: assemble both sides, compare on the jointly valid rows.
inline CheckReport check_identity(const CheckContext& ctx, CheckKind kind) {
  CheckReport rep;
  rep.kind = check_kind_name(kind);
  rep.size = ctx.size;
  rep.pass = true;
  bool first = true;
  for (const CheckSides& sides : check_sides(ctx, kind)) {
    const ResidualReport res = compare_on_valid(sides.lhs, sides.rhs);
    rep.valid_rows = first ? res.joint_valid_rows
                           : std::min(rep.valid_rows, res.joint_valid_rows);
    first = false;
    if (!res.zero()) {
      rep.pass = false;
      if (!rep.witness) rep.witness = res.witness;
      if (res.max_abs > rep.residual_max) rep.residual_max = res.max_abs;
    }
  }
  return rep;
}

}  // namespace quadlat
