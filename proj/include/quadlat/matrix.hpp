#pragma once

// Exact N x N truncations of the banded infinite matrices attached to a
// lattice and a polynomial family.  Each truncation carries
//
//   upper_bandwidth u — entries with j - i > u are identically zero;
//   valid_rows        — leading rows that equal the infinite matrix's rows.
//
// Products propagate validity conservatively:
//   u_C = u_A + u_B,
//   valid_C = min(valid_A, valid_B - max(0, u_A), N - max(0, u_A)).

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "quadlat/errors.hpp"
#include "quadlat/family.hpp"
#include "quadlat/theta.hpp"

namespace quadlat {

class TruncatedMatrix {
 public:
  TruncatedMatrix(int size, int upper_bandwidth, int valid_rows)
      : size_(size),
        upper_bw_(std::clamp(upper_bandwidth, -size, size)),
        valid_rows_(std::clamp(valid_rows, 0, size)),
        data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Rational(0)) {
    if (size <= 0) throw SizeMismatch("matrix size must be positive");
  }

  int size() const { return size_; }
  int upper_bandwidth() const { return upper_bw_; }
  int valid_rows() const { return valid_rows_; }

  const Rational& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)];
  }

  /// Band-checked write: nonzero entries must satisfy j - i <= u.
  void set(int i, int j, Rational v) {
    if (j - i > upper_bw_ && v != 0)
      throw Error("matrix write above the declared bandwidth");
    data_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)] = std::move(v);
  }

 private:
  int size_;
  int upper_bw_;
  int valid_rows_;
  std::vector<Rational> data_;
};

inline TruncatedMatrix identity_matrix(int n) {
  TruncatedMatrix m(n, 0, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

namespace detail {
inline void require_same_size(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
}
}  // namespace detail

inline TruncatedMatrix add(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  detail::require_same_size(a, b);
  TruncatedMatrix out(a.size(), std::max(a.upper_bandwidth(), b.upper_bandwidth()),
                      std::min(a.valid_rows(), b.valid_rows()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) != 0 || b.at(i, j) != 0) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

inline TruncatedMatrix sub(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  detail::require_same_size(a, b);
  TruncatedMatrix out(a.size(), std::max(a.upper_bandwidth(), b.upper_bandwidth()),
                      std::min(a.valid_rows(), b.valid_rows()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) != 0 || b.at(i, j) != 0) out.set(i, j, a.at(i, j) - b.at(i, j));
  return out;
}

inline TruncatedMatrix scalar_mul(const Rational& s, const TruncatedMatrix& a) {
  TruncatedMatrix out(a.size(), a.upper_bandwidth(), a.valid_rows());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) != 0) out.set(i, j, s * a.at(i, j));
  return out;
}

/// Truncated product with the validity bookkeeping described atop the file.
inline TruncatedMatrix matmul(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  detail::require_same_size(a, b);
  const int n = a.size();
  const int shift = std::max(0, a.upper_bandwidth());
  const int valid = std::min({a.valid_rows(), b.valid_rows() - shift, n - shift});
  TruncatedMatrix out(n, a.upper_bandwidth() + b.upper_bandwidth(), valid);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.at(k, j) == 0) continue;
        out.set(i, j, out.at(i, j) + aik * b.at(k, j));
      }
    }
  }
  return out;
}

/// Inverse of a unit lower triangular truncation.  Row i of the inverse
/// depends only on rows 0..i, so the truncated inverse equals the truncation
/// of the infinite inverse and valid_rows carries over.
inline TruncatedMatrix invert_unit_lower(const TruncatedMatrix& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) != 1) throw NotUnitLowerTriangular("diagonal entry is not 1");
    for (int j = i + 1; j < n; ++j)
      if (a.at(i, j) != 0) throw NotUnitLowerTriangular("entry above the diagonal");
  }
  TruncatedMatrix out(n, 0, a.valid_rows());
  for (int i = 0; i < n; ++i) {
    out.set(i, i, 1);
    for (int j = i - 1; j >= 0; --j) {
      Rational s = 0;
      for (int k = j; k < i; ++k) s += a.at(i, k) * out.at(k, j);
      out.set(i, j, -s);
    }
  }
  return out;
}

/// q(X) for a MuPoly q, by Horner.
inline TruncatedMatrix poly_of_matrix(const MuPoly& q, const TruncatedMatrix& x) {
  TruncatedMatrix acc = scalar_mul(q.coeff(q.degree() < 0 ? 0 : q.degree()),
                                   identity_matrix(x.size()));
  for (int j = (q.degree() < 0 ? 0 : q.degree()) - 1; j >= 0; --j)
    acc = add(matmul(acc, x), scalar_mul(q.coeff(j), identity_matrix(x.size())));
  return acc;
}

// ---------------------------------------------------------------------------
// Standard truncations
// ---------------------------------------------------------------------------

/// D: subdiagonal 1, 2, 3, ...  (D theta = the coefficient map of D).
inline TruncatedMatrix build_D(int n) {
  TruncatedMatrix m(n, -1, n);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, i);
  return m;
}

/// D~: superdiagonal 1, 1/2, 1/3, ...
inline TruncatedMatrix build_Dtilde(int n) {
  TruncatedMatrix m(n, 1, n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, Rational(1, i + 1));
  return m;
}

/// X: superdiagonal of ones.
inline TruncatedMatrix build_X(int n) {
  TruncatedMatrix m(n, 1, n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  return m;
}

/// X1 = X + diag{f_0, f_1, ...}: multiplication by mu on the theta basis.
inline TruncatedMatrix build_X1(const LatticeParams& lp, int n) {
  TruncatedMatrix m(n, 1, n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, f_coeff(lp, i));
    if (i + 1 < n) m.set(i, i + 1, 1);
  }
  return m;
}

/// J = diag{0, 1, 1, ...}.
inline TruncatedMatrix build_J(int n) {
  TruncatedMatrix m(n, 0, n);
  for (int i = 1; i < n; ++i) m.set(i, i, 1);
  return m;
}

/// E: subdiagonal g_1, g_2, ...
inline TruncatedMatrix build_E(int n) {
  TruncatedMatrix m(n, -1, n);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, g_coeff(i));
  return m;
}

/// G = I + E: the coefficient map of the mean operator S.
inline TruncatedMatrix build_G(int n) {
  TruncatedMatrix m(n, 0, n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, 1);
    if (i >= 1) m.set(i, i - 1, g_coeff(i));
  }
  return m;
}

/// diag of the first n values; valid everywhere.
inline TruncatedMatrix build_diagonal(const std::vector<Rational>& values, int n) {
  if (static_cast<int>(values.size()) < n)
    throw SizeMismatch("not enough diagonal values");
  TruncatedMatrix m(n, 0, n);
  for (int i = 0; i < n; ++i) m.set(i, i, values[static_cast<std::size_t>(i)]);
  return m;
}

// ---------------------------------------------------------------------------
// Family-driven truncations
// ---------------------------------------------------------------------------

/// A: row n holds the theta coefficients of P_n.  Unit lower triangular.
/// Rows past the known range get a formal unit diagonal so triangular
/// algebra (inversion in particular) stays defined; they are invalid either
/// way and the validity rules keep them out of every compared entry.
inline TruncatedMatrix build_A(const PolyFamily& fam, int n) {
  TruncatedMatrix m(n, 0, std::min(n, fam.max_degree() + 1));
  for (int i = 0; i < m.valid_rows(); ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, fam.at(i).coeff(j));
  for (int i = m.valid_rows(); i < n; ++i) m.set(i, i, 1);
  return m;
}

/// A~: row n holds the theta coefficients of D P_{n+1} / (n+1); equals
/// D~ A D as infinite matrices.
inline TruncatedMatrix build_Atilde(const PolyFamily& fam, int n) {
  TruncatedMatrix m(n, 0, std::min(n, fam.max_degree()));
  for (int i = 0; i < m.valid_rows(); ++i) {
    const ThetaPoly q = Rational(1, i + 1) * apply_D(fam.at(i + 1));
    for (int j = 0; j <= i; ++j) m.set(i, j, q.coeff(j));
  }
  for (int i = m.valid_rows(); i < n; ++i) m.set(i, i, 1);
  return m;
}

/// Tridiagonal L from recurrence data: diag beta_n, superdiag 1, subdiag
/// gamma_n.  Valid as far as the data reaches.
inline TruncatedMatrix build_L(const RecurrenceCoeffs& rec, int n) {
  TruncatedMatrix m(n, 1, std::min(n, static_cast<int>(rec.beta.size())));
  for (int i = 0; i < m.valid_rows(); ++i) {
    m.set(i, i, rec.beta_at(i));
    if (i + 1 < n) m.set(i, i + 1, 1);
    if (i >= 1) m.set(i, i - 1, rec.gamma_at(i));
  }
  return m;
}

/// M: the L-matrix of the derivative family (row/column k refers to
/// D P_{k+1} / (k+1)).
inline TruncatedMatrix build_M(const PolyFamily& fam, int n) {
  return build_L(jacobi_from_family(derivative_family(fam)), n);
}

/// W: the Pearson operator phi D + psi S in the theta basis.  Row j holds
/// the theta coefficients of phi * (D theta_j) + psi * (S theta_j), which
/// land on columns j-1, j, j+1 exactly when deg phi <= 2 and deg psi <= 1;
/// any component outside that window throws NotThreeTerm.
inline TruncatedMatrix build_W(const LatticeParams& lp, const MuPoly& phi,
                               const MuPoly& psi, int n) {
  TruncatedMatrix m(n, 1, n);
  for (int j = 0; j < n; ++j) {
    const ThetaPoly t = ThetaPoly::basis(lp, j);
    const ThetaPoly row = apply_mu_poly(phi, apply_D(t)) + apply_mu_poly(psi, apply_S(t));
    for (int k = 0; k <= row.degree(); ++k) {
      const Rational& c = row.coeff(k);
      if (c == 0) continue;
      if (k < j - 1 || k > j + 1)
        throw NotThreeTerm("pearson operator row " + std::to_string(j) +
                           " has a component on index " + std::to_string(k));
      if (k < n) m.set(j, k, c);
    }
  }
  return m;
}

/// The selector diag(1, 0, ..., 0); right-multiplication keeps column 0.
inline TruncatedMatrix build_first_column_selector(int n) {
  std::vector<Rational> e0(static_cast<std::size_t>(n), Rational(0));
  e0[0] = 1;
  return build_diagonal(e0, n);
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

struct ResidualReport {
  int joint_valid_rows = 0;
  Rational max_abs = 0;
  std::optional<std::array<int, 2>> witness;  // first nonzero position

  bool zero() const { return max_abs == 0; }
};

/// Entrywise residual of a - b over the jointly valid leading rows.
/// Throws TruncationTooSmall when no row is jointly valid.
inline ResidualReport compare_on_valid(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  detail::require_same_size(a, b);
  ResidualReport rep;
  rep.joint_valid_rows = std::min(a.valid_rows(), b.valid_rows());
  if (rep.joint_valid_rows <= 0)
    throw TruncationTooSmall("no jointly valid rows to compare");
  for (int i = 0; i < rep.joint_valid_rows; ++i) {
    for (int j = 0; j < a.size(); ++j) {
      Rational d = a.at(i, j) - b.at(i, j);
      if (d == 0) continue;
      if (d < 0) d = -d;
      if (!rep.witness) rep.witness = {i, j};
      if (d > rep.max_abs) rep.max_abs = d;
    }
  }
  return rep;
}

}  // namespace quadlat
