#pragma once

// Polynomials over a quadratic lattice in two exact bases:
//
//   ThetaPoly — coefficients over theta_n(t) = prod_{k<n} (mu(t) - f_k),
//               the Newton basis attached to the lattice;
//   MuPoly    — coefficients over powers of mu, lattice-free.
//
// The divided-difference operator D and the mean operator S act on ThetaPoly
// coefficients in closed form; independent pointwise shift oracles evaluate
// the same operators straight from the defining quotients.

#include <utility>
#include <vector>

#include "quadlat/errors.hpp"
#include "quadlat/lattice.hpp"
#include "quadlat/rational.hpp"

namespace quadlat {

// ---------------------------------------------------------------------------
// MuPoly
// ---------------------------------------------------------------------------

class MuPoly {
 public:
  MuPoly() = default;
  explicit MuPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static MuPoly constant(Rational c) {
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return MuPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k];
    return acc;
  }

  friend MuPoly operator+(const MuPoly& a, const MuPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return MuPoly(std::move(out));
  }

  friend MuPoly operator-(const MuPoly& a, const MuPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return MuPoly(std::move(out));
  }

  friend MuPoly operator*(const MuPoly& a, const MuPoly& b) {
    if (a.is_zero() || b.is_zero()) return MuPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return MuPoly(std::move(out));
  }

  friend MuPoly operator*(const Rational& s, const MuPoly& a) {
    std::vector<Rational> out = a.coeffs_;
    for (auto& c : out) c *= s;
    return MuPoly(std::move(out));
  }

  friend bool operator==(const MuPoly&, const MuPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// ThetaPoly
// ---------------------------------------------------------------------------

class ThetaPoly {
 public:
  explicit ThetaPoly(LatticeParams lp) : params_(std::move(lp)) {}

  ThetaPoly(LatticeParams lp, std::vector<Rational> coeffs)
      : params_(std::move(lp)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static ThetaPoly zero(const LatticeParams& lp) { return ThetaPoly(lp); }

  static ThetaPoly constant(const LatticeParams& lp, Rational c) {
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return ThetaPoly(lp, std::move(v));
  }

  /// theta_n itself (coefficient vector e_n).
  static ThetaPoly basis(const LatticeParams& lp, int n) {
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    v.back() = 1;
    return ThetaPoly(lp, std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const LatticeParams& params() const { return params_; }

  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  LatticeParams params_;
  std::vector<Rational> coeffs_;
};

namespace detail {
inline void require_same_lattice(const ThetaPoly& a, const ThetaPoly& b) {
  if (!(a.params() == b.params()))
    throw MixedLattice("operation on polynomials over different lattices");
}
}  // namespace detail

inline ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
  detail::require_same_lattice(a, b);
  std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return ThetaPoly(a.params(), std::move(out));
}

inline ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) {
  detail::require_same_lattice(a, b);
  std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return ThetaPoly(a.params(), std::move(out));
}

inline ThetaPoly operator*(const Rational& s, const ThetaPoly& a) {
  std::vector<Rational> out = a.coeffs();
  for (auto& c : out) c *= s;
  return ThetaPoly(a.params(), std::move(out));
}

// ---------------------------------------------------------------------------
// Basis evaluation
// ---------------------------------------------------------------------------

/// Value of theta_n at t, computed through BOTH closed forms — the Newton
/// product prod_{k<n} (mu(t) - f_k) and the Pochhammer product
/// (-4)^{-n} (2t + 1/2 + c2)_n (-2t + 1/2 - c2)_n — which must agree.
inline Rational theta_eval(const LatticeParams& lp, int n, const Rational& t) {
  const Rational mu = mu_at(lp, t);
  Rational newton = 1;
  for (int k = 0; k < n; ++k) newton *= mu - f_coeff(lp, k);

  const Rational a = 2 * t + Rational(1, 2) + lp.c2;
  const Rational b = -2 * t + Rational(1, 2) - lp.c2;
  Rational poch = 1;
  for (int k = 0; k < n; ++k) poch *= (a + k) * (b + k) / -4;

  if (poch != newton)
    throw Error("theta_eval: Pochhammer and Newton routes disagree");
  return newton;
}

/// Value of a ThetaPoly at t (cumulative Newton factors, O(degree)).
inline Rational eval(const ThetaPoly& p, const Rational& t) {
  Rational value = 0;
  Rational factor = 1;
  const Rational mu = mu_at(p.params(), t);
  for (int k = 0; k <= p.degree(); ++k) {
    value += p.coeff(k) * factor;
    factor *= mu - f_coeff(p.params(), k);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Coefficient-level operators
// ---------------------------------------------------------------------------

/// D theta_n = n theta_{n-1}, so c_k -> (k+1) c_{k+1}.
inline ThetaPoly apply_D(const ThetaPoly& p) {
  if (p.degree() < 1) return ThetaPoly::zero(p.params());
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
  for (int k = 0; k < p.degree(); ++k) out[k] = Rational(k + 1) * p.coeff(k + 1);
  return ThetaPoly(p.params(), std::move(out));
}

/// S theta_n = theta_n + g_n theta_{n-1}, so c_k -> c_k + g_{k+1} c_{k+1}.
inline ThetaPoly apply_S(const ThetaPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> out(p.coeffs());
  for (int k = 0; k < p.degree(); ++k) out[k] += g_coeff(k + 1) * p.coeff(k + 1);
  return ThetaPoly(p.params(), std::move(out));
}

/// mu * theta_n = theta_{n+1} + f_n theta_n.
inline ThetaPoly mul_mu(const ThetaPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
  for (int k = 0; k <= p.degree() + 1; ++k)
    out[k] = p.coeff(k - 1) + f_coeff(p.params(), k) * p.coeff(k);
  return ThetaPoly(p.params(), std::move(out));
}

/// q(mu) * p for a MuPoly q, by Horner in mul_mu.
inline ThetaPoly apply_mu_poly(const MuPoly& q, const ThetaPoly& p) {
  ThetaPoly acc = ThetaPoly::zero(p.params());
  for (int j = q.degree(); j >= 0; --j) acc = mul_mu(acc) + q.coeff(j) * p;
  return acc;
}

// ---------------------------------------------------------------------------
// Basis conversion
// ---------------------------------------------------------------------------

/// Theta coefficients -> monomial coefficients in mu (Horner over the
/// Newton factors mu - f_k).
inline MuPoly theta_to_mu(const ThetaPoly& p) {
  MuPoly acc;
  const MuPoly x({Rational(0), Rational(1)});
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * (x - MuPoly::constant(f_coeff(p.params(), k))) + MuPoly::constant(p.coeff(k));
  return acc;
}

/// Monomial coefficients in mu -> theta coefficients (Horner in mul_mu).
inline ThetaPoly mu_to_theta(const MuPoly& q, const LatticeParams& lp) {
  ThetaPoly acc = ThetaPoly::zero(lp);
  for (int j = q.degree(); j >= 0; --j)
    acc = mul_mu(acc) + ThetaPoly::constant(lp, q.coeff(j));
  return acc;
}

/// General product: route both factors through the mu basis.
inline ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
  detail::require_same_lattice(a, b);
  return mu_to_theta(theta_to_mu(a) * theta_to_mu(b), a.params());
}

// ---------------------------------------------------------------------------
// Pointwise shift oracles
// ---------------------------------------------------------------------------

enum class ShiftOp { D, S };

/// D or S evaluated straight from the half-shift quotients, with no use of
/// the coefficient-level operator maps.  D is singular exactly at t = -c2/2.
inline Rational pointwise_op_oracle(ShiftOp op, const ThetaPoly& p, const Rational& t) {
  const Rational half(1, 2);
  const Rational up = eval(p, t + half);
  const Rational dn = eval(p, t - half);
  if (op == ShiftOp::S) return (up + dn) / 2;
  const Rational gap = mu_half_gap(p.params(), t);
  if (gap == 0) throw SingularPoint("divided difference at t = -c2/2");
  return (up - dn) / gap;
}

}  // namespace quadlat
