#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>

#include "fermihat/monomial.hpp"
#include "fermihat/tolerance.hpp"

namespace fermihat {

using Complex = std::complex<double>;

/**
 * Finite complex-linear combination of normal-ordered Fermi monomials.
 *
 * The representation is canonical for a fixed mode count: every stored
 * monomial is normal ordered and no coefficient smaller than the configured
 * zero threshold is kept. The empty polynomial is the zero operator.
 */
class OperatorPoly {
 public:
  using TermMap = std::map<FermiMonomial, Complex>;

  explicit OperatorPoly(int n_modes, ToleranceConfig tol = {});

  static OperatorPoly identity(int n_modes, ToleranceConfig tol = {});
  static OperatorPoly from_monomial(const FermiMonomial& m, Complex coeff = 1.0,
                                    ToleranceConfig tol = {});
  /// c†_j
  static OperatorPoly creation(int n_modes, int j, ToleranceConfig tol = {});
  /// c_j
  static OperatorPoly annihilation(int n_modes, int j, ToleranceConfig tol = {});

  int n_modes() const noexcept { return n_modes_; }
  const ToleranceConfig& tolerance() const noexcept { return tol_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of `m`, zero when absent.
  Complex coefficient(const FermiMonomial& m) const;

  /// Accumulates `coeff` onto `m`, pruning the term if it falls below threshold.
  void add_term(const FermiMonomial& m, Complex coeff);

  /// True when every term has as many creators as annihilators.
  bool conserves_particle_number() const noexcept;

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_abs_coefficient() const noexcept;

  /// Canonical text, e.g. "(1+0i)*cd1.c2 + (-1+0i)*cd1.cd2.c1.c2"; zero is "0".
  std::string to_string() const;

  OperatorPoly& operator+=(const OperatorPoly& other);
  OperatorPoly& operator-=(const OperatorPoly& other);
  OperatorPoly& operator*=(Complex scalar);

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(OperatorPoly a, Complex s) { return a *= s; }
  friend OperatorPoly operator*(Complex s, OperatorPoly a) { return a *= s; }
  friend OperatorPoly operator-(OperatorPoly a) { return a *= -1.0; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);

  /// Exact structural equality of the canonical forms.
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.n_modes_ == b.n_modes_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_modes(const OperatorPoly& other) const;

  int n_modes_;
  ToleranceConfig tol_;
  TermMap terms_;
};

/// Normal-orders coeff * (word) using the anticommutation relations.
OperatorPoly normal_order(std::span<const FermiOp> word, int n_modes, Complex coeff = 1.0,
                          ToleranceConfig tol = {});

/// Normal-ordered expansion of the product a*b.
OperatorPoly monomial_mul(const FermiMonomial& a, const FermiMonomial& b,
                          ToleranceConfig tol = {});

OperatorPoly poly_add(const OperatorPoly& p, const OperatorPoly& q);
OperatorPoly poly_scale(const OperatorPoly& p, Complex s);
OperatorPoly poly_mul(const OperatorPoly& p, const OperatorPoly& q);

/// Hermitian adjoint, re-normal-ordered.
OperatorPoly adjoint(const OperatorPoly& p);

/// pq - qp
OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q);
/// pq + qp
OperatorPoly anticommutator(const OperatorPoly& p, const OperatorPoly& q);

/// Largest coefficient difference between the canonical forms.
double max_coeff_diff(const OperatorPoly& p, const OperatorPoly& q);

/// Equality up to `tol.check_tolerance`; in relative mode the bound is scaled
/// by the larger of the two largest coefficient magnitudes (at least 1).
bool poly_equal(const OperatorPoly& p, const OperatorPoly& q, const ToleranceConfig& tol = {});

/// "(a+bi)" with shortest round-trip digits; used by the canonical printer.
std::string format_complex(Complex z);

}  // namespace fermihat
