#pragma once

#include <utility>
#include <vector>

#include "fermihat/fock.hpp"
#include "fermihat/matrix.hpp"
#include "fermihat/operator_poly.hpp"

namespace fermihat {

/// exp(A) by scaling and squaring with a degree-13 Pade approximant.
MatrixC matrix_exp(const MatrixC& a);
FockMatrix fock_exp(const FockMatrix& f);

/// Principal logarithm through an eigendecomposition. Requires an eigenvector
/// basis with condition number <= 1e8 and no eigenvalue on the closed
/// negative real axis.
MatrixC matrix_log(const MatrixC& v);

/// exp(hat(C)) on the Fock space; unitary when C is skew-hermitian.
FockMatrix u_hat(const MatrixC& c);

/**
 * Exponential of a rank <= 1 generator, written in the embedding.
 *
 * For rank(C) <= 1 every power satisfies hat(C)^k = hat(C^k), so
 * exp(hat C) = I + hat(exp(C) - I_n). The returned polynomial is that
 * right-hand side; it is checked against the Fock-level exponential and
 * agrees with hat(exp C) on the one-particle sector.
 */
OperatorPoly hat_exp_rank1(const MatrixC& c, const ToleranceConfig& tol = {});

/// Block structure (p_1, q_1), ..., (p_k, q_k) of one term in the
/// repeated-commutator expansion of log(e^X e^Y).
class BchTermIndex {
 public:
  /// Throws GuardError if empty or if some block has p_i + q_i == 0.
  explicit BchTermIndex(std::vector<std::pair<int, int>> blocks);

  const std::vector<std::pair<int, int>>& blocks() const noexcept { return blocks_; }
  int k() const noexcept { return static_cast<int>(blocks_.size()); }
  int p() const noexcept;
  int q() const noexcept;
  int degree() const noexcept { return p() + q(); }

  /// (1/(p+q)) * ((-1)^(k-1)/k) / (p_1! q_1! ... p_k! q_k!)
  double coefficient() const;

 private:
  std::vector<std::pair<int, int>> blocks_;
};

/// All term indices with p + q == degree, in deterministic order.
std::vector<BchTermIndex> bch_indices(int degree);

/// Right-nested commutator [X^{p1} Y^{q1} ... X^{pk} Y^{qk}]; the innermost
/// element is the last generator of the word.
MatrixC repeated_commutator(const MatrixC& x, const MatrixC& y, const BchTermIndex& index);

inline constexpr int kMaxBchDegree = 8;
inline constexpr double kBchNormGuard = 0.5;

/// Sum of all series terms with p + q <= max_degree. Requires
/// ||X|| + ||Y|| < 0.5 (spectral norm) and 1 <= max_degree <= 8.
MatrixC bch_truncated(const MatrixC& x, const MatrixC& y, int max_degree);

struct BchHatReport {
  /// max |exp(F(hat Z)) - exp(F(hat X)) exp(F(hat Y))| with Z = log(e^X e^Y).
  double fock_error = 0.0;
  /// ||bch_truncated(X, Y, d) - Z||
  double series_error = 0.0;
  /// 10 * (||X|| + ||Y||)^(d + 1)
  double series_bound = 0.0;
  int max_degree = 0;
  bool pass = false;
};

/// Checks that log(e^X e^Y) embeds to log(e^{hat X} e^{hat Y}) at Fock level
/// (tolerance 1e-9) and that the truncated series is within its bound.
BchHatReport bch_hat_identity(const MatrixC& x, const MatrixC& y, int max_degree = 6);

}  // namespace fermihat
