#pragma once

#include "fermihat/matrix.hpp"
#include "fermihat/operator_poly.hpp"

namespace fermihat {

/// Rows (j, l) with j < l and columns (k, m) with k < m, all 1-based.
struct Submatrix2x2Selector {
  int j = 1;
  int l = 2;
  int k = 1;
  int m = 2;
};

/// [A]_{j,l;k,m} = [[a_jk, a_jm], [a_lk, a_lm]].
MatrixC submatrix(const MatrixC& a, const Submatrix2x2Selector& sel);

/// All selectors of an n x n matrix in lexicographic (j, l, k, m) order.
std::vector<Submatrix2x2Selector> submatrix_selectors(int n);

/// Quadratic form sum_{jk} a_jk c_j^dagger c_k on `n_modes` modes
/// (n_modes defaults to the matrix dimension and may exceed it).
OperatorPoly hat(const MatrixC& a, int n_modes = 0, ToleranceConfig tol = {});

/// hat(I_n), the number operator.
OperatorPoly number_operator(int n_modes, ToleranceConfig tol = {});

/**
 * Symmetric form g(X, Y) = tr(sigma2 X sigma2 Y^T) on 2x2 matrices.
 *
 * Also evaluates det(X+Y) - det(X) - det(Y) and throws IdentityViolation if
 * the two disagree beyond `tol.check_tolerance`.
 */
Complex g_form(const MatrixC& x, const MatrixC& y, const ToleranceConfig& tol = {});

/// Right-hand side of the product formula:
/// hat(AB) - sum_{j<l, k<m} g([A]_{jl;km}, [B]_{jl;km}) c_j^dagger c_l^dagger c_k c_m.
/// Equals hat(A) * hat(B); the identity is not re-checked here.
OperatorPoly product_correction(const MatrixC& a, const MatrixC& b, ToleranceConfig tol = {});

/// hat(A^2) - 2 sum_{i<k, j<l} det([A]_{ik;jl}) c_i^dagger c_k^dagger c_j c_l for 3x3 A.
OperatorPoly square_correction_3x3(const MatrixC& a, ToleranceConfig tol = {});

/// hat({A,B}) - 2 sum_{j<l, k<m} g([A]_{jl;km}, [B]_{jl;km}) c_j^dagger c_l^dagger c_k c_m.
OperatorPoly anticommutator_correction(const MatrixC& a, const MatrixC& b,
                                       ToleranceConfig tol = {});

/// Returns hat([A,B]) after asserting it equals [hat(A), hat(B)].
OperatorPoly commutator_identity(const MatrixC& a, const MatrixC& b, ToleranceConfig tol = {});

/// tr(A)B + tr(B)A - (tr A tr B - sum_j tr(sigma_j A) tr(sigma_j B)) I / 2,
/// asserted equal to AB + BA.
MatrixC acomm_2x2_trace_identity(const MatrixC& a, const MatrixC& b,
                                 const ToleranceConfig& tol = {});

/// sum_k <0| c_k p c_k^dagger |0>, by symbolic vacuum contraction.
Complex embedded_trace(const OperatorPoly& p);

/// sum_{j<k} (b_jk - b_kj) c_j^dagger c_k^dagger
OperatorPoly pair_create(const MatrixC& b, int n_modes = 0, ToleranceConfig tol = {});
/// sum_{j<k} (d_jk - d_kj) c_j c_k
OperatorPoly pair_annihilate(const MatrixC& d, int n_modes = 0, ToleranceConfig tol = {});

/// p * p == p within tolerance.
bool is_idempotent(const OperatorPoly& p, const ToleranceConfig& tol = {});
/// adjoint(p) == p within tolerance.
bool is_selfadjoint(const OperatorPoly& p, const ToleranceConfig& tol = {});

}  // namespace fermihat
