#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace fermihat {

/// Dense complex matrix, the carrier for A, B, C, V, K, rho, Pi and M.
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Pauli matrix sigma_i for i in {1, 2, 3}.
MatrixC pauli(int i);

MatrixC identity_matrix(int n);

/// Elementary matrix E_{jk} (1-based) of size n.
MatrixC elementary(int n, int j, int k);

/// AB - BA
MatrixC matrix_commutator(const MatrixC& a, const MatrixC& b);
/// AB + BA
MatrixC matrix_anticommutator(const MatrixC& a, const MatrixC& b);

/// Numerical rank: singular values above 1e-10 times the largest one.
int matrix_rank(const MatrixC& a);

/// Spectral norm (largest singular value).
double operator_norm(const MatrixC& a);

/// Largest entrywise magnitude of a - b; throws ShapeError on shape mismatch.
double max_entry_diff(const MatrixC& a, const MatrixC& b);

/// Throws ShapeError unless `a` is square; `what` names the operand.
void require_square(const MatrixC& a, const std::string& what);

}  // namespace fermihat
