#include "fermihat/matrix.hpp"

#include "fermihat/errors.hpp"

namespace fermihat {

MatrixC pauli(int i) {
  using namespace std::complex_literals;
  MatrixC s(2, 2);
  switch (i) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -1.0i, 1.0i, 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw ShapeError("Pauli index must be 1, 2 or 3");
  }
  return s;
}

MatrixC identity_matrix(int n) { return MatrixC::Identity(n, n); }

MatrixC elementary(int n, int j, int k) {
  if (j < 1 || j > n || k < 1 || k > n) throw ShapeError("elementary matrix index out of range");
  MatrixC e = MatrixC::Zero(n, n);
  e(j - 1, k - 1) = 1.0;
  return e;
}

MatrixC matrix_commutator(const MatrixC& a, const MatrixC& b) { return a * b - b * a; }

MatrixC matrix_anticommutator(const MatrixC& a, const MatrixC& b) { return a * b + b * a; }

int matrix_rank(const MatrixC& a) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixC> svd(a);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  const double cut = 1e-10 * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) ++r;
  }
  return r;
}

double operator_norm(const MatrixC& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixC> svd(a);
  return svd.singularValues()(0);
}

double max_entry_diff(const MatrixC& a, const MatrixC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " with " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_square(const MatrixC& a, const std::string& what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ShapeError(what + " must be a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace fermihat
