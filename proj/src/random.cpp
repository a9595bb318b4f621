#include "fermihat/random.hpp"

#include <cmath>

namespace fermihat {

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

MatrixC Rng::matrix(int rows, int cols) {
  MatrixC m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      m(i, j) = Complex(re, im);
    }
  return m;
}

MatrixC Rng::integer_matrix(int n, int range) {
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int re = integer(-range, range);
      const int im = integer(-range, range);
      m(i, j) = Complex(re, im);
    }
  return m;
}

VectorC Rng::unit_vector(int n) {
  VectorC v = matrix(n, 1).col(0);
  while (v.norm() < 1e-3) v = matrix(n, 1).col(0);
  return v / v.norm();
}

MatrixC Rng::skew_hermitian(int n, double norm) {
  const MatrixC g = square(n);
  MatrixC c = 0.5 * (g - g.adjoint());
  const double current = operator_norm(c);
  if (current == 0.0) return c;
  return c * (norm / current);
}

MatrixC Rng::with_rank(int n, int rank) {
  if (rank == 0) return MatrixC::Zero(n, n);
  return matrix(n, rank) * matrix(rank, n);
}

}  // namespace fermihat
