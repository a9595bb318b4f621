#pragma once

#include <cstdint>
#include <random>

#include "fermihat/matrix.hpp"

namespace fermihat {

/// Deterministic sampler. Uses only the raw mt19937_64 stream, so draws are
/// identical across standard library implementations for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

  /// Entries with real and imaginary parts uniform in [-1, 1).
  MatrixC matrix(int rows, int cols);
  MatrixC square(int n) { return matrix(n, n); }
  /// Integer entries in [-range, range] (real and imaginary parts).
  MatrixC integer_matrix(int n, int range);
  VectorC unit_vector(int n);
  /// Skew-hermitian matrix with spectral norm exactly `norm`.
  MatrixC skew_hermitian(int n, double norm);
  /// Random matrix of the given rank (product of n x r and r x n factors).
  MatrixC with_rank(int n, int rank);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fermihat
