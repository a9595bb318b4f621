#pragma once

#include <vector>

#include "fermihat/matrix.hpp"
#include "fermihat/operator_poly.hpp"

namespace fermihat {

/// Non-empty list of n x n Kraus operators. Completeness (sum K^* K = I) is
/// reported, not enforced.
class KrausSet {
 public:
  explicit KrausSet(std::vector<MatrixC> operators);

  const std::vector<MatrixC>& operators() const noexcept { return operators_; }
  int dim() const noexcept { return static_cast<int>(operators_.front().rows()); }

  /// max |sum_i K_i^* K_i - I|
  double completeness_defect() const;
  /// Defect at most 1e-10.
  bool is_complete() const { return completeness_defect() <= 1e-10; }

  /// Kraus set of "this, then `next`": {K'_j K_i}.
  KrausSet then(const KrausSet& next) const;

 private:
  std::vector<MatrixC> operators_;
};

/// sum_i K_i A K_i^*
MatrixC apply_channel_matrix(const KrausSet& ks, const MatrixC& a);

/// sum_i hat(K_i) p adjoint(hat(K_i)); p.n_modes() must be at least ks.dim().
OperatorPoly apply_channel_poly(const KrausSet& ks, const OperatorPoly& p);

struct ChannelSectorReport {
  double max_err = 0.0;
  bool pass = false;
  MatrixC operator_level;  // sector-1 matrix of the embedded channel output
  MatrixC matrix_level;    // sum_i K_i A K_i^*
};

/// Compares the one-particle sector of apply_channel_poly(ks, hat A) with
/// apply_channel_matrix(ks, A) at tolerance 1e-10 (or tol.check_tolerance if larger).
ChannelSectorReport channel_sector_check(const KrausSet& ks, const MatrixC& a,
                                         const ToleranceConfig& tol = {});

}  // namespace fermihat
