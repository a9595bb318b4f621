#include "fermihat/channels.hpp"

#include <algorithm>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/fock.hpp"

namespace fermihat {

KrausSet::KrausSet(std::vector<MatrixC> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw ShapeError("Kraus set must not be empty");
  for (const MatrixC& k : operators_) {
    require_square(k, "Kraus operator");
    if (k.rows() != operators_.front().rows()) {
      throw ShapeError("Kraus operators must share one dimension");
    }
  }
}

double KrausSet::completeness_defect() const {
  MatrixC sum = MatrixC::Zero(dim(), dim());
  for (const MatrixC& k : operators_) sum += k.adjoint() * k;
  return max_entry_diff(sum, identity_matrix(dim()));
}

KrausSet KrausSet::then(const KrausSet& next) const {
  if (next.dim() != dim()) throw ShapeError("cannot compose Kraus sets of different dimension");
  std::vector<MatrixC> composed;
  for (const MatrixC& outer : next.operators_)
    for (const MatrixC& inner : operators_) composed.push_back(outer * inner);
  return KrausSet(std::move(composed));
}

MatrixC apply_channel_matrix(const KrausSet& ks, const MatrixC& a) {
  require_square(a, "A");
  if (a.rows() != ks.dim()) throw ShapeError("A and the Kraus operators differ in dimension");
  MatrixC out = MatrixC::Zero(a.rows(), a.cols());
  for (const MatrixC& k : ks.operators()) out += k * a * k.adjoint();
  return out;
}

OperatorPoly apply_channel_poly(const KrausSet& ks, const OperatorPoly& p) {
  if (p.n_modes() < ks.dim()) {
    throw ModeMismatch("operator has " + std::to_string(p.n_modes()) +
                       " modes but the Kraus operators are " + std::to_string(ks.dim()) + "x" +
                       std::to_string(ks.dim()));
  }
  OperatorPoly out(p.n_modes(), p.tolerance());
  for (const MatrixC& k : ks.operators()) {
    const OperatorPoly kh = hat(k, p.n_modes(), p.tolerance());
    out += kh * p * adjoint(kh);
  }
  return out;
}

ChannelSectorReport channel_sector_check(const KrausSet& ks, const MatrixC& a,
                                         const ToleranceConfig& tol) {
  ChannelSectorReport report;
  report.matrix_level = apply_channel_matrix(ks, a);
  report.operator_level = sector_matrix(apply_channel_poly(ks, hat(a, 0, tol)), 1);
  report.max_err = max_entry_diff(report.operator_level, report.matrix_level);
  report.pass = report.max_err <= std::max(1e-10, tol.check_tolerance);
  return report;
}

}  // namespace fermihat
