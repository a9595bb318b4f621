#include "fermihat/exp_bch.hpp"

#include <array>
#include <cmath>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

// Higham (2005) degree-13 Pade coefficients and scaling threshold.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

// Lower-degree approximants, used when the 1-norm is below the matching theta.
struct LowPade {
  int degree;
  double theta;
  std::array<double, 10> b;
};
constexpr std::array<LowPade, 4> kLowPade = {{
    {3, 1.495585217958292e-2, {120.0, 60.0, 12.0, 1.0}},
    {5, 2.539398330063230e-1, {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0}},
    {7, 9.504178996162932e-1,
     {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0}},
    {9, 2.097847961257068,
     {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0, 2162160.0, 110880.0,
      3960.0, 90.0, 1.0}},
}};

MatrixC pade_low(const MatrixC& a, const LowPade& p) {
  const auto n = a.rows();
  const MatrixC a2 = a * a;
  MatrixC even = MatrixC::Zero(n, n);
  MatrixC odd = MatrixC::Zero(n, n);
  MatrixC pw = MatrixC::Identity(n, n);
  for (int k = 0; k <= p.degree; k += 2) {
    even += p.b[static_cast<std::size_t>(k)] * pw;
    odd += p.b[static_cast<std::size_t>(k + 1)] * pw;
    pw = pw * a2;
  }
  const MatrixC u = a * odd;
  return (even - u).partialPivLu().solve(even + u);
}

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 2 * kMaxBchDegree + 1> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

void extend_indices(int remaining, std::vector<std::pair<int, int>>& prefix,
                    std::vector<BchTermIndex>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int w = 1; w <= remaining; ++w) {
    for (int p = w; p >= 0; --p) {
      prefix.emplace_back(p, w - p);
      extend_indices(remaining - w, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

MatrixC matrix_exp(const MatrixC& a) {
  require_square(a, "exp argument");
  const auto n = a.rows();
  if (!a.allFinite()) throw OverflowError("matrix_exp input is not finite");
  if (n == 0) return a;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  for (const LowPade& p : kLowPade) {
    if (norm1 <= p.theta) return pade_low(a, p);
  }
  int squarings = 0;
  if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  const MatrixC s = a / std::ldexp(1.0, squarings);

  const MatrixC id = MatrixC::Identity(n, n);
  const MatrixC s2 = s * s;
  const MatrixC s4 = s2 * s2;
  const MatrixC s6 = s4 * s2;
  const auto& b = kPade13;
  const MatrixC u_inner = s6 * (b[13] * s6 + b[11] * s4 + b[9] * s2) + b[7] * s6 + b[5] * s4 +
                          b[3] * s2 + b[1] * id;
  const MatrixC u = s * u_inner;
  const MatrixC v =
      s6 * (b[12] * s6 + b[10] * s4 + b[8] * s2) + b[6] * s6 + b[4] * s4 + b[2] * s2 + b[0] * id;
  MatrixC r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  if (!r.allFinite()) throw OverflowError("matrix_exp overflowed");
  return r;
}

FockMatrix fock_exp(const FockMatrix& f) { return {f.layout(), matrix_exp(f.matrix())}; }

MatrixC matrix_log(const MatrixC& v) {
  require_square(v, "log argument");
  Eigen::ComplexEigenSolver<MatrixC> solver(v);
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigensolver did not converge");
  const MatrixC& vecs = solver.eigenvectors();
  const VectorC& vals = solver.eigenvalues();

  Eigen::JacobiSVD<MatrixC> svd(vecs);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0 || sv(0) / smin > 1e8) {
    throw IllConditionedError("eigenvector basis condition number exceeds 1e8");
  }

  VectorC logs(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const Complex lambda = vals(i);
    const double scale = std::max(1.0, std::abs(lambda));
    if (std::abs(lambda.imag()) <= 1e-12 * scale && lambda.real() <= 1e-12 * scale) {
      throw BranchCutError("eigenvalue on the closed negative real axis");
    }
    logs(i) = std::log(lambda);
  }
  return vecs * logs.asDiagonal() * vecs.inverse();
}

FockMatrix u_hat(const MatrixC& c) {
  require_square(c, "C");
  return fock_exp(poly_to_fock(hat(c)));
}

OperatorPoly hat_exp_rank1(const MatrixC& c, const ToleranceConfig& tol) {
  require_square(c, "C");
  if (matrix_rank(c) > 1) throw GuardError("hat_exp_rank1 requires rank(C) <= 1");
  const int n = static_cast<int>(c.rows());
  const MatrixC e = matrix_exp(c);
  OperatorPoly result = OperatorPoly::identity(n, tol) + hat(e - identity_matrix(n), n, tol);

  const FockMatrix lhs = poly_to_fock(result);
  const FockMatrix rhs = fock_exp(poly_to_fock(hat(c, n, tol)));
  const double err = max_entry_diff(lhs, rhs);
  if (err > tol.check_tolerance) {
    throw IdentityViolation("exp(hat C) != I + hat(exp C - I) for rank-1 C", err);
  }
  return result;
}

BchTermIndex::BchTermIndex(std::vector<std::pair<int, int>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw GuardError("BCH term index needs at least one block");
  for (const auto& [p, q] : blocks_) {
    if (p < 0 || q < 0 || p + q == 0) {
      throw GuardError("BCH blocks need p_i, q_i >= 0 and p_i + q_i > 0");
    }
  }
}

int BchTermIndex::p() const noexcept {
  int s = 0;
  for (const auto& b : blocks_) s += b.first;
  return s;
}

int BchTermIndex::q() const noexcept {
  int s = 0;
  for (const auto& b : blocks_) s += b.second;
  return s;
}

double BchTermIndex::coefficient() const {
  double denom = static_cast<double>(degree()) * static_cast<double>(k());
  for (const auto& [p, q] : blocks_) denom *= factorial(p) * factorial(q);
  return ((k() % 2 == 1) ? 1.0 : -1.0) / denom;
}

std::vector<BchTermIndex> bch_indices(int degree) {
  if (degree < 1 || degree > kMaxBchDegree) {
    throw GuardError("BCH degree must lie in 1.." + std::to_string(kMaxBchDegree));
  }
  std::vector<BchTermIndex> out;
  std::vector<std::pair<int, int>> prefix;
  extend_indices(degree, prefix, out);
  return out;
}

MatrixC repeated_commutator(const MatrixC& x, const MatrixC& y, const BchTermIndex& index) {
  require_square(x, "X");
  require_square(y, "Y");
  if (x.rows() != y.rows()) throw ShapeError("X and Y must have the same dimension");

  std::vector<const MatrixC*> word;
  for (const auto& [p, q] : index.blocks()) {
    for (int i = 0; i < p; ++i) word.push_back(&x);
    for (int i = 0; i < q; ++i) word.push_back(&y);
  }
  MatrixC acc = *word.back();
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) acc = matrix_commutator(**it, acc);
  return acc;
}

MatrixC bch_truncated(const MatrixC& x, const MatrixC& y, int max_degree) {
  require_square(x, "X");
  require_square(y, "Y");
  if (x.rows() != y.rows()) throw ShapeError("X and Y must have the same dimension");
  if (max_degree < 1 || max_degree > kMaxBchDegree) {
    throw GuardError("BCH degree must lie in 1.." + std::to_string(kMaxBchDegree));
  }
  if (operator_norm(x) + operator_norm(y) >= kBchNormGuard) {
    throw GuardError("BCH series requires ||X|| + ||Y|| < 0.5");
  }
  MatrixC z = MatrixC::Zero(x.rows(), x.cols());
  for (int d = 1; d <= max_degree; ++d) {
    for (const BchTermIndex& idx : bch_indices(d)) {
      const auto& last = idx.blocks().back();
      // A word ending in two equal generators nests to [G, G] = 0.
      if (d > 1 && (last.second >= 2 || (last.second == 0 && last.first >= 2))) continue;
      z += idx.coefficient() * repeated_commutator(x, y, idx);
    }
  }
  return z;
}

BchHatReport bch_hat_identity(const MatrixC& x, const MatrixC& y, int max_degree) {
  BchHatReport report;
  report.max_degree = max_degree;
  const MatrixC z = matrix_log(matrix_exp(x) * matrix_exp(y));

  const FockMatrix lhs = fock_exp(poly_to_fock(hat(z)));
  const FockMatrix rhs = fock_exp(poly_to_fock(hat(x))) * fock_exp(poly_to_fock(hat(y)));
  report.fock_error = max_entry_diff(lhs, rhs);

  const MatrixC series = bch_truncated(x, y, max_degree);
  report.series_error = operator_norm(series - z);
  report.series_bound = 10.0 * std::pow(operator_norm(x) + operator_norm(y), max_degree + 1);
  report.pass = report.fock_error <= 1e-9 && report.series_error <= report.series_bound;
  return report;
}

}  // namespace fermihat
