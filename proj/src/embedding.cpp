#include "fermihat/embedding.hpp"

#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

int resolve_modes(const MatrixC& a, int n_modes, const char* what) {
  require_square(a, what);
  const int dim = static_cast<int>(a.rows());
  if (n_modes == 0) return dim;
  if (n_modes < dim) {
    throw ShapeError(std::string(what) + " is " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " but only " + std::to_string(n_modes) +
                     " modes were requested");
  }
  return n_modes;
}

void require_same_shape(const MatrixC& a, const MatrixC& b) {
  require_square(a, "A");
  require_square(b, "B");
  if (a.rows() != b.rows()) {
    throw ShapeError("A and B must have the same dimension, got " + std::to_string(a.rows()) +
                     " and " + std::to_string(b.rows()));
  }
}

void require_2x2(const MatrixC& a, const char* what) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw ShapeError(std::string(what) + " must be 2x2, got " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
}

Complex det2(const MatrixC& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

// c_j^dagger c_l^dagger c_k c_m for j < l, k < m is already canonical.
FermiMonomial quartic(int n, const Submatrix2x2Selector& s) {
  return FermiMonomial(n, mode_bit(s.j) | mode_bit(s.l), mode_bit(s.k) | mode_bit(s.m));
}

// Shared shape of the product and anticommutator formulas.
OperatorPoly quadratic_minus_quartic(const MatrixC& quadratic, const MatrixC& a,
                                     const MatrixC& b, Complex scale, ToleranceConfig tol) {
  const int n = static_cast<int>(a.rows());
  OperatorPoly out = hat(quadratic, n, tol);
  for (const auto& sel : submatrix_selectors(n)) {
    const Complex g = g_form(submatrix(a, sel), submatrix(b, sel));
    out.add_term(quartic(n, sel), -scale * g);
  }
  return out;
}

OperatorPoly pair_form(const MatrixC& b, int n_modes, ToleranceConfig tol, bool creators) {
  const int n = resolve_modes(b, n_modes, creators ? "B" : "D");
  OperatorPoly out(n, tol);
  const int dim = static_cast<int>(b.rows());
  for (int j = 1; j <= dim; ++j) {
    for (int k = j + 1; k <= dim; ++k) {
      const ModeMask mask = mode_bit(j) | mode_bit(k);
      const FermiMonomial m = creators ? FermiMonomial(n, mask, 0) : FermiMonomial(n, 0, mask);
      out.add_term(m, b(j - 1, k - 1) - b(k - 1, j - 1));
    }
  }
  return out;
}

}  // namespace

MatrixC submatrix(const MatrixC& a, const Submatrix2x2Selector& sel) {
  const auto n = static_cast<int>(a.rows());
  const auto c = static_cast<int>(a.cols());
  if (!(1 <= sel.j && sel.j < sel.l && sel.l <= n && 1 <= sel.k && sel.k < sel.m &&
        sel.m <= c)) {
    throw ShapeError("invalid 2x2 submatrix selector");
  }
  MatrixC s(2, 2);
  s << a(sel.j - 1, sel.k - 1), a(sel.j - 1, sel.m - 1), a(sel.l - 1, sel.k - 1),
      a(sel.l - 1, sel.m - 1);
  return s;
}

std::vector<Submatrix2x2Selector> submatrix_selectors(int n) {
  std::vector<Submatrix2x2Selector> out;
  for (int j = 1; j <= n; ++j)
    for (int l = j + 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m) out.push_back({j, l, k, m});
  return out;
}

OperatorPoly hat(const MatrixC& a, int n_modes, ToleranceConfig tol) {
  const int n = resolve_modes(a, n_modes, "A");
  OperatorPoly out(n, tol);
  const int dim = static_cast<int>(a.rows());
  for (int j = 1; j <= dim; ++j) {
    for (int k = 1; k <= dim; ++k) {
      out.add_term(FermiMonomial(n, mode_bit(j), mode_bit(k)), a(j - 1, k - 1));
    }
  }
  return out;
}

OperatorPoly number_operator(int n_modes, ToleranceConfig tol) {
  return hat(identity_matrix(n_modes), n_modes, tol);
}

Complex g_form(const MatrixC& x, const MatrixC& y, const ToleranceConfig& tol) {
  require_2x2(x, "X");
  require_2x2(y, "Y");
  const MatrixC s2 = pauli(2);
  const Complex trace_form = (s2 * x * s2 * y.transpose()).trace();
  const Complex det_form = det2(x + y) - det2(x) - det2(y);
  const double err = std::abs(trace_form - det_form);
  const double scale = std::max({1.0, x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()});
  if (err > tol.check_tolerance * scale * scale) {
    throw IdentityViolation("g(X,Y): trace form and determinant form disagree", err);
  }
  return trace_form;
}

OperatorPoly product_correction(const MatrixC& a, const MatrixC& b, ToleranceConfig tol) {
  require_same_shape(a, b);
  return quadratic_minus_quartic(a * b, a, b, 1.0, tol);
}

OperatorPoly square_correction_3x3(const MatrixC& a, ToleranceConfig tol) {
  if (a.rows() != 3 || a.cols() != 3) throw ShapeError("square_correction_3x3 needs a 3x3 matrix");
  OperatorPoly out = hat(a * a, 3, tol);
  for (int i = 1; i <= 3; ++i)
    for (int k = i + 1; k <= 3; ++k)
      for (int j = 1; j <= 3; ++j)
        for (int l = j + 1; l <= 3; ++l) {
          const Submatrix2x2Selector sel{i, k, j, l};
          out.add_term(quartic(3, sel), -2.0 * det2(submatrix(a, sel)));
        }
  return out;
}

OperatorPoly anticommutator_correction(const MatrixC& a, const MatrixC& b,
                                       ToleranceConfig tol) {
  require_same_shape(a, b);
  return quadratic_minus_quartic(matrix_anticommutator(a, b), a, b, 2.0, tol);
}

OperatorPoly commutator_identity(const MatrixC& a, const MatrixC& b, ToleranceConfig tol) {
  require_same_shape(a, b);
  OperatorPoly rhs = hat(matrix_commutator(a, b), 0, tol);
  OperatorPoly lhs = commutator(hat(a, 0, tol), hat(b, 0, tol));
  if (!poly_equal(lhs, rhs, tol)) {
    throw IdentityViolation("[hat A, hat B] != hat([A,B])", max_coeff_diff(lhs, rhs));
  }
  return rhs;
}

MatrixC acomm_2x2_trace_identity(const MatrixC& a, const MatrixC& b, const ToleranceConfig& tol) {
  require_2x2(a, "A");
  require_2x2(b, "B");
  const Complex ta = a.trace();
  const Complex tb = b.trace();
  Complex pauli_sum = 0.0;
  for (int j = 1; j <= 3; ++j) pauli_sum += (pauli(j) * a).trace() * (pauli(j) * b).trace();
  const MatrixC formula = ta * b + tb * a - 0.5 * (ta * tb - pauli_sum) * identity_matrix(2);
  const double err = max_entry_diff(formula, matrix_anticommutator(a, b));
  if (err > tol.check_tolerance) {
    throw IdentityViolation("2x2 anticommutator trace identity failed", err);
  }
  return formula;
}

Complex embedded_trace(const OperatorPoly& p) {
  const int n = p.n_modes();
  const FermiMonomial vacuum = FermiMonomial::identity(n);
  ToleranceConfig exact = p.tolerance();
  exact.zero_threshold = 0.0;
  Complex total = 0.0;
  for (int k = 1; k <= n; ++k) {
    const OperatorPoly sandwiched =
        OperatorPoly::annihilation(n, k, exact) * p * OperatorPoly::creation(n, k, exact);
    total += sandwiched.coefficient(vacuum);
  }
  return total;
}

OperatorPoly pair_create(const MatrixC& b, int n_modes, ToleranceConfig tol) {
  return pair_form(b, n_modes, tol, true);
}

OperatorPoly pair_annihilate(const MatrixC& d, int n_modes, ToleranceConfig tol) {
  return pair_form(d, n_modes, tol, false);
}

bool is_idempotent(const OperatorPoly& p, const ToleranceConfig& tol) {
  return poly_equal(p * p, p, tol);
}

bool is_selfadjoint(const OperatorPoly& p, const ToleranceConfig& tol) {
  return poly_equal(adjoint(p), p, tol);
}

}  // namespace fermihat
