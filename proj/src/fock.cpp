#include "fermihat/fock.hpp"

#include <algorithm>
#include <bit>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

double parity_below(ModeMask state, int j) {
  return (std::popcount(state & (mode_bit(j) - 1)) % 2 == 0) ? 1.0 : -1.0;
}

void validate_layout(const FockLayout& layout) {
  if (layout.fermion_modes < 1 || layout.fermion_modes > kMaxFockModes) {
    throw GuardError("Fock representation supports 1.." + std::to_string(kMaxFockModes) +
                     " fermion modes, got " + std::to_string(layout.fermion_modes));
  }
  if (layout.boson_modes < 0 || (layout.boson_modes > 0 && layout.boson_cutoff < 1)) {
    throw GuardError("boson modes need a cutoff of at least 1");
  }
  if (layout.dim() > kMaxDenseDim) {
    throw GuardError("Fock dimension " + std::to_string(layout.dim()) + " exceeds " +
                     std::to_string(kMaxDenseDim));
  }
}

void require_same_layout(const FockMatrix& a, const FockMatrix& b) {
  if (!(a.layout() == b.layout())) throw ShapeError("Fock matrices have different layouts");
}

void collect_subsets(int n, int k, int next, ModeMask current, std::vector<ModeMask>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int j = next; j <= n - k + 1; ++j) collect_subsets(n, k - 1, j + 1, current | mode_bit(j), out);
}

}  // namespace

std::size_t FockLayout::boson_dim() const {
  std::size_t d = 1;
  for (int a = 0; a < boson_modes; ++a) {
    d *= static_cast<std::size_t>(boson_cutoff + 1);
    if (d > kMaxDenseDim) return d;  // caller rejects; avoid overflow
  }
  return d;
}

FockMatrix::FockMatrix(FockLayout layout, MatrixC data) : layout_(layout), data_(std::move(data)) {
  validate_layout(layout_);
  const auto d = static_cast<Eigen::Index>(layout_.dim());
  if (data_.rows() != d || data_.cols() != d) {
    throw ShapeError("Fock matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

FockMatrix FockMatrix::identity(FockLayout layout) {
  validate_layout(layout);
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return {layout, MatrixC::Identity(d, d)};
}

FockMatrix FockMatrix::zero(FockLayout layout) {
  validate_layout(layout);
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return {layout, MatrixC::Zero(d, d)};
}

FockMatrix operator+(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b);
  return {a.layout_, a.data_ + b.data_};
}

FockMatrix operator-(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b);
  return {a.layout_, a.data_ - b.data_};
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b);
  return {a.layout_, a.data_ * b.data_};
}

FockMatrix fock_commutator(const FockMatrix& a, const FockMatrix& b) { return a * b - b * a; }

FockMatrix fock_anticommutator(const FockMatrix& a, const FockMatrix& b) { return a * b + b * a; }

double max_entry_diff(const FockMatrix& a, const FockMatrix& b) {
  require_same_layout(a, b);
  return max_entry_diff(a.matrix(), b.matrix());
}

std::vector<FockMatrix> mode_matrices(int n_modes) {
  const FockLayout layout{n_modes};
  validate_layout(layout);
  std::vector<FockMatrix> out;
  out.reserve(static_cast<std::size_t>(n_modes));
  const auto dim = static_cast<Eigen::Index>(layout.dim());
  for (int j = 1; j <= n_modes; ++j) {
    MatrixC c = MatrixC::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
      const auto state = static_cast<ModeMask>(s);
      if ((state & mode_bit(j)) != 0) {
        c(static_cast<Eigen::Index>(state ^ mode_bit(j)), s) = parity_below(state, j);
      }
    }
    out.emplace_back(layout, std::move(c));
  }
  return out;
}

std::optional<BasisImage> apply_monomial(const FermiMonomial& m, ModeMask state) {
  double sign = 1.0;
  // Rightmost operator acts first: annihilators in descending order, then creators.
  auto annihilators = m.annihilator_indices();
  for (auto it = annihilators.rbegin(); it != annihilators.rend(); ++it) {
    if ((state & mode_bit(*it)) == 0) return std::nullopt;
    sign *= parity_below(state, *it);
    state ^= mode_bit(*it);
  }
  auto creators = m.creator_indices();
  for (auto it = creators.rbegin(); it != creators.rend(); ++it) {
    if ((state & mode_bit(*it)) != 0) return std::nullopt;
    sign *= parity_below(state, *it);
    state |= mode_bit(*it);
  }
  return BasisImage{state, sign};
}

FockMatrix poly_to_fock(const OperatorPoly& p) {
  const FockLayout layout{p.n_modes()};
  validate_layout(layout);
  const auto dim = static_cast<Eigen::Index>(layout.dim());
  MatrixC out = MatrixC::Zero(dim, dim);
  for (const auto& [mono, c] : p.terms()) {
    for (Eigen::Index s = 0; s < dim; ++s) {
      if (auto img = apply_monomial(mono, static_cast<ModeMask>(s))) {
        out(static_cast<Eigen::Index>(img->state), s) += img->sign * c;
      }
    }
  }
  return {layout, std::move(out)};
}

SectorBasis::SectorBasis(int n_modes, int particles) : n_modes_(n_modes), particles_(particles) {
  if (n_modes < 1 || n_modes > kMaxModes) throw GuardError("invalid mode count");
  if (particles < 0 || particles > n_modes) {
    throw GuardError("particle count " + std::to_string(particles) + " outside 0.." +
                     std::to_string(n_modes));
  }
  collect_subsets(n_modes, particles, 1, 0, states_);
}

std::optional<std::size_t> SectorBasis::index_of(ModeMask state) const {
  // Lexicographic order of ascending index sets is not monotone in the mask.
  auto it = std::find(states_.begin(), states_.end(), state);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

MatrixC sector_matrix(const OperatorPoly& p, int particles) {
  const SectorBasis basis(p.n_modes(), particles);
  const auto d = static_cast<Eigen::Index>(basis.size());
  MatrixC out = MatrixC::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const ModeMask state = basis.states()[static_cast<std::size_t>(col)];
    for (const auto& [mono, c] : p.terms()) {
      auto img = apply_monomial(mono, state);
      if (!img) continue;
      if (auto row = basis.index_of(img->state)) {
        out(static_cast<Eigen::Index>(*row), col) += img->sign * c;
      }
    }
  }
  return out;
}

MatrixC sector_block(const FockMatrix& f, int particles) {
  if (f.layout().boson_modes != 0) throw ShapeError("sector_block expects a fermion-only matrix");
  const SectorBasis basis(f.layout().fermion_modes, particles);
  const auto d = static_cast<Eigen::Index>(basis.size());
  MatrixC out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      out(r, c) = f.matrix()(static_cast<Eigen::Index>(basis.states()[static_cast<std::size_t>(r)]),
                             static_cast<Eigen::Index>(basis.states()[static_cast<std::size_t>(c)]));
  return out;
}

Complex filled_state_eigenvalue(const MatrixC& a, const ToleranceConfig& tol) {
  require_square(a, "A");
  const int n = static_cast<int>(a.rows());
  const FockMatrix f = poly_to_fock(hat(a, n, tol));
  const auto filled = static_cast<Eigen::Index>(f.dim() - 1);
  const VectorC image = f.matrix().col(filled);
  const Complex lambda = image(filled);
  VectorC residual = image;
  residual(filled) = 0.0;
  const double leak = residual.size() > 0 ? residual.cwiseAbs().maxCoeff() : 0.0;
  if (leak > tol.check_tolerance) {
    throw IdentityViolation("filled state is not an eigenvector of hat(A)", leak);
  }
  const double err = std::abs(lambda - a.trace());
  if (err > tol.check_tolerance) {
    throw IdentityViolation("filled-state eigenvalue differs from tr(A)", err);
  }
  return lambda;
}

std::vector<Complex> eigenvalues(const MatrixC& m) {
  require_square(m, "eigenvalue input");
  if (static_cast<std::size_t>(m.rows()) > kMaxDenseDim) {
    throw GuardError("eigenvalue input exceeds dimension " + std::to_string(kMaxDenseDim));
  }
  Eigen::ComplexEigenSolver<MatrixC> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigenvalues(const FockMatrix& f) { return eigenvalues(f.matrix()); }

Complex vacuum_expectation(const OperatorPoly& p) {
  return p.coefficient(FermiMonomial::identity(p.n_modes()));
}

}  // namespace fermihat
