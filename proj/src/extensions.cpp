#include "fermihat/extensions.hpp"

#include <bit>
#include <cmath>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

void require_dim(const MatrixC& a, Eigen::Index n, const char* what) {
  if (a.rows() != n || a.cols() != n) {
    throw ShapeError(std::string(what) + " must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
}

// Occupation of boson mode a (1-based) in boson basis index s.
int boson_occupation(std::size_t s, int a, const BosonModeSet& bs) {
  std::size_t stride = 1;
  for (int i = bs.modes; i > a; --i) stride *= static_cast<std::size_t>(bs.cutoff + 1);
  return static_cast<int>((s / stride) % static_cast<std::size_t>(bs.cutoff + 1));
}

}  // namespace

std::size_t BosonModeSet::dim() const {
  if (modes < 1 || cutoff < 1) throw GuardError("boson modes and cutoff must be at least 1");
  std::size_t d = 1;
  for (int a = 0; a < modes; ++a) {
    d *= static_cast<std::size_t>(cutoff + 1);
    if (d > kMaxDenseDim) {
      throw GuardError("boson space dimension exceeds " + std::to_string(kMaxDenseDim));
    }
  }
  return d;
}

MatrixC kron(const MatrixC& a, const MatrixC& b) {
  MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<MatrixC> boson_matrices(const BosonModeSet& bs) {
  const auto total = static_cast<Eigen::Index>(bs.dim());
  const int local = bs.cutoff + 1;
  MatrixC lowering = MatrixC::Zero(local, local);
  for (int k = 1; k <= bs.cutoff; ++k) lowering(k - 1, k) = std::sqrt(static_cast<double>(k));

  std::vector<MatrixC> out;
  for (int a = 1; a <= bs.modes; ++a) {
    MatrixC op = MatrixC::Identity(1, 1);
    for (int i = 1; i <= bs.modes; ++i) {
      op = kron(op, i == a ? lowering : MatrixC::Identity(local, local));
    }
    require_dim(op, total, "boson operator");
    out.push_back(std::move(op));
  }
  return out;
}

MatrixC bose_form(const MatrixC& mb, const BosonModeSet& bs) {
  require_dim(mb, bs.modes, "boson coefficient matrix");
  const auto b = boson_matrices(bs);
  const auto d = static_cast<Eigen::Index>(bs.dim());
  MatrixC out = MatrixC::Zero(d, d);
  for (int a = 0; a < bs.modes; ++a)
    for (int c = 0; c < bs.modes; ++c)
      if (mb(a, c) != Complex{}) out += mb(a, c) * (b[a].adjoint() * b[c]);
  return out;
}

MatrixC fermi_form(const MatrixC& mc, int fermion_modes) {
  require_dim(mc, fermion_modes, "fermion coefficient matrix");
  return poly_to_fock(hat(mc, fermion_modes)).matrix();
}

void CoupledForm::validate() const {
  const auto side = static_cast<Eigen::Index>(fermion_modes) * bosons.modes;
  require_dim(m, side, "coupled coefficient matrix");
  if (layout().dim() > kMaxDenseDim) {
    throw GuardError("coupled Fock dimension exceeds " + std::to_string(kMaxDenseDim));
  }
}

std::vector<KroneckerTerm> canonical_decomposition(const MatrixC& m, int fermion_modes,
                                                   int boson_modes) {
  require_dim(m, static_cast<Eigen::Index>(fermion_modes) * boson_modes, "coupled matrix");
  std::vector<KroneckerTerm> out;
  for (int j = 1; j <= fermion_modes; ++j) {
    for (int k = 1; k <= fermion_modes; ++k) {
      out.push_back({elementary(fermion_modes, j, k),
                     m.block((j - 1) * boson_modes, (k - 1) * boson_modes, boson_modes,
                             boson_modes)});
    }
  }
  return out;
}

MatrixC recompose(const std::vector<KroneckerTerm>& terms) {
  if (terms.empty()) throw ShapeError("empty Kronecker decomposition");
  MatrixC out = kron(terms.front().fermion, terms.front().boson);
  for (std::size_t i = 1; i < terms.size(); ++i) out += kron(terms[i].fermion, terms[i].boson);
  return out;
}

FockMatrix coupled_form_matrix(const CoupledForm& cf) {
  cf.validate();
  const int n = cf.fermion_modes;
  const int m = cf.bosons.modes;
  const FockLayout layout = cf.layout();
  const auto b = boson_matrices(cf.bosons);

  MatrixC out = MatrixC::Zero(static_cast<Eigen::Index>(layout.dim()),
                              static_cast<Eigen::Index>(layout.dim()));
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const MatrixC fjk = fermi_form(elementary(n, j, k), n);
      for (int a = 1; a <= m; ++a) {
        for (int c = 1; c <= m; ++c) {
          const Complex coeff = cf.m((j - 1) * m + (a - 1), (k - 1) * m + (c - 1));
          if (coeff == Complex{}) continue;
          out += coeff * kron(fjk, b[a - 1].adjoint() * b[c - 1]);
        }
      }
    }
  }
  return {layout, std::move(out)};
}

FockMatrix coupled_form_from_decomposition(const std::vector<KroneckerTerm>& terms,
                                           int fermion_modes, const BosonModeSet& bosons) {
  const FockLayout layout{fermion_modes, bosons.modes, bosons.cutoff};
  FockMatrix out = FockMatrix::zero(layout);
  for (const KroneckerTerm& t : terms) {
    out = out + FockMatrix(layout, kron(fermi_form(t.fermion, fermion_modes),
                                        bose_form(t.boson, bosons)));
  }
  return out;
}

FockMatrix coupled_commutator_defect(const CoupledForm& a, const CoupledForm& b) {
  if (a.fermion_modes != b.fermion_modes || a.bosons.modes != b.bosons.modes ||
      a.bosons.cutoff != b.bosons.cutoff) {
    throw ShapeError("coupled forms have different mode structures");
  }
  const FockMatrix ha = coupled_form_matrix(a);
  const FockMatrix hb = coupled_form_matrix(b);
  const CoupledForm bracket{matrix_commutator(a.m, b.m), a.fermion_modes, a.bosons};
  return fock_commutator(ha, hb) - coupled_form_matrix(bracket);
}

std::vector<std::size_t> coupled_states(const FockLayout& layout, const CoupledSubspace& sub) {
  const BosonModeSet bs{layout.boson_modes, layout.boson_cutoff};
  const std::size_t bdim = layout.boson_dim();
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < layout.dim(); ++idx) {
    const std::size_t fermion_state = idx / bdim;
    const std::size_t boson_state = idx % bdim;
    if (sub.fermion_particles >= 0 && std::popcount(fermion_state) != sub.fermion_particles) {
      continue;
    }
    int total = 0;
    bool within = true;
    for (int a = 1; a <= layout.boson_modes; ++a) {
      const int occ = boson_occupation(boson_state, a, bs);
      total += occ;
      if (sub.max_boson_occupation >= 0 && occ > sub.max_boson_occupation) within = false;
    }
    if (!within) continue;
    if (sub.boson_total >= 0 && total != sub.boson_total) continue;
    out.push_back(idx);
  }
  return out;
}

MatrixC restrict_block(const FockMatrix& f, const CoupledSubspace& sub) {
  const auto states = coupled_states(f.layout(), sub);
  const auto d = static_cast<Eigen::Index>(states.size());
  MatrixC out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      out(r, c) = f.matrix()(static_cast<Eigen::Index>(states[static_cast<std::size_t>(r)]),
                             static_cast<Eigen::Index>(states[static_cast<std::size_t>(c)]));
  return out;
}

}  // namespace fermihat
