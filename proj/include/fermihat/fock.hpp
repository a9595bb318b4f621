#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fermihat/matrix.hpp"
#include "fermihat/operator_poly.hpp"

namespace fermihat {

/// Desk-scale limit for dense Fock representations.
inline constexpr int kMaxFockModes = 12;
inline constexpr std::size_t kMaxDenseDim = 4096;

/**
 * Mode structure of a Fock space: fermion modes, optionally tensored with
 * truncated boson modes (fermion factor major).
 *
 * Fermion basis state index s has bit (j-1) set when mode j is occupied and
 * stands for c_{j1}^dagger c_{j2}^dagger ... |0> with j1 < j2 < ...
 */
struct FockLayout {
  int fermion_modes = 1;
  int boson_modes = 0;
  int boson_cutoff = 0;

  std::size_t fermion_dim() const { return std::size_t{1} << fermion_modes; }
  std::size_t boson_dim() const;
  std::size_t dim() const { return fermion_dim() * boson_dim(); }

  friend bool operator==(const FockLayout&, const FockLayout&) = default;
};

/// Dense operator on a Fock space.
class FockMatrix {
 public:
  FockMatrix(FockLayout layout, MatrixC data);

  static FockMatrix identity(FockLayout layout);
  static FockMatrix zero(FockLayout layout);

  const FockLayout& layout() const noexcept { return layout_; }
  const MatrixC& matrix() const noexcept { return data_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.rows()); }

  FockMatrix adjoint() const { return {layout_, data_.adjoint()}; }

  friend FockMatrix operator+(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator-(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator*(Complex s, const FockMatrix& a) { return {a.layout_, s * a.data_}; }

 private:
  FockLayout layout_;
  MatrixC data_;
};

FockMatrix fock_commutator(const FockMatrix& a, const FockMatrix& b);
FockMatrix fock_anticommutator(const FockMatrix& a, const FockMatrix& b);

/// Largest entrywise difference; throws ShapeError on layout mismatch.
double max_entry_diff(const FockMatrix& a, const FockMatrix& b);

/// Annihilators c_1..c_n on 2^n states with the Jordan-Wigner sign string:
/// c_j picks up (-1)^(number of occupied modes below j).
std::vector<FockMatrix> mode_matrices(int n_modes);

/// Applies a monomial to a fermion basis state; nullopt when it annihilates it.
struct BasisImage {
  ModeMask state;
  double sign;
};
std::optional<BasisImage> apply_monomial(const FermiMonomial& m, ModeMask state);

/// Dense 2^n x 2^n representation of a polynomial.
FockMatrix poly_to_fock(const OperatorPoly& p);

/// k-particle basis: ascending index sets, sorted lexicographically.
class SectorBasis {
 public:
  SectorBasis(int n_modes, int particles);

  int n_modes() const noexcept { return n_modes_; }
  int particles() const noexcept { return particles_; }
  const std::vector<ModeMask>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  /// Position of `state` in the basis, nullopt when not in this sector.
  std::optional<std::size_t> index_of(ModeMask state) const;

 private:
  int n_modes_;
  int particles_;
  std::vector<ModeMask> states_;
};

/// Matrix of p on the k-particle sector, in SectorBasis order with its dual basis.
MatrixC sector_matrix(const OperatorPoly& p, int particles);

/// Same block read from a fermion-only Fock matrix.
MatrixC sector_block(const FockMatrix& f, int particles);

/// Applies hat(A) to c_1^dagger...c_n^dagger|0>, checks it is an eigenvector
/// with eigenvalue tr(A), and returns the eigenvalue.
Complex filled_state_eigenvalue(const MatrixC& a, const ToleranceConfig& tol = {});

/// All eigenvalues of a dense square matrix (unordered).
std::vector<Complex> eigenvalues(const MatrixC& m);
std::vector<Complex> eigenvalues(const FockMatrix& f);

/// <0|p|0>, the identity coefficient of the normal-ordered form.
Complex vacuum_expectation(const OperatorPoly& p);

}  // namespace fermihat
