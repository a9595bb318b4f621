#pragma once

#include <vector>

#include "fermihat/fock.hpp"
#include "fermihat/matrix.hpp"

namespace fermihat {

/// m boson modes, each truncated to occupations 0..cutoff.
struct BosonModeSet {
  int modes = 1;
  int cutoff = 3;

  /// (cutoff + 1)^modes; throws GuardError past kMaxDenseDim.
  std::size_t dim() const;
};

/// Truncated annihilators b_1..b_m on the (cutoff+1)^m boson space, mode 1
/// as the most significant tensor factor. <k-1|b|k> = sqrt(k) for k <= cutoff,
/// so [b, b^dagger] = I - (cutoff+1)|cutoff><cutoff| per mode.
std::vector<MatrixC> boson_matrices(const BosonModeSet& bs);

/// sum_{ab} mb_ab b_a^dagger b_b on the truncated boson space.
MatrixC bose_form(const MatrixC& mb, const BosonModeSet& bs);

/// hat(mc) as a dense 2^n x 2^n matrix.
MatrixC fermi_form(const MatrixC& mc, int fermion_modes);

/// Kronecker product, left factor major.
MatrixC kron(const MatrixC& a, const MatrixC& b);

/**
 * Fermi-Bose coupled quadratic form with coefficient matrix M of shape
 * (n m) x (n m). Row index (j-1) m + (a-1) pairs fermion mode j with boson
 * mode a, matching (c^dagger vector) (x) (b^dagger vector).
 */
struct CoupledForm {
  MatrixC m;
  int fermion_modes = 1;
  BosonModeSet bosons;

  FockLayout layout() const { return {fermion_modes, bosons.modes, bosons.cutoff}; }
  void validate() const;
};

/// One Kronecker term M_c (x) M_b of a decomposition of M.
struct KroneckerTerm {
  MatrixC fermion;
  MatrixC boson;
};

/// M = sum_{jk} E_jk (x) M[(j,k) block].
std::vector<KroneckerTerm> canonical_decomposition(const MatrixC& m, int fermion_modes,
                                                   int boson_modes);

/// sum_j kron(fermion_j, boson_j)
MatrixC recompose(const std::vector<KroneckerTerm>& terms);

/// sum M_{(j,a),(k,b)} (c_j^dagger c_k) (x) (b_a^dagger b_b) on 2^n (cutoff+1)^m states.
FockMatrix coupled_form_matrix(const CoupledForm& cf);

/// sum_j fermi_form(M_{c,j}) (x) bose_form(M_{b,j}).
FockMatrix coupled_form_from_decomposition(const std::vector<KroneckerTerm>& terms,
                                           int fermion_modes, const BosonModeSet& bosons);

/// [M1^, M2^] - (coupled form of [M1, M2]); generically nonzero.
FockMatrix coupled_commutator_defect(const CoupledForm& a, const CoupledForm& b);

/// Filter on coupled basis states; -1 disables a constraint.
struct CoupledSubspace {
  int fermion_particles = -1;
  int boson_total = -1;
  int max_boson_occupation = -1;
};

/// Basis indices of the coupled space that satisfy `sub`, ascending.
std::vector<std::size_t> coupled_states(const FockLayout& layout, const CoupledSubspace& sub);

/// Restriction of f to the span of coupled_states(f.layout(), sub).
MatrixC restrict_block(const FockMatrix& f, const CoupledSubspace& sub);

}  // namespace fermihat
