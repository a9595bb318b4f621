#include <gtest/gtest.h>

#include <algorithm>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/fock.hpp"
#include "fermihat/random.hpp"
#include "oracle.hpp"

using namespace fermihat;

namespace {

OperatorPoly random_poly(Rng& rng, int n, int terms) {
  OperatorPoly p(n);
  for (int t = 0; t < terms; ++t) {
    ModeMask cr = 0;
    ModeMask an = 0;
    for (int j = 1; j <= n; ++j) {
      if (rng.uniform() < 0.5) cr |= mode_bit(j);
      if (rng.uniform() < 0.5) an |= mode_bit(j);
    }
    p.add_term(FermiMonomial(n, cr, an), {rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  return p;
}

bool less_complex(Complex a, Complex b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

TEST(ModeMatrices, MatchKroneckerConstruction) {
  for (int n = 1; n <= 4; ++n) {
    const auto ops = mode_matrices(n);
    ASSERT_EQ(ops.size(), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      EXPECT_EQ(ops[static_cast<std::size_t>(j - 1)].matrix(), oracle::annihilator(n, j)) << n << "," << j;
  }
}

TEST(PolyToFock, RandomPolynomialsMatchOracle) {
  Rng rng(101);
  for (int n = 1; n <= 5; ++n) {
    const OperatorPoly p = random_poly(rng, n, 6);
    EXPECT_LT(oracle::max_diff(poly_to_fock(p).matrix(), oracle::dense(p)), 1e-15);
  }
}

TEST(PolyToFock, IsAnAlgebraMap) {
  Rng rng(103);
  const OperatorPoly p = random_poly(rng, 3, 5);
  const OperatorPoly q = random_poly(rng, 3, 5);
  EXPECT_LT(max_entry_diff(poly_to_fock(p * q), poly_to_fock(p) * poly_to_fock(q)), 1e-14);
  EXPECT_LT(max_entry_diff(poly_to_fock(adjoint(p)), poly_to_fock(p).adjoint()), 1e-15);
}

TEST(PolyToFock, GuardsModeCount) {
  EXPECT_THROW(poly_to_fock(OperatorPoly::identity(kMaxFockModes + 1)), GuardError);
}

TEST(ApplyMonomial, Signs) {
  // c1^dagger on |mode 2 occupied> : no mode below 1, sign +1
  const auto img = apply_monomial(FermiMonomial(2, mode_bit(1), 0), mode_bit(2));
  ASSERT_TRUE(img.has_value());
  EXPECT_EQ(img->state, mode_bit(1) | mode_bit(2));
  EXPECT_EQ(img->sign, 1);
  // c2^dagger on |mode 1 occupied> : one occupied mode below, sign -1
  const auto img2 = apply_monomial(FermiMonomial(2, mode_bit(2), 0), mode_bit(1));
  ASSERT_TRUE(img2.has_value());
  EXPECT_EQ(img2->sign, -1);
  EXPECT_FALSE(apply_monomial(FermiMonomial(2, 0, mode_bit(1)), mode_bit(2)).has_value());
}

TEST(SectorBasis, LexicographicSubsets) {
  const SectorBasis b(4, 2);
  ASSERT_EQ(b.size(), 6u);
  const auto expected = oracle::sector_states(4, 2);
  for (std::size_t i = 0; i < b.size(); ++i)
    EXPECT_EQ(static_cast<Eigen::Index>(b.states()[i]), expected[i]);
  EXPECT_EQ(b.index_of(mode_bit(2) | mode_bit(3)), std::optional<std::size_t>(3));
  EXPECT_FALSE(b.index_of(mode_bit(1)).has_value());
  EXPECT_THROW(SectorBasis(3, 4), GuardError);
}

TEST(Sector, OneParticleIsTheMatrix) {
  Rng rng(107);
  for (int n = 1; n <= 4; ++n) {
    const MatrixC a = rng.square(n);
    EXPECT_EQ(sector_matrix(hat(a), 1), a);
  }
}

TEST(Sector, AllSectorsMatchOracle) {
  Rng rng(109);
  for (int n = 1; n <= 4; ++n) {
    const OperatorPoly p = hat(rng.square(n)) * hat(rng.square(n));
    const oracle::Mat full = oracle::dense(p);
    for (int k = 0; k <= n; ++k) {
      EXPECT_LT(oracle::max_diff(sector_matrix(p, k), oracle::sector(full, n, k)), 1e-14);
      EXPECT_LT(oracle::max_diff(sector_block(poly_to_fock(p), k), oracle::sector(full, n, k)), 1e-14);
    }
  }
}

TEST(Sector, TwoParticleDisplayForThreeModes) {
  MatrixC a(3, 3);
  a << 11, 12, 13, 21, 22, 23, 31, 32, 33;
  MatrixC expected(3, 3);
  expected << 11 + 22, 23, -13, 32, 11 + 33, 12, -31, 21, 22 + 33;
  EXPECT_EQ(sector_matrix(hat(a), 2), expected);
}

TEST(Sector, FilledStateAndVacuum) {
  Rng rng(113);
  for (int n = 1; n <= 4; ++n) {
    const MatrixC a = rng.square(n);
    EXPECT_LT(std::abs(filled_state_eigenvalue(a) - a.trace()), 1e-12);
    const MatrixC top = sector_matrix(hat(a), n);
    EXPECT_LT(std::abs(top(0, 0) - a.trace()), 1e-12);
    EXPECT_EQ(vacuum_expectation(hat(a)), Complex(0.0));
  }
  EXPECT_EQ(vacuum_expectation(OperatorPoly::identity(2) * Complex(3.0)), Complex(3.0));
}

TEST(Eigenvalues, FockSpectrumIsSectorUnion) {
  Rng rng(127);
  const int n = 3;
  MatrixC h = rng.square(n);
  h = h + h.adjoint().eval();
  const OperatorPoly p = hat(h);
  std::vector<Complex> sectors;
  for (int k = 0; k <= n; ++k) {
    const auto ev = eigenvalues(sector_matrix(p, k));
    sectors.insert(sectors.end(), ev.begin(), ev.end());
  }
  auto full = eigenvalues(poly_to_fock(p));
  std::sort(sectors.begin(), sectors.end(), less_complex);
  std::sort(full.begin(), full.end(), less_complex);
  ASSERT_EQ(full.size(), sectors.size());
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_LT(std::abs(full[i] - sectors[i]), 1e-12);
}

TEST(Eigenvalues, SingleParticleSumsForHermitian) {
  // Sector-k eigenvalues of hat(H) are sums of k distinct eigenvalues of H.
  MatrixC h = MatrixC::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 2.0;
  h(2, 2) = 5.0;
  auto ev = eigenvalues(sector_matrix(hat(h), 2));
  std::sort(ev.begin(), ev.end(), less_complex);
  EXPECT_NEAR(ev[0].real(), 3.0, 1e-12);
  EXPECT_NEAR(ev[1].real(), 6.0, 1e-12);
  EXPECT_NEAR(ev[2].real(), 7.0, 1e-12);
}

TEST(FockMatrix, LayoutChecks) {
  EXPECT_THROW(FockMatrix({2}, MatrixC::Zero(3, 3)), ShapeError);
  EXPECT_THROW(FockMatrix::identity({2}) + FockMatrix::identity({3}), ShapeError);
  const FockMatrix id = FockMatrix::identity({2});
  EXPECT_EQ(fock_commutator(id, id).matrix(), MatrixC::Zero(4, 4));
  EXPECT_EQ(fock_anticommutator(id, id).matrix(), 2.0 * MatrixC::Identity(4, 4));
}
