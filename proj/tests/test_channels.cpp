#include <gtest/gtest.h>

#include "fermihat/channels.hpp"
#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"
#include "fermihat/fock.hpp"
#include "fermihat/random.hpp"
#include "oracle.hpp"

using namespace fermihat;

namespace {

OperatorPoly cd(int n, int j) { return OperatorPoly::creation(n, j); }
OperatorPoly c(int n, int j) { return OperatorPoly::annihilation(n, j); }

KrausSet swap_pair() { return KrausSet({elementary(2, 1, 2), elementary(2, 2, 1)}); }

// Random complete Kraus set: blocks of an isometry from QR of a random tall matrix.
KrausSet random_complete(Rng& rng, int n, int r) {
  const MatrixC tall = rng.matrix(n * r, n);
  const Eigen::HouseholderQR<MatrixC> qr(tall);
  const MatrixC q = qr.householderQ() * MatrixC::Identity(n * r, n);
  std::vector<MatrixC> ks;
  for (int i = 0; i < r; ++i) ks.push_back(q.block(i * n, 0, n, n));
  return KrausSet(ks);
}

}  // namespace

TEST(Kraus, MatrixLevelSwapExample) {
  Rng rng(301);
  for (int t = 0; t < 20; ++t) {
    const MatrixC a = rng.square(2);
    MatrixC expected = MatrixC::Zero(2, 2);
    expected(0, 0) = a(1, 1);
    expected(1, 1) = a(0, 0);
    EXPECT_EQ(apply_channel_matrix(swap_pair(), a), expected);
  }
}

TEST(Kraus, OperatorLevelSwapExample) {
  Rng rng(303);
  for (int t = 0; t < 20; ++t) {
    const MatrixC a = rng.square(2);
    const Complex a11 = a(0, 0);
    const Complex a22 = a(1, 1);
    const OperatorPoly expected = a22 * (cd(2, 1) * c(2, 1)) + a11 * (cd(2, 2) * c(2, 2)) +
                                  (a11 + a22) * (cd(2, 1) * cd(2, 2) * c(2, 1) * c(2, 2));
    EXPECT_LT(max_coeff_diff(apply_channel_poly(swap_pair(), hat(a)), expected), 1e-15);
  }
}

TEST(Kraus, TracelessInputHasNoQuarticTerm) {
  MatrixC a(2, 2);
  a << 1, 2, 3, -1;
  EXPECT_EQ(apply_channel_poly(swap_pair(), hat(a)), hat(apply_channel_matrix(swap_pair(), a)));
}

TEST(Kraus, SectorOneEquality) {
  Rng rng(307);
  for (int n = 2; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const KrausSet ks = random_complete(rng, n, r);
      EXPECT_TRUE(ks.is_complete());
      const MatrixC a = rng.square(n);
      const ChannelSectorReport rep = channel_sector_check(ks, a);
      EXPECT_TRUE(rep.pass);
      EXPECT_LT(max_entry_diff(rep.operator_level, rep.matrix_level), 1e-10);
    }
  }
}

TEST(Kraus, OperatorLevelAgreesWithOracle) {
  Rng rng(309);
  const int n = 3;
  const KrausSet ks = random_complete(rng, n, 2);
  const MatrixC a = rng.square(n);
  oracle::Mat expected = oracle::Mat::Zero(8, 8);
  for (const MatrixC& k : ks.operators()) {
    const oracle::Mat kh = oracle::hat(k, n);
    expected += kh * oracle::hat(a, n) * kh.adjoint();
  }
  EXPECT_LT(oracle::max_diff(oracle::dense(apply_channel_poly(ks, hat(a))), expected), 1e-13);
}

TEST(Kraus, SingleUnitary) {
  Rng rng(311);
  const MatrixC u = matrix_exp(rng.skew_hermitian(3, 1.0));
  const MatrixC a = rng.square(3);
  const KrausSet ks({u});
  EXPECT_LT(max_entry_diff(sector_matrix(apply_channel_poly(ks, hat(a)), 1), u * a * u.adjoint()),
            1e-12);
}

TEST(Kraus, Composition) {
  Rng rng(313);
  const KrausSet first = random_complete(rng, 3, 2);
  const KrausSet second = random_complete(rng, 3, 2);
  const MatrixC a = rng.square(3);
  const MatrixC seq = apply_channel_matrix(second, apply_channel_matrix(first, a));
  EXPECT_LT(max_entry_diff(apply_channel_matrix(first.then(second), a), seq), 1e-13);
  EXPECT_EQ(first.then(second).operators().size(), 4u);
}

TEST(Kraus, Validation) {
  EXPECT_THROW(KrausSet({}), ShapeError);
  EXPECT_THROW(KrausSet({identity_matrix(2), identity_matrix(3)}), ShapeError);
  const KrausSet ks({identity_matrix(2), identity_matrix(2)});
  EXPECT_FALSE(ks.is_complete());
  EXPECT_NEAR(ks.completeness_defect(), 1.0, 1e-15);
  EXPECT_THROW(apply_channel_matrix(ks, identity_matrix(3)), ShapeError);
  EXPECT_THROW(apply_channel_poly(KrausSet({identity_matrix(3)}), OperatorPoly::identity(2)), ModeMismatch);
}
