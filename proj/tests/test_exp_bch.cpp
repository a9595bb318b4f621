#include <gtest/gtest.h>

#include <numbers>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"
#include "fermihat/random.hpp"
#include "oracle.hpp"

using namespace fermihat;

namespace {

MatrixC comm(const MatrixC& a, const MatrixC& b) { return a * b - b * a; }

MatrixC scaled(Rng& rng, int n, double norm) {
  const MatrixC m = rng.square(n);
  return m * (norm / operator_norm(m));
}

}  // namespace

TEST(MatrixExp, AgreesWithTaylorSeries) {
  Rng rng(201);
  for (double norm : {1e-3, 0.1, 0.9, 2.0, 6.0, 30.0}) {
    const MatrixC a = scaled(rng, 4, norm);
    const MatrixC ref = oracle::taylor_exp(a / 64.0, 40);
    MatrixC r = ref;
    for (int i = 0; i < 6; ++i) r = r * r;
    EXPECT_LT(max_entry_diff(matrix_exp(a), r) / std::max(1.0, r.cwiseAbs().maxCoeff()), 1e-12)
        << "norm " << norm;
  }
}

TEST(MatrixExp, ZeroAndPauli) {
  EXPECT_EQ(matrix_exp(MatrixC::Zero(3, 3)), MatrixC::Identity(3, 3));
  const MatrixC arg = Complex(0, std::numbers::pi / 2) * pauli(1);
  EXPECT_LT(max_entry_diff(matrix_exp(arg), Complex(0, 1) * pauli(1)), 1e-14);
}

TEST(MatrixExp, SkewHermitianGivesUnitary) {
  Rng rng(203);
  const MatrixC c = rng.skew_hermitian(3, 1.3);
  const MatrixC u = matrix_exp(c);
  EXPECT_LT(max_entry_diff(u * u.adjoint(), MatrixC::Identity(3, 3)), 1e-12);
}

TEST(MatrixExp, RejectsNonFinite) {
  MatrixC a = MatrixC::Zero(2, 2);
  a(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(matrix_exp(a), OverflowError);
  EXPECT_THROW(matrix_exp(MatrixC::Zero(2, 3)), ShapeError);
}

TEST(MatrixLog, Examples) {
  EXPECT_LT(matrix_log(MatrixC::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-15);
  MatrixC d = MatrixC::Zero(2, 2);
  d(0, 0) = std::exp(1.0);
  d(1, 1) = std::exp(2.0);
  MatrixC expected = MatrixC::Zero(2, 2);
  expected(0, 0) = 1.0;
  expected(1, 1) = 2.0;
  EXPECT_LT(max_entry_diff(matrix_log(d), expected), 1e-14);
}

TEST(MatrixLog, RoundTrip) {
  Rng rng(207);
  for (int t = 0; t < 10; ++t) {
    const MatrixC c = rng.skew_hermitian(3, 0.9);
    EXPECT_LT(max_entry_diff(matrix_log(matrix_exp(c)), c), 1e-12);
  }
}

TEST(MatrixLog, Guards) {
  EXPECT_THROW(matrix_log(-MatrixC::Identity(2, 2)), BranchCutError);
  MatrixC jordan(2, 2);
  jordan << 1, 1, 0, 1;
  EXPECT_THROW(matrix_log(jordan), IllConditionedError);
}

TEST(UHat, HomomorphismAndInverse) {
  Rng rng(211);
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const MatrixC c1 = rng.skew_hermitian(n, 0.2);
      const MatrixC c2 = rng.skew_hermitian(n, 0.2);
      const MatrixC c3 = matrix_log(matrix_exp(c1) * matrix_exp(c2));
      EXPECT_LT(max_entry_diff(u_hat(c1) * u_hat(c2), u_hat(c3)), 1e-9);
      EXPECT_LT(max_entry_diff(u_hat(-c1), u_hat(c1).adjoint()), 1e-12);
    }
  }
  EXPECT_EQ(u_hat(MatrixC::Zero(2, 2)).matrix(), MatrixC::Identity(4, 4));
}

TEST(UHat, OracleExponential) {
  Rng rng(213);
  const MatrixC c = rng.skew_hermitian(3, 0.7);
  EXPECT_LT(oracle::max_diff(u_hat(c).matrix(), oracle::taylor_exp(oracle::hat(c, 3))), 1e-12);
}

TEST(Rank1, NilpotentExample) {
  const MatrixC e12 = elementary(2, 1, 2);
  const OperatorPoly expected = OperatorPoly::identity(2) + hat(e12);
  EXPECT_LT(max_coeff_diff(hat_exp_rank1(e12), expected), 1e-15);
  EXPECT_LT(max_coeff_diff(hat_exp_rank1(MatrixC::Zero(3, 3)), OperatorPoly::identity(3)), 1e-15);
}

TEST(Rank1, AgreesWithFockExponential) {
  Rng rng(217);
  for (int n = 2; n <= 4; ++n) {
    const MatrixC c = rng.with_rank(n, 1);
    const OperatorPoly p = hat_exp_rank1(c);
    EXPECT_LT(oracle::max_diff(oracle::dense(p), oracle::taylor_exp(oracle::hat(c, n))), 1e-10);
    // one-particle sector carries exp(C) itself
    EXPECT_LT(max_entry_diff(sector_matrix(p, 1), matrix_exp(c)), 1e-12);
  }
  EXPECT_THROW(hat_exp_rank1(rng.with_rank(3, 2)), GuardError);
}

TEST(BchIndex, SimpleTerms) {
  Rng rng(219);
  const MatrixC x = rng.square(2);
  const MatrixC y = rng.square(2);
  EXPECT_EQ(repeated_commutator(x, y, BchTermIndex({{1, 1}})), comm(x, y));
  EXPECT_EQ(repeated_commutator(x, y, BchTermIndex({{0, 1}})), y);
  EXPECT_LT(max_entry_diff(repeated_commutator(x, y, BchTermIndex({{2, 1}})), comm(x, comm(x, y))),
            1e-15);
  EXPECT_DOUBLE_EQ(BchTermIndex({{1, 1}}).coefficient(), 0.5);
  EXPECT_THROW(BchTermIndex({{0, 0}}), GuardError);
}

TEST(BchIndex, CompositionCounts) {
  // Each block (p_i, q_i) has p_i + q_i > 0; at degree d the count is 3^(d-1) * 2... computed directly.
  for (int d = 1; d <= 5; ++d) {
    std::size_t expected = 0;
    // number of sequences of nonzero (p,q) blocks summing to d: sum over compositions of (w+1) choices
    std::vector<std::size_t> count(static_cast<std::size_t>(d + 1), 0);
    count[0] = 1;
    for (int s = 1; s <= d; ++s)
      for (int w = 1; w <= s; ++w) count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - w)] * static_cast<std::size_t>(w + 1);
    expected = count[static_cast<std::size_t>(d)];
    EXPECT_EQ(bch_indices(d).size(), expected);
    for (const auto& idx : bch_indices(d)) EXPECT_EQ(idx.degree(), d);
  }
}

TEST(Bch, LowDegreeClosedForms) {
  Rng rng(223);
  const MatrixC x = scaled(rng, 3, 0.1);
  const MatrixC y = scaled(rng, 3, 0.1);
  EXPECT_LT(max_entry_diff(bch_truncated(x, y, 1), x + y), 1e-16);
  EXPECT_LT(max_entry_diff(bch_truncated(x, y, 2), x + y + 0.5 * comm(x, y)), 1e-16);
  const MatrixC d3 = (comm(x, comm(x, y)) - comm(y, comm(x, y))) / 12.0;
  EXPECT_LT(max_entry_diff(bch_truncated(x, y, 3) - bch_truncated(x, y, 2), d3), 1e-16);
  const MatrixC d4 = -comm(y, comm(x, comm(x, y))) / 24.0;
  EXPECT_LT(max_entry_diff(bch_truncated(x, y, 4) - bch_truncated(x, y, 3), d4), 1e-16);
}

TEST(Bch, ConvergesToLogarithm) {
  Rng rng(227);
  const MatrixC x = scaled(rng, 3, 0.05);
  const MatrixC y = scaled(rng, 3, 0.05);
  const MatrixC z = matrix_log(matrix_exp(x) * matrix_exp(y));
  double prev = 1e300;
  for (int d = 1; d <= 6; ++d) {
    const double err = operator_norm(bch_truncated(x, y, d) - z);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-10);
}

TEST(Bch, CommutingGeneratorsAndGuards) {
  const MatrixC x = 0.1 * pauli(3);
  const MatrixC y = 0.2 * pauli(3);
  for (int d = 1; d <= 5; ++d) EXPECT_LT(max_entry_diff(bch_truncated(x, y, d), x + y), 1e-17);
  EXPECT_THROW(bch_truncated(pauli(1), pauli(2), 3), GuardError);
  EXPECT_THROW(bch_truncated(x, y, 0), GuardError);
  EXPECT_THROW(bch_truncated(x, y, kMaxBchDegree + 1), GuardError);
}

TEST(Bch, HatIdentityOnFockSpace) {
  Rng rng(229);
  for (int n = 2; n <= 3; ++n) {
    const MatrixC x = scaled(rng, n, 0.1);
    const MatrixC y = scaled(rng, n, 0.1);
    const BchHatReport rep = bch_hat_identity(x, y, 6);
    EXPECT_TRUE(rep.pass);
    EXPECT_LT(rep.fock_error, 1e-9);
    EXPECT_LE(rep.series_error, rep.series_bound);
  }
}
