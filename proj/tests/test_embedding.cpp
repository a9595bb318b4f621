#include <gtest/gtest.h>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/random.hpp"
#include "oracle.hpp"

using namespace fermihat;

namespace {

OperatorPoly cd(int n, int j) { return OperatorPoly::creation(n, j); }
OperatorPoly c(int n, int j) { return OperatorPoly::annihilation(n, j); }

MatrixC mat2(Complex a, Complex b, Complex cc, Complex d) {
  MatrixC m(2, 2);
  m << a, b, cc, d;
  return m;
}

// Quartic part of a polynomial (degree-4 terms only).
OperatorPoly quartic_part(const OperatorPoly& p) {
  OperatorPoly out(p.n_modes());
  for (const auto& [mono, coeff] : p.terms())
    if (mono.degree() == 4) out.add_term(mono, coeff);
  return out;
}

}  // namespace

TEST(Hat, TermsAreBilinear) {
  MatrixC a(2, 2);
  a << 1, 2, 3, 4;
  const OperatorPoly p = hat(a);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.coefficient(FermiMonomial(2, mode_bit(1), mode_bit(2))), Complex(2));
  EXPECT_EQ(p.coefficient(FermiMonomial(2, mode_bit(2), mode_bit(1))), Complex(3));
}

TEST(Hat, MatchesOracle) {
  Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    const MatrixC a = rng.square(n);
    EXPECT_LT(oracle::max_diff(oracle::dense(hat(a)), oracle::hat(a, n)), 1e-15);
  }
}

TEST(Hat, LargerModeCount) {
  const MatrixC a = pauli(1);
  const OperatorPoly p = hat(a, 4);
  EXPECT_EQ(p.n_modes(), 4);
  EXPECT_LT(oracle::max_diff(oracle::dense(p), oracle::hat(a, 4)), 1e-15);
  EXPECT_THROW(hat(identity_matrix(3), 2), ShapeError);
  EXPECT_THROW(hat(MatrixC::Zero(2, 3)), ShapeError);
}

TEST(Hat, NumberOperator) {
  EXPECT_EQ(number_operator(2), cd(2, 1) * c(2, 1) + cd(2, 2) * c(2, 2));
}

TEST(GForm, AgreesWithDeterminantPolarisation) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const MatrixC x = rng.square(2);
    const MatrixC y = rng.square(2);
    const Complex expected = (x + y).determinant() - x.determinant() - y.determinant();
    EXPECT_LT(std::abs(g_form(x, y) - expected), 1e-14);
  }
  const MatrixC x = rng.square(2);
  EXPECT_LT(std::abs(g_form(x, x) - 2.0 * x.determinant()), 1e-14);
}

TEST(GForm, RejectsNon2x2) { EXPECT_THROW(g_form(identity_matrix(3), identity_matrix(3)), ShapeError); }

TEST(Product, PauliSquare) {
  const OperatorPoly expected = cd(2, 1) * c(2, 1) + cd(2, 2) * c(2, 2) -
                                Complex(2.0) * cd(2, 1) * c(2, 1) * cd(2, 2) * c(2, 2);
  for (int i = 1; i <= 3; ++i) {
    const OperatorPoly h = hat(pauli(i));
    EXPECT_EQ(h * h, expected) << "sigma" << i;
  }
}

TEST(Product, FormulaMatchesSymbolicAndOracle) {
  Rng rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 25; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      const OperatorPoly prod = hat(a) * hat(b);
      const OperatorPoly rhs = product_correction(a, b);
      EXPECT_LT(max_coeff_diff(prod, rhs), 1e-12);
      EXPECT_LT(oracle::max_diff(oracle::dense(rhs), oracle::hat(a, n) * oracle::hat(b, n)), 1e-12);
    }
  }
}

TEST(Product, TwoByTwoDeterminantForm) {
  Rng rng(2);
  const MatrixC a = rng.square(2);
  const OperatorPoly expected =
      hat(a * a) + Complex(2.0) * a.determinant() * (cd(2, 1) * c(2, 1) * cd(2, 2) * c(2, 2));
  EXPECT_LT(max_coeff_diff(hat(a) * hat(a), expected), 1e-14);
}

TEST(Product, ThreeByThreeSquare) {
  Rng rng(4);
  const MatrixC a = rng.square(3);
  EXPECT_LT(max_coeff_diff(hat(a) * hat(a), square_correction_3x3(a)), 1e-13);
  EXPECT_THROW(square_correction_3x3(rng.square(2)), ShapeError);
}

TEST(Product, ShapeMismatch) { EXPECT_THROW(product_correction(pauli(1), identity_matrix(3)), ShapeError); }

TEST(RankLaw, QuarticVanishesIffRankAtMostOne) {
  Rng rng(23);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 0; r <= std::min(n, 3); ++r) {
      const MatrixC a = rng.with_rank(n, r);
      ASSERT_EQ(matrix_rank(a), r);
      const OperatorPoly q = quartic_part(hat(a) * hat(a));
      const bool vanishes = q.max_abs_coefficient() <= 1e-10;
      EXPECT_EQ(vanishes, r <= 1) << "n=" << n << " rank=" << r;
    }
  }
}

TEST(Density, ProjectionsAreIdempotent) {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      const VectorC v = rng.unit_vector(n);
      const OperatorPoly rho = hat(v * v.adjoint());
      EXPECT_TRUE(is_idempotent(rho));
      EXPECT_TRUE(is_selfadjoint(rho));
    }
  }
  const MatrixC p2 = elementary(3, 1, 1) + elementary(3, 2, 2);
  EXPECT_FALSE(is_idempotent(hat(p2)));
  EXPECT_TRUE(is_selfadjoint(hat(p2)));
}

TEST(Density, NonNormalRankOne) {
  // hat(A)^2 = hat(A^2) for a non-normal rank-1 A as well
  const MatrixC a = elementary(2, 1, 2) + elementary(2, 1, 1);
  EXPECT_EQ(hat(a) * hat(a), hat(a * a));
  EXPECT_FALSE(is_selfadjoint(hat(a)));
}

TEST(Trace, EmbeddedTraceEqualsMatrixTrace) {
  Rng rng(9);
  for (int n = 1; n <= 4; ++n) {
    const MatrixC a = rng.square(n);
    EXPECT_LT(std::abs(embedded_trace(hat(a)) - a.trace()), 1e-12);
  }
  EXPECT_EQ(embedded_trace(OperatorPoly::identity(3)), Complex(3.0));
}

TEST(Commutator, HomomorphismAgainstOracle) {
  Rng rng(41);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      const OperatorPoly lhs = commutator(hat(a), hat(b));
      EXPECT_LT(max_coeff_diff(lhs, hat(matrix_commutator(a, b))), 1e-12);
      EXPECT_LT(oracle::max_diff(oracle::dense(lhs), oracle::hat(matrix_commutator(a, b), n)), 1e-12);
    }
  }
}

TEST(Commutator, IdentityHelperReturnsHatOfCommutator) {
  Rng rng(8);
  const MatrixC a = rng.square(3);
  const MatrixC b = rng.square(3);
  EXPECT_LT(max_coeff_diff(commutator_identity(a, b), hat(matrix_commutator(a, b))), 1e-13);
}

TEST(Commutator, ExplicitTwoByTwo) {
  const MatrixC a = mat2(1, 2, 3, 4);
  const MatrixC b = mat2(0, 1, -1, 2);
  // [A,B] = [[-5, 1], [-9, 5]]
  MatrixC expected(2, 2);
  expected << -5, 1, -9, 5;
  EXPECT_EQ(matrix_commutator(a, b), expected);
  EXPECT_EQ(commutator(hat(a), hat(b)), hat(expected));
}

TEST(Anticommutator, CorrectionMatchesOracle) {
  Rng rng(43);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      const OperatorPoly lhs = anticommutator(hat(a), hat(b));
      const OperatorPoly rhs = anticommutator_correction(a, b);
      EXPECT_LT(max_coeff_diff(lhs, rhs), 1e-12);
      const oracle::Mat ha = oracle::hat(a, n);
      const oracle::Mat hb = oracle::hat(b, n);
      EXPECT_LT(oracle::max_diff(oracle::dense(rhs), ha * hb + hb * ha), 1e-12);
    }
  }
}

TEST(Anticommutator, DistinctPauliPairsVanish) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) EXPECT_TRUE(anticommutator(hat(pauli(i)), hat(pauli(j))).is_zero());
}

TEST(Anticommutator, TwoByTwoTraceIdentity) {
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const MatrixC a = rng.square(2);
    const MatrixC b = rng.square(2);
    EXPECT_LT(max_entry_diff(acomm_2x2_trace_identity(a, b), matrix_anticommutator(a, b)), 1e-12);
  }
}

TEST(Pairing, CreatorForm) {
  const MatrixC b = mat2(2, 5, 1, 7);
  EXPECT_EQ(pair_create(b), Complex(4.0) * cd(2, 1) * cd(2, 2));
  EXPECT_EQ(pair_annihilate(b), Complex(4.0) * c(2, 1) * c(2, 2));
  EXPECT_TRUE(pair_create(mat2(1, 3, 3, 2)).is_zero());
}

TEST(Pairing, CommutatorClosedForm) {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const MatrixC b = rng.square(2);
    const MatrixC d = rng.square(2);
    const Complex s = (b(0, 1) - b(1, 0)) * (d(0, 1) - d(1, 0));
    const OperatorPoly expected = s * (OperatorPoly::identity(2) - number_operator(2));
    EXPECT_LT(max_coeff_diff(commutator(pair_create(b), pair_annihilate(d)), expected), 1e-14);
  }
}

TEST(Pairing, GeneralModeCountAgainstOracle) {
  Rng rng(59);
  const int n = 4;
  const MatrixC b = rng.square(n);
  oracle::Mat expected = oracle::Mat::Zero(16, 16);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      expected += (b(j - 1, k - 1) - b(k - 1, j - 1)) * oracle::creator(n, j) * oracle::creator(n, k);
  EXPECT_LT(oracle::max_diff(oracle::dense(pair_create(b)), expected), 1e-15);
}

TEST(Submatrix, SelectorsAreLexicographic) {
  const auto sels = submatrix_selectors(3);
  ASSERT_EQ(sels.size(), 9u);
  EXPECT_EQ(sels.front().j, 1);
  EXPECT_EQ(sels.front().l, 2);
  EXPECT_EQ(sels.back().j, 2);
  EXPECT_EQ(sels.back().m, 3);
  MatrixC a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  EXPECT_EQ(submatrix(a, {1, 3, 2, 3}), mat2(2, 3, 8, 9));
}
