#include "fermihat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "fermihat/channels.hpp"
#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"
#include "fermihat/extensions.hpp"
#include "fermihat/fock.hpp"
#include "fermihat/random.hpp"
#include <nlohmann/json.hpp>

namespace fermihat {

namespace {

constexpr int kRandomPairs = 200;

class SuiteRun {
 public:
  SuiteRun(std::string suite, const VerifyOptions& opts, std::uint64_t salt)
      : suite_(std::move(suite)), opts_(opts), rng_(opts.seed * 1000003ULL + salt) {}

  Rng& rng() { return rng_; }
  const VerifyOptions& opts() const { return opts_; }

  /// Passes when err <= tol.
  void check(const std::string& name, double err, double tol) {
    results_.push_back({suite_, name, std::isfinite(err) && err <= tol, err});
  }
  /// Passes when the observed value exceeds the threshold.
  void expect_nonzero(const std::string& name, double value, double threshold) {
    results_.push_back({suite_, name + "_nonzero", value > threshold, value});
  }
  /// Runs `body`; an identity assertion inside counts as a failure with its error.
  void guarded(const std::string& name, double tol, const std::function<double()>& body) {
    try {
      check(name, body(), tol);
    } catch (const IdentityViolation& e) {
      results_.push_back({suite_, name, false, e.max_err()});
    } catch (const Error&) {
      results_.push_back({suite_, name, false, std::numeric_limits<double>::infinity()});
    }
  }

  std::vector<CaseResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  VerifyOptions opts_;
  Rng rng_;
  std::vector<CaseResult> results_;
};

OperatorPoly cd(int n, int j) { return OperatorPoly::creation(n, j); }
OperatorPoly c(int n, int j) { return OperatorPoly::annihilation(n, j); }
OperatorPoly id(int n) { return OperatorPoly::identity(n); }

// n_j n_k written as a polynomial.
OperatorPoly occupation_pair(int n, int j, int k) { return cd(n, j) * c(n, j) * cd(n, k) * c(n, k); }

double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const Complex& x : a) {
    auto best = std::min_element(b.begin(), b.end(), [&](const Complex& u, const Complex& v) {
      return std::abs(u - x) < std::abs(v - x);
    });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

// ---------------------------------------------------------------- car

std::vector<CaseResult> suite_car(const VerifyOptions& opts) {
  SuiteRun run("car", opts, 1);
  for (int n = 1; n <= 4; ++n) {
    double err = 0.0;
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const OperatorPoly delta = (j == k) ? id(n) : OperatorPoly(n);
        err = std::max(err, max_coeff_diff(anticommutator(c(n, j), cd(n, k)), delta));
        err = std::max(err, anticommutator(c(n, j), c(n, k)).max_abs_coefficient());
        err = std::max(err, anticommutator(cd(n, j), cd(n, k)).max_abs_coefficient());
      }
    }
    run.check("anticommutation_n" + std::to_string(n), err, 0.0);
  }
  for (int n = 1; n <= 4; ++n) {
    double err = 0.0;
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            const OperatorPoly lhs = commutator(cd(n, j) * c(n, k), cd(n, l) * c(n, m));
            OperatorPoly rhs(n);
            if (k == l) rhs += cd(n, j) * c(n, m);
            if (j == m) rhs -= cd(n, l) * c(n, k);
            err = std::max(err, max_coeff_diff(lhs, rhs));
          }
    run.check("bilinear_commutator_n" + std::to_string(n), err, 0.0);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto cs = mode_matrices(n);
    const FockMatrix one = FockMatrix::identity({n});
    const FockMatrix zero = FockMatrix::zero({n});
    double err = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        err = std::max(err, max_entry_diff(fock_anticommutator(cs[j], cs[k].adjoint()),
                                           j == k ? one : zero));
        err = std::max(err, max_entry_diff(fock_anticommutator(cs[j], cs[k]), zero));
      }
    run.check("fock_matrices_n" + std::to_string(n), err, 0.0);
  }
  return run.take();
}

// ---------------------------------------------------------------- product

std::vector<CaseResult> suite_product(const VerifyOptions& opts) {
  SuiteRun run("product", opts, 2);
  Rng& rng = run.rng();

  const OperatorPoly pauli_square = cd(2, 1) * c(2, 1) + cd(2, 2) * c(2, 2) -
                                    2.0 * occupation_pair(2, 1, 2);
  for (int i = 1; i <= 3; ++i) {
    const OperatorPoly h = hat(pauli(i));
    run.check("pauli_square_sigma" + std::to_string(i), max_coeff_diff(h * h, pauli_square), 0.0);
  }

  for (int n = 2; n <= 4; ++n) {
    double err = 0.0;
    for (int t = 0; t < kRandomPairs; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      err = std::max(err, max_coeff_diff(hat(a) * hat(b), product_correction(a, b)));
    }
    run.check("formula_n" + std::to_string(n), err, 1e-10);
  }

  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(3);
      const MatrixC b = rng.square(3);
      const FockMatrix lhs = poly_to_fock(hat(a)) * poly_to_fock(hat(b));
      err = std::max(err, max_entry_diff(lhs, poly_to_fock(product_correction(a, b))));
    }
    run.check("fock_oracle_n3", err, opts.tol);
  }

  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(2);
      const OperatorPoly expected = hat(a * a) + 2.0 * a.determinant() * occupation_pair(2, 1, 2);
      err = std::max(err, max_coeff_diff(hat(a) * hat(a), expected));
    }
    run.check("square_2x2_determinant", err, 1e-10);
  }

  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(3);
      err = std::max(err, max_coeff_diff(hat(a) * hat(a), square_correction_3x3(a)));
      err = std::max(err, max_coeff_diff(product_correction(a, a), square_correction_3x3(a)));
    }
    run.check("square_3x3", err, 1e-10);
  }

  {
    bool law_holds = true;
    for (int n = 2; n <= 4; ++n) {
      for (int r = 0; r <= std::min(n, 3); ++r) {
        const MatrixC a = rng.with_rank(n, r);
        const OperatorPoly quartic = hat(a) * hat(a) - hat(a * a);
        const bool vanishes = quartic.max_abs_coefficient() <= 1e-10;
        law_holds = law_holds && (vanishes == (matrix_rank(a) <= 1));
      }
    }
    run.check("rank_law", law_holds ? 0.0 : 1.0, 0.0);
  }

  {
    double err = 0.0;
    for (int t = 0; t < 50; ++t) {
      const int n = 2 + t % 3;
      const VectorC v = rng.unit_vector(n);
      const OperatorPoly rho = hat(v * v.adjoint());
      err = std::max(err, max_coeff_diff(rho * rho, rho));
      err = std::max(err, max_coeff_diff(adjoint(rho), rho));
    }
    run.check("density_idempotent_selfadjoint", err, 1e-10);
  }

  {
    MatrixC pi = MatrixC::Zero(3, 3);
    pi(0, 0) = 1.0;
    pi(1, 1) = 1.0;
    const OperatorPoly p = hat(pi);
    run.expect_nonzero("projection_rank2_idempotence_defect", max_coeff_diff(p * p, p), 1e-10);
  }

  {
    double err = 0.0;
    for (int n = 1; n <= 4; ++n) {
      for (int t = 0; t < 10; ++t) {
        const MatrixC a = rng.square(n);
        err = std::max(err, std::abs(embedded_trace(hat(a)) - a.trace()));
      }
    }
    run.check("trace_preservation", err, 1e-12);
  }

  {
    const OperatorPoly a = hat(elementary(2, 1, 2));
    const OperatorPoly n1 = cd(2, 1) * c(2, 1);
    const OperatorPoly n2 = cd(2, 2) * c(2, 2);
    double err = max_coeff_diff(a * adjoint(a), n1 * (id(2) - n2));
    err = std::max(err, max_coeff_diff(adjoint(a) * a, n2 * (id(2) - n1)));
    run.check("nonnormal_example", err, 0.0);
  }

  {
    const OperatorPoly u = hat(pauli(1));
    const OperatorPoly expected = number_operator(2) - 2.0 * occupation_pair(2, 1, 2);
    run.check("unitary_embedding_example", max_coeff_diff(u * adjoint(u), expected), 0.0);
    run.expect_nonzero("unitary_embedding_defect", max_coeff_diff(u * adjoint(u), id(2)), 0.5);
  }
  return run.take();
}

// ---------------------------------------------------------------- commutator

std::vector<CaseResult> suite_commutator(const VerifyOptions& opts) {
  SuiteRun run("commutator", opts, 3);
  Rng& rng = run.rng();

  {
    const MatrixC a = elementary(2, 1, 2);
    const MatrixC b = elementary(2, 2, 2);
    double err = max_entry_diff(matrix_commutator(a, b), a);
    err = std::max(err, max_coeff_diff(commutator(hat(a), hat(b)), hat(a)));
    run.check("lie_algebra_basis", err, 0.0);
  }
  {
    const OperatorPoly lhs = commutator(cd(2, 1) * c(2, 2), cd(2, 1) * c(2, 1) + cd(2, 2) * c(2, 2));
    run.check("bilinear_conserves_pair_number", lhs.max_abs_coefficient(), 0.0);
  }
  for (int n = 2; n <= 4; ++n) {
    double err = 0.0;
    for (int t = 0; t < kRandomPairs; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      err = std::max(err, max_coeff_diff(commutator(hat(a), hat(b)), hat(matrix_commutator(a, b))));
    }
    run.check("homomorphism_n" + std::to_string(n), err, 1e-12);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.integer_matrix(4, 3);
      const MatrixC b = rng.integer_matrix(4, 3);
      err = std::max(err, max_coeff_diff(commutator(hat(a), hat(b)), hat(matrix_commutator(a, b))));
    }
    run.check("homomorphism_integer_exact", err, 0.0);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(2);
      const MatrixC b = rng.square(2);
      auto e = [](const MatrixC& m, int j, int k) { return m(j - 1, k - 1); };
      const OperatorPoly n1 = cd(2, 1) * c(2, 1);
      const OperatorPoly n2 = cd(2, 2) * c(2, 2);
      const OperatorPoly expanded =
          (n1 - n2) * (e(a, 1, 2) * e(b, 2, 1) - e(a, 2, 1) * e(b, 1, 2)) +
          (e(a, 1, 1) * e(b, 1, 2) - e(a, 1, 2) * e(b, 1, 1) + e(a, 1, 2) * e(b, 2, 2) -
           e(a, 2, 2) * e(b, 1, 2)) *
              (cd(2, 1) * c(2, 2)) +
          (e(a, 2, 1) * e(b, 1, 1) - e(a, 2, 1) * e(b, 2, 2) + e(a, 2, 2) * e(b, 2, 1) -
           e(a, 1, 1) * e(b, 2, 1)) *
              (cd(2, 2) * c(2, 1));
      err = std::max(err, max_coeff_diff(commutator(hat(a), hat(b)), expanded));
    }
    run.check("expanded_2x2", err, 1e-12);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(4);
      const MatrixC b = rng.square(4);
      err = std::max(err, max_entry_diff(fock_commutator(poly_to_fock(hat(a)), poly_to_fock(hat(b))),
                                         poly_to_fock(hat(matrix_commutator(a, b)))));
    }
    run.check("fock_oracle_n4", err, 1e-10);
  }
  return run.take();
}

// ---------------------------------------------------------------- anticommutator

std::vector<CaseResult> suite_anticommutator(const VerifyOptions& opts) {
  SuiteRun run("anticommutator", opts, 4);
  Rng& rng = run.rng();

  for (int n = 2; n <= 4; ++n) {
    double err = 0.0;
    for (int t = 0; t < kRandomPairs; ++t) {
      const MatrixC a = rng.square(n);
      const MatrixC b = rng.square(n);
      err = std::max(err, max_coeff_diff(anticommutator(hat(a), hat(b)),
                                         anticommutator_correction(a, b)));
    }
    run.check("correction_n" + std::to_string(n), err, 1e-10);
  }
  {
    double err = 0.0;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
      err = std::max(err, matrix_anticommutator(pauli(i), pauli(j)).cwiseAbs().maxCoeff());
      err = std::max(err, anticommutator(hat(pauli(i)), hat(pauli(j))).max_abs_coefficient());
    }
    run.check("pauli_pairs_vanish", err, 0.0);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(2);
      const MatrixC b = rng.square(2);
      const Complex g = a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) -
                        a(1, 0) * b(0, 1);
      const OperatorPoly expected =
          hat(matrix_anticommutator(a, b)) + 2.0 * g * occupation_pair(2, 1, 2);
      err = std::max(err, max_coeff_diff(anticommutator(hat(a), hat(b)), expected));
    }
    run.check("example_n2", err, 1e-10);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(3);
      const MatrixC i3 = identity_matrix(3);
      err = std::max(err, max_entry_diff(fock_anticommutator(poly_to_fock(hat(a)), poly_to_fock(hat(i3))),
                                         poly_to_fock(anticommutator_correction(a, i3))));
    }
    run.check("with_identity_fock_oracle_n3", err, 1e-10);
  }
  run.guarded("trace_identity_2x2", 1e-12, [&] {
    double err = 0.0;
    ToleranceConfig tight;
    tight.check_tolerance = 1e-12;
    for (int t = 0; t < 50; ++t) {
      const MatrixC a = rng.square(2);
      const MatrixC b = rng.square(2);
      err = std::max(err, max_entry_diff(acomm_2x2_trace_identity(a, b, tight),
                                         matrix_anticommutator(a, b)));
    }
    return err;
  });
  return run.take();
}

// ---------------------------------------------------------------- sectors

std::vector<CaseResult> suite_sectors(const VerifyOptions& opts) {
  SuiteRun run("sectors", opts, 5);
  Rng& rng = run.rng();

  for (int n = 1; n <= 4; ++n) {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(n);
      err = std::max(err, max_entry_diff(sector_matrix(hat(a), 1), a));
    }
    run.check("one_particle_n" + std::to_string(n), err, 0.0);
  }
  {
    double err = 0.0;
    double trace_err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(3);
      auto e = [&](int j, int k) { return a(j - 1, k - 1); };
      MatrixC expected(3, 3);
      expected << e(1, 1) + e(2, 2), e(2, 3), -e(1, 3), e(3, 2), e(1, 1) + e(3, 3), e(1, 2),
          -e(3, 1), e(2, 1), e(2, 2) + e(3, 3);
      const MatrixC s2 = sector_matrix(hat(a), 2);
      err = std::max(err, max_entry_diff(s2, expected));
      trace_err = std::max(trace_err, std::abs(s2.trace() - 2.0 * a.trace()));
    }
    run.check("two_particle_n3_display", err, 1e-12);
    run.check("two_particle_n3_trace", trace_err, 1e-12);
  }
  run.guarded("filled_state_eigenvalue", 1e-10, [&] {
    double err = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const MatrixC a = rng.square(n);
      err = std::max(err, std::abs(filled_state_eigenvalue(a) - a.trace()));
    }
    return err;
  });
  {
    double err = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const MatrixC a = rng.square(n);
      err = std::max(err, std::abs(vacuum_expectation(hat(a))));
      err = std::max(err, std::abs(sector_matrix(hat(a), 0)(0, 0)));
    }
    run.check("vacuum_expectation", err, 0.0);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 5; ++t) {
      const MatrixC a = rng.square(3);
      const OperatorPoly h = hat(a);
      std::vector<Complex> sectors;
      for (int k = 0; k <= 3; ++k) {
        const auto ev = eigenvalues(sector_matrix(h, k));
        sectors.insert(sectors.end(), ev.begin(), ev.end());
      }
      err = std::max(err, spectrum_distance(eigenvalues(poly_to_fock(h)), sectors));
    }
    run.check("spectrum_union_n3", err, 1e-8);
  }
  {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC a = rng.square(3);
      const MatrixC b = rng.square(3);
      err = std::max(err, max_entry_diff(sector_matrix(hat(a) * hat(b), 1), a * b));
    }
    run.check("one_particle_product", err, 1e-12);
  }
  return run.take();
}

// ---------------------------------------------------------------- exp

std::vector<CaseResult> suite_exp(const VerifyOptions& opts) {
  SuiteRun run("exp", opts, 6);
  Rng& rng = run.rng();

  {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC v = matrix_exp(rng.skew_hermitian(3, rng.uniform(0.1, 3.0)));
      err = std::max(err, max_entry_diff(v * v.adjoint(), identity_matrix(3)));
    }
    run.check("matrix_exp_unitary", err, 1e-12);
  }
  for (int n = 2; n <= 3; ++n) {
    double hom = 0.0;
    double inv = 0.0;
    for (int t = 0; t < 50; ++t) {
      const MatrixC c1 = rng.skew_hermitian(n, rng.uniform(0.01, 0.2));
      const MatrixC c2 = rng.skew_hermitian(n, rng.uniform(0.01, 0.2));
      const MatrixC c3 = matrix_log(matrix_exp(c1) * matrix_exp(c2));
      hom = std::max(hom, max_entry_diff(u_hat(c1) * u_hat(c2), u_hat(c3)));
      inv = std::max(inv, max_entry_diff(u_hat(-c1), u_hat(c1).adjoint()));
    }
    run.check("group_homomorphism_n" + std::to_string(n), hom, 1e-9);
    run.check("inverse_is_adjoint_n" + std::to_string(n), inv, 1e-9);
  }
  run.check("identity_maps_to_identity",
            max_entry_diff(u_hat(MatrixC::Zero(3, 3)), FockMatrix::identity({3})), 0.0);
  run.guarded("rank1_exponential", 1e-9, [&] {
    ToleranceConfig tol;
    tol.check_tolerance = 1e-9;
    double err = 0.0;
    std::vector<MatrixC> samples = {elementary(2, 1, 2), MatrixC::Zero(2, 2)};
    const VectorC v = rng.unit_vector(2);
    samples.push_back(v * v.adjoint());
    for (int n = 2; n <= 3; ++n) samples.push_back(rng.with_rank(n, 1));
    for (const MatrixC& cm : samples) {
      const OperatorPoly lhs = hat_exp_rank1(cm, tol);
      err = std::max(err, max_entry_diff(poly_to_fock(lhs), u_hat(cm)));
      // On the one-particle sector hat(exp C) itself is the exponential.
      err = std::max(err, max_entry_diff(sector_matrix(hat(matrix_exp(cm)), 1),
                                         sector_block(u_hat(cm), 1)));
    }
    return err;
  });
  {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      const MatrixC cm = rng.skew_hermitian(3, rng.uniform(0.1, 0.9));
      err = std::max(err, max_entry_diff(matrix_exp(matrix_log(matrix_exp(cm))), matrix_exp(cm)));
      err = std::max(err, max_entry_diff(matrix_log(matrix_exp(cm)), cm));
    }
    run.check("exp_log_round_trip", err, 1e-9);
  }
  return run.take();
}

// ---------------------------------------------------------------- bch

std::vector<CaseResult> suite_bch(const VerifyOptions& opts) {
  SuiteRun run("bch", opts, 7);
  Rng& rng = run.rng();

  {
    const MatrixC x = 0.1 * rng.square(3);
    const MatrixC y = 0.1 * rng.square(3);
    const MatrixC xs = x * (0.1 / operator_norm(x));
    const MatrixC ys = y * (0.1 / operator_norm(y));
    run.check("degree1", max_entry_diff(bch_truncated(xs, ys, 1), xs + ys), 1e-15);
    run.check("degree2_structure",
              max_entry_diff(bch_truncated(xs, ys, 2), xs + ys + 0.5 * matrix_commutator(xs, ys)),
              1e-15);
  }
  {
    const MatrixC x = rng.skew_hermitian(3, 0.05);
    const MatrixC y = rng.skew_hermitian(3, 0.05);
    const MatrixC z = matrix_log(matrix_exp(x) * matrix_exp(y));
    double previous = std::numeric_limits<double>::infinity();
    bool monotone = true;
    bool bounded = true;
    double last = 0.0;
    for (int d = 1; d <= 6; ++d) {
      last = operator_norm(bch_truncated(x, y, d) - z);
      monotone = monotone && last < previous;
      bounded = bounded && last <= 10.0 * std::pow(0.1, d + 1);
      previous = last;
    }
    run.check("convergence_monotone", monotone ? last : std::numeric_limits<double>::infinity(),
              1e-6);
    run.check("convergence_bound", bounded ? last : std::numeric_limits<double>::infinity(), 1e-6);
  }
  {
    const MatrixC x = rng.square(2);
    const MatrixC xs = x * (0.1 / operator_norm(x));
    run.check("equal_generators", max_entry_diff(matrix_log(matrix_exp(xs) * matrix_exp(xs)), 2.0 * xs),
              1e-12);
  }
  for (int n = 2; n <= 3; ++n) {
    double fock = 0.0;
    bool series_ok = true;
    for (int t = 0; t < 5; ++t) {
      const BchHatReport r =
          bch_hat_identity(rng.skew_hermitian(n, 0.1), rng.skew_hermitian(n, 0.1), 6);
      fock = std::max(fock, r.fock_error);
      series_ok = series_ok && r.series_error <= r.series_bound;
    }
    run.check("hat_identity_n" + std::to_string(n),
              series_ok ? fock : std::numeric_limits<double>::infinity(), 1e-9);
  }
  return run.take();
}

// ---------------------------------------------------------------- kraus

std::vector<CaseResult> suite_kraus(const VerifyOptions& opts) {
  SuiteRun run("kraus", opts, 8);
  Rng& rng = run.rng();
  const KrausSet swap_set({elementary(2, 1, 2), elementary(2, 2, 1)});

  {
    double matrix_err = 0.0;
    double poly_err = 0.0;
    double trace_err = 0.0;
    for (int t = 0; t < 20; ++t) {
      const MatrixC a = rng.square(2);
      MatrixC expected = MatrixC::Zero(2, 2);
      expected(0, 0) = a(1, 1);
      expected(1, 1) = a(0, 0);
      const MatrixC out = apply_channel_matrix(swap_set, a);
      matrix_err = std::max(matrix_err, max_entry_diff(out, expected));
      trace_err = std::max(trace_err, std::abs(out.trace() - a.trace()));

      const OperatorPoly expected_poly = a(1, 1) * (cd(2, 1) * c(2, 1)) +
                                         a(0, 0) * (cd(2, 2) * c(2, 2)) +
                                         (a(0, 0) + a(1, 1)) * (cd(2, 1) * cd(2, 2) * c(2, 1) * c(2, 2));
      poly_err = std::max(poly_err, max_coeff_diff(apply_channel_poly(swap_set, hat(a)), expected_poly));
    }
    run.check("swap_matrix_level", matrix_err, 0.0);
    run.check("swap_trace_preserved", trace_err, 1e-15);
    run.check("swap_operator_level", poly_err, 0.0);
  }
  {
    MatrixC a = rng.square(2);
    a(1, 1) = -a(0, 0);
    const OperatorPoly out = apply_channel_poly(swap_set, hat(a));
    run.check("traceless_embedding_preserved",
              max_coeff_diff(out, hat(apply_channel_matrix(swap_set, a))), 1e-15);
  }
  for (int n = 2; n <= 3; ++n) {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
      std::vector<MatrixC> ks;
      for (int i = 0; i < 3; ++i) ks.push_back(rng.square(n));
      err = std::max(err, channel_sector_check(KrausSet(ks), rng.square(n)).max_err);
    }
    run.check("sector_one_n" + std::to_string(n), err, 1e-10);
  }
  {
    const MatrixC u = matrix_exp(rng.skew_hermitian(3, 1.0));
    const MatrixC a = rng.square(3);
    const auto r = channel_sector_check(KrausSet({u}), a);
    run.check("single_unitary", std::max(r.max_err, max_entry_diff(r.operator_level, u * a * u.adjoint())),
              1e-10);
  }
  {
    const KrausSet first({rng.square(2), rng.square(2)});
    const KrausSet second({rng.square(2), rng.square(2), rng.square(2)});
    const MatrixC a = rng.square(2);
    run.check("composition",
              max_entry_diff(apply_channel_matrix(second, apply_channel_matrix(first, a)),
                             apply_channel_matrix(first.then(second), a)),
              1e-12);
  }
  return run.take();
}

// ---------------------------------------------------------------- pairing

std::vector<CaseResult> suite_pairing(const VerifyOptions& opts) {
  SuiteRun run("pairing", opts, 9);
  Rng& rng = run.rng();
  double b_err = 0.0;
  double d_err = 0.0;
  double comm_err = 0.0;
  for (int t = 0; t < 20; ++t) {
    const MatrixC b = rng.integer_matrix(2, 4);
    const MatrixC d = rng.integer_matrix(2, 4);
    const Complex beta = b(0, 1) - b(1, 0);
    const Complex delta = d(0, 1) - d(1, 0);
    const OperatorPoly bh = pair_create(b);
    const OperatorPoly dh = pair_annihilate(d);
    b_err = std::max(b_err, max_coeff_diff(bh, beta * (cd(2, 1) * cd(2, 2))));
    d_err = std::max(d_err, max_coeff_diff(dh, delta * (c(2, 1) * c(2, 2))));
    comm_err = std::max(comm_err, max_coeff_diff(commutator(bh, dh),
                                                 beta * delta * (id(2) - number_operator(2))));
  }
  run.check("creator_form_n2", b_err, 0.0);
  run.check("annihilator_form_n2", d_err, 0.0);
  run.check("commutator_n2", comm_err, 0.0);
  {
    const MatrixC s = rng.square(3);
    run.check("symmetric_vanishes", pair_create(s + s.transpose()).max_abs_coefficient(), 0.0);
  }
  {
    // Sum over j<k of antisymmetrized coefficients equals the raw double sum.
    const MatrixC b = rng.square(4);
    OperatorPoly raw(4);
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) raw += b(j - 1, k - 1) * (cd(4, j) * cd(4, k));
    run.check("general_n4", max_coeff_diff(pair_create(b), raw), 1e-12);
  }
  return run.take();
}

// ---------------------------------------------------------------- bose

std::vector<CaseResult> suite_bose(const VerifyOptions& opts) {
  SuiteRun run("bose", opts, 10);
  Rng& rng = run.rng();
  const int cutoff = opts.boson_cutoff;
  const BosonModeSet bs{2, cutoff};

  {
    const BosonModeSet single{1, cutoff};
    const MatrixC b = boson_matrices(single).front();
    MatrixC expected = identity_matrix(cutoff + 1);
    expected(cutoff, cutoff) -= static_cast<double>(cutoff + 1);
    run.check("truncated_commutator", max_entry_diff(matrix_commutator(b, b.adjoint()), expected), 1e-12);
  }
  {
    std::vector<KroneckerTerm> terms;
    for (int i = 0; i < 3; ++i) terms.push_back({rng.square(2), rng.square(2)});
    const MatrixC m = recompose(terms);
    MatrixC t = rng.square(3);
    t += 3.0 * identity_matrix(3);
    const MatrixC tinv = t.inverse();
    std::vector<KroneckerTerm> mixed;
    for (int j = 0; j < 3; ++j) {
      KroneckerTerm k{MatrixC::Zero(2, 2), MatrixC::Zero(2, 2)};
      for (int i = 0; i < 3; ++i) {
        k.fermion += t(i, j) * terms[static_cast<std::size_t>(i)].fermion;
        k.boson += tinv(j, i) * terms[static_cast<std::size_t>(i)].boson;
      }
      mixed.push_back(std::move(k));
    }
    const FockMatrix direct = coupled_form_matrix({m, 2, bs});
    double err = max_entry_diff(direct, coupled_form_from_decomposition(terms, 2, bs));
    err = std::max(err, max_entry_diff(direct, coupled_form_from_decomposition(mixed, 2, bs)));
    err = std::max(err, max_entry_diff(direct, coupled_form_from_decomposition(
                                                   canonical_decomposition(m, 2, 2), 2, bs)));
    run.check("decomposition_invariance", err, 1e-10);
  }
  {
    const CoupledForm a{rng.square(4), 2, bs};
    run.check("self_commutator", coupled_commutator_defect(a, a).matrix().cwiseAbs().maxCoeff(), 1e-12);
    const CoupledForm b{rng.square(4), 2, bs};
    run.expect_nonzero("generic_commutator_defect",
                       operator_norm(coupled_commutator_defect(a, b).matrix()), 1e-6);
  }
  {
    const MatrixC a = rng.square(2);
    const MatrixC b = rng.square(2);
    const CoupledForm fa{kron(a, identity_matrix(2)), 2, bs};
    const CoupledForm fb{kron(b, identity_matrix(2)), 2, bs};
    const FockMatrix defect = coupled_commutator_defect(fa, fb);
    const MatrixC block = restrict_block(defect, {1, 0, -1});
    run.check("fermionic_reduction_boson_vacuum", block.cwiseAbs().maxCoeff(), 1e-12);
  }
  return run.take();
}

using SuiteFn = std::vector<CaseResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"car", suite_car},         {"product", suite_product},
      {"commutator", suite_commutator}, {"anticommutator", suite_anticommutator},
      {"sectors", suite_sectors}, {"exp", suite_exp},
      {"bch", suite_bch},         {"kraus", suite_kraus},
      {"pairing", suite_pairing}, {"bose", suite_bose},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CaseResult> run_suite(std::string_view suite, const VerifyOptions& opts) {
  std::vector<CaseResult> out;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      auto part = fn(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (out.empty()) throw Error("unknown verification suite '" + std::string(suite) + "'");
  return out;
}

std::string format_report_line(const CaseResult& r) {
  char err[32];
  std::snprintf(err, sizeof(err), "%.2e", r.max_err);
  return r.suite + "/" + r.name + ": " + (r.pass ? "PASS" : "FAIL") + " max_err=" + err;
}

std::string format_report_json(const std::vector<CaseResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CaseResult& r : results) {
    nlohmann::json entry = {{"suite", r.suite}, {"case", r.name}, {"status", r.pass ? "PASS" : "FAIL"}};
    if (std::isfinite(r.max_err)) {
      entry["max_err"] = r.max_err;
    } else {
      entry["max_err"] = nullptr;
    }
    arr.push_back(std::move(entry));
  }
  return arr.dump(2);
}

}  // namespace fermihat
