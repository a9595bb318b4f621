// Command-line front end: normal ordering, sector representations, spectra,
// embedded Kraus channels and the identity verification suites.

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "fermihat/channels.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/expr.hpp"
#include "fermihat/fock.hpp"
#include "fermihat/verify.hpp"

namespace {

using namespace fermihat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::optional<int> modes;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  int cutoff = 3;
  std::string format = "text";
  std::vector<std::string> matrix_files;
};

double snap(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Complex snap(Complex z) { return {snap(z.real()), snap(z.imag())}; }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const MatrixC& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_json(const OperatorPoly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    terms.push_back({{"coeff", complex_json(c)},
                     {"creators", mono.creator_indices()},
                     {"annihilators", mono.annihilator_indices()}});
  }
  return {{"n_modes", p.n_modes()}, {"canonical", p.to_string()}, {"terms", terms}};
}

std::vector<Complex> sorted_spectrum(std::vector<Complex> ev) {
  for (Complex& z : ev) z = snap(z);
  std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

std::string join_spectrum(const std::vector<Complex>& ev) {
  std::string out;
  for (const Complex& z : ev) {
    if (!out.empty()) out += ' ';
    out += format_complex(z);
  }
  return out;
}

class Session {
 public:
  explicit Session(const GlobalOptions& opts) : opts_(opts) {
    tol_ = ToleranceConfig::from_env();
    if (opts.tol) tol_.check_tolerance = *opts.tol;
    tol_.validate();
    ws_ = Workspace::with_builtins();
    ws_.tol = tol_;
    for (const std::string& path : opts.matrix_files) {
      for (auto& [name, m] : load_matrix_file(path)) {
        loaded_dim_ = std::max(loaded_dim_, static_cast<int>(m.rows()));
        ws_.matrices.insert_or_assign(name, m);
      }
    }
  }

  /// Parses `text` and fixes the workspace mode count.
  ExprNode prepare(const std::string& text, int extra_dim = 0) {
    ExprNode ast = parse(text);
    if (opts_.modes) {
      ws_.n_modes = *opts_.modes;
    } else {
      ws_.n_modes = std::max({1, loaded_dim_, extra_dim, required_modes(ast, ws_.matrices)});
    }
    return ast;
  }

  const Workspace& workspace() const { return ws_; }
  const ToleranceConfig& tolerance() const { return tol_; }
  bool json_output() const { return opts_.format == "json"; }

 private:
  GlobalOptions opts_;
  ToleranceConfig tol_;
  Workspace ws_;
  int loaded_dim_ = 0;
};

int cmd_normal_order(Session& s, const std::string& text) {
  const ExprNode ast = s.prepare(text);
  const OperatorPoly p = evaluate(ast, s.workspace());
  if (s.json_output()) {
    json out = poly_json(p);
    out["expression"] = text;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << p.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, Session& s, const std::string& suite) {
  VerifyOptions vo;
  vo.seed = g.seed;
  vo.tol = s.tolerance().check_tolerance;
  vo.boson_cutoff = g.cutoff;
  const auto results = run_suite(suite, vo);
  if (s.json_output()) {
    std::cout << format_report_json(results) << '\n';
  } else {
    for (const CaseResult& r : results) std::cout << format_report_line(r) << '\n';
  }
  const auto failed = std::count_if(results.begin(), results.end(),
                                    [](const CaseResult& r) { return !r.pass; });
  return failed == 0 ? kExitOk : kExitAssertion;
}

FockMatrix fock_of(const ExprNode& ast, const Workspace& ws) { return evaluate_fock(ast, ws); }

int cmd_repr(Session& s, const std::string& text, int sector) {
  const ExprNode ast = s.prepare(text);
  const int n = s.workspace().n_modes;
  if (sector < 0 || sector > n) {
    throw GuardError("sector must lie in 0.." + std::to_string(n));
  }
  const MatrixC m = ast.contains_exp() ? sector_block(fock_of(ast, s.workspace()), sector)
                                       : sector_matrix(evaluate(ast, s.workspace()), sector);
  if (s.json_output()) {
    std::cout << json{{"n_modes", n}, {"sector", sector}, {"matrix", matrix_json(m)}}.dump(2) << '\n';
    return kExitOk;
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::string row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) row += ' ';
      row += format_complex(snap(m(i, j)));
    }
    std::cout << row << '\n';
  }
  return kExitOk;
}

bool conserves_number(const FockMatrix& f) {
  const MatrixC& m = f.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (std::popcount(static_cast<std::uint64_t>(r)) != std::popcount(static_cast<std::uint64_t>(c)) &&
          std::abs(m(r, c)) > 1e-12) {
        return false;
      }
  return true;
}

int cmd_eig(Session& s, const std::string& text) {
  const ExprNode ast = s.prepare(text);
  const FockMatrix f = fock_of(ast, s.workspace());
  const int n = s.workspace().n_modes;
  const bool blocks = conserves_number(f);
  std::vector<std::vector<Complex>> per_sector;
  if (blocks) {
    for (int k = 0; k <= n; ++k) per_sector.push_back(sorted_spectrum(eigenvalues(sector_block(f, k))));
  }
  const auto full = sorted_spectrum(eigenvalues(f));

  if (s.json_output()) {
    json out = {{"n_modes", n}};
    json fock = json::array();
    for (const Complex& z : full) fock.push_back(complex_json(z));
    out["fock"] = fock;
    if (blocks) {
      json sectors = json::array();
      for (int k = 0; k <= n; ++k) {
        json ev = json::array();
        for (const Complex& z : per_sector[static_cast<std::size_t>(k)]) ev.push_back(complex_json(z));
        sectors.push_back({{"particles", k}, {"eigenvalues", ev}});
      }
      out["sectors"] = sectors;
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  if (blocks) {
    for (int k = 0; k <= n; ++k) {
      std::cout << "sector " << k << ": " << join_spectrum(per_sector[static_cast<std::size_t>(k)])
                << '\n';
    }
  } else {
    std::cout << "operator does not conserve particle number; no sector decomposition\n";
  }
  std::cout << "fock: " << join_spectrum(full) << '\n';
  return kExitOk;
}

int cmd_channel(Session& s, const std::string& kraus_file, const std::string& text) {
  const KrausSet ks(load_matrix_list(kraus_file));
  if (!ks.is_complete()) {
    std::cerr << "warning: Kraus set is not complete (defect=" << ks.completeness_defect()
              << ")\n";
  }
  const ExprNode ast = s.prepare(text, ks.dim());
  const OperatorPoly out = apply_channel_poly(ks, evaluate(ast, s.workspace()));
  if (s.json_output()) {
    std::cout << poly_json(out).dump(2) << '\n';
  } else {
    std::cout << out.to_string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermihat: quadratic forms in Fermi operators"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--modes", g.modes, "Number of fermion modes (default: inferred)")
      ->check(CLI::Range(1, 63));
  app.add_option("--tol", g.tol, "Check tolerance (overrides FERMIHAT_TOL)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for the verification suites");
  app.add_option("--cutoff", g.cutoff, "Boson occupation cutoff")->check(CLI::Range(1, 16));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-m,--matrices", g.matrix_files, "JSON matrix file(s) to load")
      ->check(CLI::ExistingFile);

  std::string expr;
  std::string suite;
  std::string kraus_file;
  int sector = 1;

  auto* normal = app.add_subcommand("normal-order", "Print the canonical normal-ordered form");
  normal->add_option("expr", expr, "Operator expression")->required();

  auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));

  auto* repr = app.add_subcommand("repr", "Print the k-particle sector matrix");
  repr->add_option("expr", expr, "Operator expression")->required();
  repr->add_option("--sector", sector, "Particle number k");

  auto* eig = app.add_subcommand("eig", "Fock spectrum and per-sector spectra");
  eig->add_option("expr", expr, "Operator expression")->required();

  auto* channel = app.add_subcommand("channel", "Apply an embedded Kraus channel");
  channel->add_option("kraus-file", kraus_file, "JSON file with the Kraus operators")
      ->required()
      ->check(CLI::ExistingFile);
  channel->add_option("expr", expr, "Operator expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Session session(g);
    if (*normal) return cmd_normal_order(session, expr);
    if (*verify) return cmd_verify(g, session, suite);
    if (*repr) return cmd_repr(session, expr, sector);
    if (*eig) return cmd_eig(session, expr);
    if (*channel) return cmd_channel(session, kraus_file, expr);
  } catch (const IdentityViolation& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
