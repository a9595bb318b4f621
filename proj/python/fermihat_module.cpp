#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermihat/channels.hpp"
#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"
#include "fermihat/expr.hpp"
#include "fermihat/extensions.hpp"
#include "fermihat/fock.hpp"
#include "fermihat/verify.hpp"

namespace py = pybind11;
using namespace fermihat;

PYBIND11_MODULE(_fermihat, m) {
  m.doc() = "Quadratic forms in Fermi operators: symbolic algebra and Fock-space oracle";

  auto base = py::register_exception<Error>(m, "FermihatError");
  py::register_exception<IdentityViolation>(m, "IdentityViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ModeMismatch>(m, "ModeMismatch", base.ptr());
  py::register_exception<GuardError>(m, "GuardError", base.ptr());
  py::register_exception<EvalError>(m, "EvalError", base.ptr());

  py::class_<OperatorPoly>(m, "OperatorPoly")
      .def(py::init<int>(), py::arg("n_modes"))
      .def_static("identity", [](int n) { return OperatorPoly::identity(n); })
      .def_static("creation", [](int n, int j) { return OperatorPoly::creation(n, j); })
      .def_static("annihilation", [](int n, int j) { return OperatorPoly::annihilation(n, j); })
      .def_property_readonly("n_modes", &OperatorPoly::n_modes)
      .def("terms",
           [](const OperatorPoly& p) {
             std::vector<std::tuple<std::vector<int>, std::vector<int>, Complex>> out;
             for (const auto& [mono, c] : p.terms()) {
               out.emplace_back(mono.creator_indices(), mono.annihilator_indices(), c);
             }
             return out;
           },
           "List of (creators, annihilators, coefficient) in canonical order.")
      .def("is_zero", &OperatorPoly::is_zero)
      .def("__len__", &OperatorPoly::size)
      .def("__str__", &OperatorPoly::to_string)
      .def("__repr__", [](const OperatorPoly& p) { return "OperatorPoly(" + p.to_string() + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const OperatorPoly& p, Complex s) { return p * s; })
      .def("__rmul__", [](const OperatorPoly& p, Complex s) { return s * p; })
      .def("__neg__", [](const OperatorPoly& p) { return -p; });

  m.def("adjoint", &adjoint);
  m.def("commutator", &commutator);
  m.def("anticommutator", &anticommutator);
  m.def("max_coeff_diff", &max_coeff_diff);
  m.def("poly_equal", [](const OperatorPoly& p, const OperatorPoly& q, double tol) {
    ToleranceConfig cfg;
    cfg.check_tolerance = tol;
    return poly_equal(p, q, cfg);
  }, py::arg("p"), py::arg("q"), py::arg("tol") = 1e-10);

  m.def("hat", [](const MatrixC& a, int n) { return hat(a, n); }, py::arg("a"), py::arg("n_modes") = 0);
  m.def("number_operator", [](int n) { return number_operator(n); });
  m.def("g_form", [](const MatrixC& x, const MatrixC& y) { return g_form(x, y); });
  m.def("product_correction", [](const MatrixC& a, const MatrixC& b) { return product_correction(a, b); });
  m.def("square_correction_3x3", [](const MatrixC& a) { return square_correction_3x3(a); });
  m.def("anticommutator_correction",
        [](const MatrixC& a, const MatrixC& b) { return anticommutator_correction(a, b); });
  m.def("commutator_identity", [](const MatrixC& a, const MatrixC& b) { return commutator_identity(a, b); });
  m.def("embedded_trace", &embedded_trace);
  m.def("pair_create", [](const MatrixC& b, int n) { return pair_create(b, n); }, py::arg("b"),
        py::arg("n_modes") = 0);
  m.def("pair_annihilate", [](const MatrixC& d, int n) { return pair_annihilate(d, n); }, py::arg("d"),
        py::arg("n_modes") = 0);
  m.def("is_idempotent", [](const OperatorPoly& p) { return is_idempotent(p); });
  m.def("is_selfadjoint", [](const OperatorPoly& p) { return is_selfadjoint(p); });

  m.def("poly_to_fock", [](const OperatorPoly& p) { return poly_to_fock(p).matrix(); },
        "Dense 2^n x 2^n matrix; bit j-1 of a basis index is the occupation of mode j.");
  m.def("sector_matrix", &sector_matrix, py::arg("p"), py::arg("particles"));
  m.def("filled_state_eigenvalue", [](const MatrixC& a) { return filled_state_eigenvalue(a); });
  m.def("eigenvalues", [](const MatrixC& a) { return eigenvalues(a); });
  m.def("vacuum_expectation", &vacuum_expectation);

  m.def("matrix_exp", &matrix_exp);
  m.def("matrix_log", &matrix_log);
  m.def("u_hat", [](const MatrixC& c) { return u_hat(c).matrix(); });
  m.def("bch_truncated", &bch_truncated, py::arg("x"), py::arg("y"), py::arg("max_degree"));

  m.def("apply_channel_matrix", [](const std::vector<MatrixC>& ks, const MatrixC& a) {
    return apply_channel_matrix(KrausSet(ks), a);
  });
  m.def("apply_channel_poly", [](const std::vector<MatrixC>& ks, const OperatorPoly& p) {
    return apply_channel_poly(KrausSet(ks), p);
  });

  m.def("coupled_form_matrix", [](const MatrixC& mat, int fermion_modes, int boson_modes, int cutoff) {
    return coupled_form_matrix({mat, fermion_modes, {boson_modes, cutoff}}).matrix();
  }, py::arg("m"), py::arg("fermion_modes"), py::arg("boson_modes"), py::arg("cutoff") = 3);

  m.def("parse_and_evaluate",
        [](const std::string& text, int n_modes, const std::map<std::string, MatrixC>& matrices) {
          Workspace ws = Workspace::with_builtins();
          for (const auto& [k, v] : matrices) ws.matrices.insert_or_assign(k, v);
          const ExprNode ast = parse(text);
          ws.n_modes = n_modes > 0 ? n_modes : std::max(1, required_modes(ast, ws.matrices));
          return evaluate(ast, ws);
        },
        py::arg("text"), py::arg("n_modes") = 0,
        py::arg("matrices") = std::map<std::string, MatrixC>{});

  m.def("verify",
        [](const std::string& suite, std::uint64_t seed) {
          VerifyOptions opts;
          opts.seed = seed;
          std::vector<std::tuple<std::string, bool, double>> out;
          for (const CaseResult& r : run_suite(suite, opts)) {
            out.emplace_back(r.suite + "/" + r.name, r.pass, r.max_err);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 42,
        "Runs a verification suite; returns (case, passed, max_err) tuples.");
}
