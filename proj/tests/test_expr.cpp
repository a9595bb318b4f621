#include <gtest/gtest.h>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"
#include "fermihat/expr.hpp"
#include "fermihat/matrix_io.hpp"
#include "fermihat/random.hpp"
#include "random_expr.hpp"

using namespace fermihat;

namespace {

OperatorPoly eval(const std::string& text, int n = 2) {
  Workspace ws = Workspace::with_builtins();
  ws.n_modes = n;
  return evaluate(parse(text), ws);
}

}  // namespace

TEST(Parse, Atoms) {
  EXPECT_EQ(eval("cd(1)"), OperatorPoly::creation(2, 1));
  EXPECT_EQ(eval("c2"), OperatorPoly::annihilation(2, 2));
  EXPECT_EQ(eval("I"), OperatorPoly::identity(2));
  EXPECT_EQ(eval("2i * I"), OperatorPoly::identity(2) * Complex(0, 2));
  EXPECT_EQ(eval("(1.5-2i)*I"), OperatorPoly::identity(2) * Complex(1.5, -2));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(eval("cd1 + cd2 * c2"), eval("cd1 + (cd2 * c2)"));
  EXPECT_EQ(eval("-cd1*c1"), eval("(-1)*(cd1*c1)"));
  EXPECT_EQ(eval("cd1 - cd2 - c1"), eval("cd1 - (cd2 + c1)"));
}

TEST(Parse, Functions) {
  EXPECT_EQ(eval("comm(hat(sigma1), hat(sigma2))"), hat(Complex(0, 2) * pauli(3)));
  EXPECT_EQ(eval("acomm(c1, cd1)"), OperatorPoly::identity(2));
  EXPECT_EQ(eval("adj(cd1*c2)"), eval("cd2*c1"));
  EXPECT_EQ(eval("hat(sigma1)*hat(sigma1)"), hat(pauli(1)) * hat(pauli(1)));
  EXPECT_EQ(eval("hat(I3)", 3), number_operator(3));
}

TEST(Parse, PrinterOutputIsAccepted) {
  const OperatorPoly p = hat(pauli(1)) * hat(pauli(1));
  EXPECT_EQ(p.to_string(), "(1+0i)*cd1.c1 + (1+0i)*cd2.c2 + (2+0i)*cd1.cd2.c1.c2");
  EXPECT_EQ(eval(p.to_string()), p);
  EXPECT_EQ(eval("0"), OperatorPoly(2));
}

TEST(Parse, ErrorOffsets) {
  try {
    parse("cd(1)*");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_NE(std::string(e.what()).find("offset 6"), std::string::npos);
  }
  EXPECT_THROW(parse("cd(1"), ParseError);
  EXPECT_THROW(parse("frob(1)"), ParseError);
  EXPECT_THROW(parse("comm(cd1)"), ParseError);
  EXPECT_THROW(parse("cd1 )"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(Evaluate, Errors) {
  Workspace ws = Workspace::with_builtins();
  EXPECT_THROW(evaluate(parse("hat(missing)"), ws), EvalError);
  EXPECT_THROW(evaluate(parse("exp(cd1*c1)"), ws), EvalError);
  EXPECT_THROW(evaluate(parse("cd3"), ws), EvalError);
  EXPECT_THROW(evaluate(parse("hat(I3)"), ws), EvalError);
}

TEST(Evaluate, RequiredModes) {
  const Workspace ws = Workspace::with_builtins();
  EXPECT_EQ(required_modes(parse("cd5 * c1"), ws.matrices), 5);
  EXPECT_EQ(required_modes(parse("hat(I4)"), ws.matrices), 4);
  EXPECT_EQ(required_modes(parse("2*I"), ws.matrices), 0);
}

TEST(Evaluate, FockExponential) {
  Workspace ws = Workspace::with_builtins();
  ws.n_modes = 2;
  const FockMatrix f = evaluate_fock(parse("exp(0.3i*hat(sigma1))"), ws);
  EXPECT_LT(max_entry_diff(f, u_hat(Complex(0, 0.3) * pauli(1))), 1e-14);
}

TEST(RoundTrip, RandomExpressions) {
  Rng rng(501);
  Workspace ws = Workspace::with_builtins();
  ws.n_modes = 3;
  for (int t = 0; t < 100; ++t) {
    const std::string text = random_expression(rng, 3);
    const OperatorPoly p = evaluate(parse(text), ws);
    const std::string printed = p.to_string();
    const OperatorPoly q = evaluate(parse(printed), ws);
    EXPECT_EQ(q.to_string(), printed) << text;
    EXPECT_EQ(p, q);
  }
}

TEST(MatrixIo, ParsesBothEntryForms) {
  const MatrixTable t = parse_matrix_table(R"({"A": [[1, [0, 2]], [[3, -1], 4.5]]})");
  ASSERT_EQ(t.count("A"), 1u);
  MatrixC expected(2, 2);
  expected << 1, Complex(0, 2), Complex(3, -1), 4.5;
  EXPECT_EQ(t.at("A"), expected);
  EXPECT_EQ(parse_matrix_table(matrix_to_json(expected).insert(0, "{\"B\": ").append("}")).at("B"),
            expected);
  EXPECT_EQ(parse_matrix_list(R"([[[1,0],[0,1]], [[0,1],[1,0]]])").size(), 2u);
  EXPECT_THROW(parse_matrix_table(R"({"A": [[1, 2], [3]]})"), Error);
  EXPECT_THROW(parse_matrix_table("not json"), Error);
}
