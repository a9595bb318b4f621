#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fermihat/fock.hpp"
#include "fermihat/matrix_io.hpp"
#include "fermihat/operator_poly.hpp"

namespace fermihat {

enum class NodeKind {
  scalar,           // complex literal
  identity,         // I
  create,           // cd(j) or cdj
  annihilate,       // c(j) or cj
  hat,              // hat(name)
  pair_create,      // pairC(name)
  pair_annihilate,  // pairA(name)
  add,
  sub,
  mul,
  neg,
  comm,
  acomm,
  adj,
  exp,
};

/// Parsed operator expression.
struct ExprNode {
  NodeKind kind = NodeKind::scalar;
  Complex value{};        // scalar
  int mode = 0;           // create / annihilate
  std::string ref;        // hat / pairC / pairA
  std::vector<ExprNode> children;
  std::size_t offset = 0;  // byte offset of the node's first token

  bool contains_exp() const;
};

/**
 * Parses an operator expression.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '.') unary)*
 *   unary   := ('-' | '+') unary | primary
 *   primary := number ['i'] | 'i' | 'I' | '(' expr ')' | cdN | cN
 *            | c(N) | cd(N) | hat(name) | pairC(name) | pairA(name)
 *            | comm(expr, expr) | acomm(expr, expr) | adj(expr) | exp(expr)
 *
 * The canonical printer output of an OperatorPoly is accepted verbatim.
 * Throws ParseError with the byte offset of the offending token.
 */
ExprNode parse(std::string_view text);

/// Matrices addressable from expressions plus evaluation settings.
struct Workspace {
  MatrixTable matrices;
  int n_modes = 2;
  ToleranceConfig tol;

  /// Workspace preloaded with sigma1, sigma2, sigma3 and I2, I3, I4.
  static Workspace with_builtins();
};

/// Largest mode index or referenced matrix dimension in `ast` (0 if none).
int required_modes(const ExprNode& ast, const MatrixTable& matrices);

/// Symbolic evaluation; `exp` nodes are rejected with EvalError.
OperatorPoly evaluate(const ExprNode& ast, const Workspace& ws);

/// Numeric evaluation on the 2^n Fock space; supports `exp`.
FockMatrix evaluate_fock(const ExprNode& ast, const Workspace& ws);

}  // namespace fermihat
