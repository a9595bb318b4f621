#include "fermihat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "fermihat/embedding.hpp"
#include "fermihat/errors.hpp"
#include "fermihat/exp_bch.hpp"

namespace fermihat {

namespace {

enum class TokenKind { number, ident, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string_view text;
  std::size_t offset = 0;
  Complex value{};
};

bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }
bool digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

// "cd12" -> 12, "c3" -> 3 for the printer's mode atoms.
std::optional<int> mode_atom(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), digit)) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  ExprNode parse_all() {
    ExprNode node = parse_expr();
    if (tok_.kind != TokenKind::end) fail("unexpected token '" + std::string(tok_.text) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, tok_.offset); }

  bool at_symbol(char ch) const {
    return tok_.kind == TokenKind::symbol && tok_.text.size() == 1 && tok_.text[0] == ch;
  }

  void expect_symbol(char ch) {
    if (!at_symbol(ch)) {
      if (tok_.kind == TokenKind::end) fail(std::string("expected '") + ch + "' before end of input");
      fail(std::string("expected '") + ch + "', found '" + std::string(tok_.text) + "'");
    }
    advance();
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = TokenKind::end;
      return;
    }
    const char ch = text_[pos_];
    if (digit(ch) || (ch == '.' && pos_ + 1 < text_.size() && digit(text_[pos_ + 1]))) {
      lex_number();
    } else if (ident_start(ch)) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      tok_.kind = TokenKind::ident;
      tok_.text = text_.substr(pos_, end - pos_);
      pos_ = end;
    } else if (std::string_view("+-*.(),").find(ch) != std::string_view::npos) {
      tok_.kind = TokenKind::symbol;
      tok_.text = text_.substr(pos_, 1);
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }
  }

  void lex_number() {
    std::size_t end = pos_;
    while (end < text_.size() && digit(text_[end])) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && digit(text_[end])) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
      if (exp_end < text_.size() && digit(text_[exp_end])) {
        while (exp_end < text_.size() && digit(text_[exp_end])) ++exp_end;
        end = exp_end;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end) {
      throw ParseError("malformed number", pos_);
    }
    bool imaginary = false;
    if (end < text_.size() && text_[end] == 'i' &&
        (end + 1 >= text_.size() || !ident_char(text_[end + 1]))) {
      imaginary = true;
      ++end;
    }
    tok_.kind = TokenKind::number;
    tok_.text = text_.substr(pos_, end - pos_);
    tok_.value = imaginary ? Complex(0.0, value) : Complex(value, 0.0);
    pos_ = end;
  }

  static ExprNode binary(NodeKind kind, ExprNode lhs, ExprNode rhs, std::size_t offset) {
    ExprNode node;
    node.kind = kind;
    node.offset = offset;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprNode parse_expr() {
    ExprNode lhs = parse_term();
    while (at_symbol('+') || at_symbol('-')) {
      const NodeKind kind = at_symbol('+') ? NodeKind::add : NodeKind::sub;
      const std::size_t offset = tok_.offset;
      advance();
      lhs = binary(kind, std::move(lhs), parse_term(), offset);
    }
    return lhs;
  }

  ExprNode parse_term() {
    ExprNode lhs = parse_unary();
    while (at_symbol('*') || at_symbol('.')) {
      const std::size_t offset = tok_.offset;
      advance();
      lhs = binary(NodeKind::mul, std::move(lhs), parse_unary(), offset);
    }
    return lhs;
  }

  ExprNode parse_unary() {
    if (at_symbol('-') || at_symbol('+')) {
      const bool negate = at_symbol('-');
      const std::size_t offset = tok_.offset;
      advance();
      ExprNode operand = parse_unary();
      if (!negate) return operand;
      ExprNode node;
      node.kind = NodeKind::neg;
      node.offset = offset;
      node.children.push_back(std::move(operand));
      return node;
    }
    return parse_primary();
  }

  ExprNode parse_primary() {
    ExprNode node;
    node.offset = tok_.offset;
    switch (tok_.kind) {
      case TokenKind::end:
        fail("unexpected end of input");
      case TokenKind::number:
        node.kind = NodeKind::scalar;
        node.value = tok_.value;
        advance();
        return node;
      case TokenKind::symbol:
        if (at_symbol('(')) {
          advance();
          ExprNode inner = parse_expr();
          expect_symbol(')');
          return inner;
        }
        fail("unexpected token '" + std::string(tok_.text) + "'");
      case TokenKind::ident:
        break;
    }

    const std::string_view name = tok_.text;
    advance();
    if (at_symbol('(')) return parse_call(name, node.offset);

    if (name == "i") {
      node.kind = NodeKind::scalar;
      node.value = Complex(0.0, 1.0);
      return node;
    }
    if (name == "I") {
      node.kind = NodeKind::identity;
      return node;
    }
    if (auto j = mode_atom(name, "cd")) {
      node.kind = NodeKind::create;
      node.mode = *j;
    } else if (auto k = mode_atom(name, "c")) {
      node.kind = NodeKind::annihilate;
      node.mode = *k;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", node.offset);
    }
    if (node.mode < 1) throw ParseError("mode index must be at least 1", node.offset);
    return node;
  }

  ExprNode parse_call(std::string_view name, std::size_t offset) {
    ExprNode node;
    node.offset = offset;
    expect_symbol('(');

    if (name == "c" || name == "cd") {
      node.kind = name == "c" ? NodeKind::annihilate : NodeKind::create;
      if (tok_.kind != TokenKind::number || tok_.value.imag() != 0.0) {
        fail(std::string(name) + "() expects a positive integer mode index");
      }
      const double v = tok_.value.real();
      if (v < 1.0 || v != static_cast<double>(static_cast<int>(v)) || v > kMaxModes) {
        fail(std::string(name) + "() expects a mode index in 1..63");
      }
      node.mode = static_cast<int>(v);
      advance();
      close_call(name, 1, offset);
      return node;
    }
    if (name == "hat" || name == "pairC" || name == "pairA") {
      node.kind = name == "hat"     ? NodeKind::hat
                  : name == "pairC" ? NodeKind::pair_create
                                    : NodeKind::pair_annihilate;
      if (tok_.kind != TokenKind::ident) fail(std::string(name) + "() expects a matrix name");
      node.ref = std::string(tok_.text);
      advance();
      close_call(name, 1, offset);
      return node;
    }

    std::size_t arity = 0;
    if (name == "comm") {
      node.kind = NodeKind::comm;
      arity = 2;
    } else if (name == "acomm") {
      node.kind = NodeKind::acomm;
      arity = 2;
    } else if (name == "adj") {
      node.kind = NodeKind::adj;
      arity = 1;
    } else if (name == "exp") {
      node.kind = NodeKind::exp;
      arity = 1;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", offset);
    }
    if (at_symbol(')')) {
      throw ParseError(std::string(name) + " expects " + std::to_string(arity) +
                           " argument(s), got 0",
                       offset);
    }
    node.children.push_back(parse_expr());
    while (at_symbol(',')) {
      advance();
      node.children.push_back(parse_expr());
    }
    if (!at_symbol(')')) {
      if (tok_.kind == TokenKind::end) fail("expected ')' before end of input");
      fail("expected ')' or ',', found '" + std::string(tok_.text) + "'");
    }
    if (node.children.size() != arity) {
      throw ParseError(std::string(name) + " expects " + std::to_string(arity) +
                           " argument(s), got " + std::to_string(node.children.size()),
                       offset);
    }
    advance();
    return node;
  }

  void close_call(std::string_view name, std::size_t arity, std::size_t offset) {
    if (at_symbol(',')) {
      throw ParseError(std::string(name) + " expects " + std::to_string(arity) + " argument(s)",
                       offset);
    }
    expect_symbol(')');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
};

const MatrixC& lookup(const Workspace& ws, const std::string& name) {
  auto it = ws.matrices.find(name);
  if (it == ws.matrices.end()) throw EvalError("unresolved matrix reference '" + name + "'");
  return it->second;
}

void check_mode(const ExprNode& node, const Workspace& ws) {
  if (node.mode > ws.n_modes) {
    throw EvalError("mode " + std::to_string(node.mode) + " exceeds workspace mode count " +
                    std::to_string(ws.n_modes));
  }
}

const MatrixC& square_ref(const ExprNode& node, const Workspace& ws) {
  const MatrixC& m = lookup(ws, node.ref);
  if (m.rows() != m.cols()) throw EvalError("matrix '" + node.ref + "' is not square");
  if (m.rows() > ws.n_modes) {
    throw EvalError("matrix '" + node.ref + "' is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " but the workspace has " +
                    std::to_string(ws.n_modes) + " modes");
  }
  return m;
}

}  // namespace

bool ExprNode::contains_exp() const {
  if (kind == NodeKind::exp) return true;
  return std::any_of(children.begin(), children.end(),
                     [](const ExprNode& c) { return c.contains_exp(); });
}

ExprNode parse(std::string_view text) { return Parser(text).parse_all(); }

Workspace Workspace::with_builtins() {
  Workspace ws;
  for (int i = 1; i <= 3; ++i) ws.matrices.emplace("sigma" + std::to_string(i), pauli(i));
  for (int n = 2; n <= 4; ++n) ws.matrices.emplace("I" + std::to_string(n), identity_matrix(n));
  return ws;
}

int required_modes(const ExprNode& ast, const MatrixTable& matrices) {
  int n = ast.mode;
  if (!ast.ref.empty()) {
    if (auto it = matrices.find(ast.ref); it != matrices.end()) {
      n = std::max(n, static_cast<int>(it->second.rows()));
    }
  }
  for (const ExprNode& c : ast.children) n = std::max(n, required_modes(c, matrices));
  return n;
}

OperatorPoly evaluate(const ExprNode& ast, const Workspace& ws) {
  const int n = ws.n_modes;
  const ToleranceConfig& tol = ws.tol;
  auto child = [&](std::size_t i) { return evaluate(ast.children.at(i), ws); };
  switch (ast.kind) {
    case NodeKind::scalar:
      return OperatorPoly::identity(n, tol) * ast.value;
    case NodeKind::identity:
      return OperatorPoly::identity(n, tol);
    case NodeKind::create:
      check_mode(ast, ws);
      return OperatorPoly::creation(n, ast.mode, tol);
    case NodeKind::annihilate:
      check_mode(ast, ws);
      return OperatorPoly::annihilation(n, ast.mode, tol);
    case NodeKind::hat:
      return hat(square_ref(ast, ws), n, tol);
    case NodeKind::pair_create:
      return pair_create(square_ref(ast, ws), n, tol);
    case NodeKind::pair_annihilate:
      return pair_annihilate(square_ref(ast, ws), n, tol);
    case NodeKind::add:
      return child(0) + child(1);
    case NodeKind::sub:
      return child(0) - child(1);
    case NodeKind::mul:
      return child(0) * child(1);
    case NodeKind::neg:
      return -child(0);
    case NodeKind::comm:
      return commutator(child(0), child(1));
    case NodeKind::acomm:
      return anticommutator(child(0), child(1));
    case NodeKind::adj:
      return adjoint(child(0));
    case NodeKind::exp:
      throw EvalError("exp() has no finite normal-ordered form; evaluate at Fock level");
  }
  throw EvalError("unknown expression node");
}

FockMatrix evaluate_fock(const ExprNode& ast, const Workspace& ws) {
  if (!ast.contains_exp()) return poly_to_fock(evaluate(ast, ws));
  auto child = [&](std::size_t i) { return evaluate_fock(ast.children.at(i), ws); };
  switch (ast.kind) {
    case NodeKind::add:
      return child(0) + child(1);
    case NodeKind::sub:
      return child(0) - child(1);
    case NodeKind::mul:
      return child(0) * child(1);
    case NodeKind::neg:
      return Complex(-1.0) * child(0);
    case NodeKind::comm:
      return fock_commutator(child(0), child(1));
    case NodeKind::acomm:
      return fock_anticommutator(child(0), child(1));
    case NodeKind::adj:
      return child(0).adjoint();
    case NodeKind::exp:
      return fock_exp(child(0));
    default:
      throw EvalError("unexpected node containing exp()");
  }
}

}  // namespace fermihat
