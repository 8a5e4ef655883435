#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "warpiso/jet.hpp"

namespace warpiso {

enum class Op : std::uint8_t {
  constant,
  variable,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  exp,
  log,
  sin,
  cos,
  sinh,
  cosh,
};

/// Expression tree in the single variable t, stored as a post-order node
/// arena: children always precede their parent and the root is the last node.
///
/// Grammar (whitespace insignificant):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := '-' factor | atom ('^' atom)?
///     atom   := number | 't' | func '(' expr ')' | '(' expr ')'
///     func   := exp | log | sin | cos | sinh | cosh
///
/// '^' binds tighter than unary minus, so "-t^2" is -(t^2).
class Expression {
 public:
  struct Node {
    Op op;
    double value;        // constant payload
    std::uint32_t lhs;   // first operand index
    std::uint32_t rhs;   // second operand index (binary ops)
  };

  /// Throws ParseError with the byte offset of the first problem.
  static Expression parse(std::string_view source);

  double value(double t) const;
  Jet2 jet(double t) const;

  /// Re-parsable infix form with every compound subexpression parenthesized.
  std::string to_string() const;

  /// Structural form, e.g. "Exp(Sub(Pow(Var t, 2), Mul(2, Sin(Var t))))".
  std::string tree() const;

  /// True when the expression does not depend on t.
  bool is_constant() const;

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  friend class ExpressionParser;

  std::string to_string(std::uint32_t index) const;
  std::string tree(std::uint32_t index) const;
  std::uint32_t root() const { return static_cast<std::uint32_t>(nodes_.size() - 1); }

  std::vector<Node> nodes_;
  std::vector<bool> constant_;  // per node: subtree free of t
};

}  // namespace warpiso
