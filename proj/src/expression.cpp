#include "warpiso/expression.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <utility>

#include "warpiso/errors.hpp"

namespace warpiso {

namespace {

struct FunctionName {
  std::string_view name;
  Op op;
};

constexpr std::array<FunctionName, 6> kFunctions{{
    {"exp", Op::exp},
    {"log", Op::log},
    {"sin", Op::sin},
    {"cos", Op::cos},
    {"sinh", Op::sinh},
    {"cosh", Op::cosh},
}};

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view op_name(Op op) {
  switch (op) {
    case Op::constant: return "Const";
    case Op::variable: return "Var";
    case Op::add: return "Add";
    case Op::sub: return "Sub";
    case Op::mul: return "Mul";
    case Op::div: return "Div";
    case Op::pow: return "Pow";
    case Op::neg: return "Neg";
    case Op::exp: return "Exp";
    case Op::log: return "Log";
    case Op::sin: return "Sin";
    case Op::cos: return "Cos";
    case Op::sinh: return "Sinh";
    case Op::cosh: return "Cosh";
  }
  return "?";
}

std::string_view function_name(Op op) {
  for (const auto& f : kFunctions) {
    if (f.op == op) return f.name;
  }
  return "?";
}

std::string format_constant(double c) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), c);
  return std::string(buf, res.ptr);
}

}  // namespace

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view src) : src_(src) {}

  Expression run() {
    skip_ws();
    if (pos_ == src_.size()) {
      throw ParseError(ParseError::Kind::syntax, pos_, "empty expression");
    }
    parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(ParseError::Kind::syntax, pos_,
                       "unexpected '" + std::string(1, src_[pos_]) + "'");
    }
    return std::move(out_);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(ParseError::Kind::syntax, pos_, std::string("expected '") + c + "'");
    }
  }

  std::uint32_t emit(Op op, double value, std::uint32_t lhs, std::uint32_t rhs) {
    bool constant = false;
    switch (op) {
      case Op::constant: constant = true; break;
      case Op::variable: constant = false; break;
      case Op::add:
      case Op::sub:
      case Op::mul:
      case Op::div:
      case Op::pow: constant = out_.constant_[lhs] && out_.constant_[rhs]; break;
      default: constant = out_.constant_[lhs]; break;
    }
    out_.nodes_.push_back({op, value, lhs, rhs});
    out_.constant_.push_back(constant);
    return static_cast<std::uint32_t>(out_.nodes_.size() - 1);
  }

  std::uint32_t parse_expr() {
    std::uint32_t lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = emit(Op::add, 0.0, lhs, parse_term());
      } else if (accept('-')) {
        lhs = emit(Op::sub, 0.0, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  std::uint32_t parse_term() {
    std::uint32_t lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = emit(Op::mul, 0.0, lhs, parse_factor());
      } else if (accept('/')) {
        lhs = emit(Op::div, 0.0, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  std::uint32_t parse_factor() {
    if (accept('-')) {
      const std::uint32_t operand = parse_factor();
      return emit(Op::neg, 0.0, operand, 0);
    }
    const std::uint32_t base = parse_atom();
    if (accept('^')) {
      const std::uint32_t exponent = parse_atom();
      return emit(Op::pow, 0.0, base, exponent);
    }
    return base;
  }

  std::uint32_t parse_atom() {
    skip_ws();
    if (pos_ == src_.size()) {
      throw ParseError(ParseError::Kind::syntax, pos_, "unexpected end of input");
    }
    const char c = src_[pos_];
    if (is_digit(c) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      const std::uint32_t inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_ident_char(c)) return parse_identifier();
    throw ParseError(ParseError::Kind::syntax, pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::uint32_t parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    if (pos_ == start + 1 && src_[start] == '.') {
      throw ParseError(ParseError::Kind::syntax, start, "malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && is_digit(src_[p])) {
        while (p < src_.size() && is_digit(src_[p])) ++p;
        pos_ = p;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError(ParseError::Kind::syntax, start, "malformed number");
    }
    return emit(Op::constant, value, 0, 0);
  }

  std::uint32_t parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return emit(Op::variable, 0.0, 0, 0);

    for (const auto& f : kFunctions) {
      if (f.name != name) continue;
      skip_ws();
      if (pos_ == src_.size() || src_[pos_] != '(') {
        throw ParseError(ParseError::Kind::syntax, pos_,
                         "expected '(' after '" + std::string(name) + "'");
      }
      const std::size_t open = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == ')') {
        throw ParseError(ParseError::Kind::arity, open,
                         "'" + std::string(name) + "' takes exactly one argument, got 0");
      }
      const std::uint32_t arg = parse_expr();
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == ',') {
        throw ParseError(ParseError::Kind::arity, pos_,
                         "'" + std::string(name) + "' takes exactly one argument");
      }
      expect(')');
      return emit(f.op, 0.0, arg, 0);
    }
    throw ParseError(ParseError::Kind::unknown_identifier, start,
                     "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Expression out_;
};

Expression Expression::parse(std::string_view source) { return ExpressionParser(source).run(); }

bool Expression::is_constant() const { return constant_.back(); }

double Expression::value(double t) const {
  constexpr std::size_t kInline = 64;
  std::array<double, kInline> small{};
  std::vector<double> large;
  double* vals = small.data();
  if (nodes_.size() > kInline) {
    large.resize(nodes_.size());
    vals = large.data();
  }

  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    const double a = vals[n.lhs];
    const double b = vals[n.rhs];
    double r = 0.0;
    switch (n.op) {
      case Op::constant: r = n.value; break;
      case Op::variable: r = t; break;
      case Op::add: r = a + b; break;
      case Op::sub: r = a - b; break;
      case Op::mul: r = a * b; break;
      case Op::div:
        if (b == 0.0) throw DomainError("division by zero", to_string(i));
        r = a / b;
        break;
      case Op::pow:
        if (constant_[n.rhs]) {
          if (a < 0.0 && b != std::floor(b)) {
            throw DomainError("negative base with non-integer exponent", to_string(i));
          }
          r = std::pow(a, b);
        } else {
          if (a <= 0.0) throw DomainError("non-positive base with variable exponent", to_string(i));
          r = std::exp(b * std::log(a));
        }
        break;
      case Op::neg: r = -a; break;
      case Op::exp: r = std::exp(a); break;
      case Op::log:
        if (a <= 0.0) throw DomainError("log of non-positive value", to_string(i));
        r = std::log(a);
        break;
      case Op::sin: r = std::sin(a); break;
      case Op::cos: r = std::cos(a); break;
      case Op::sinh: r = std::sinh(a); break;
      case Op::cosh: r = std::cosh(a); break;
    }
    if (!std::isfinite(r)) throw DomainError("non-finite value", to_string(i));
    vals[i] = r;
  }
  return vals[root()];
}

Jet2 Expression::jet(double t) const {
  constexpr std::size_t kInline = 64;
  std::array<Jet2, kInline> small;
  std::vector<Jet2> large;
  Jet2* vals = small.data();
  if (nodes_.size() > kInline) {
    large.resize(nodes_.size());
    vals = large.data();
  }

  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    const Jet2& a = vals[n.lhs];
    const Jet2& b = vals[n.rhs];
    Jet2 r;
    switch (n.op) {
      case Op::constant: r = Jet2::constant(n.value); break;
      case Op::variable: r = Jet2::variable(t); break;
      case Op::add: r = a + b; break;
      case Op::sub: r = a - b; break;
      case Op::mul: r = a * b; break;
      case Op::div:
        if (b.v == 0.0) throw DomainError("division by zero", to_string(i));
        r = a / b;
        break;
      case Op::pow:
        if (constant_[n.rhs]) {
          if (a.v < 0.0 && b.v != std::floor(b.v)) {
            throw DomainError("negative base with non-integer exponent", to_string(i));
          }
          r = pow(a, b.v);
        } else {
          if (a.v <= 0.0) throw DomainError("non-positive base with variable exponent", to_string(i));
          const Jet2 l = log(a);
          r = exp(b * l);
        }
        break;
      case Op::neg: r = -a; break;
      case Op::exp: r = exp(a); break;
      case Op::log:
        if (a.v <= 0.0) throw DomainError("log of non-positive value", to_string(i));
        r = log(a);
        break;
      case Op::sin: r = sin(a); break;
      case Op::cos: r = cos(a); break;
      case Op::sinh: r = sinh(a); break;
      case Op::cosh: r = cosh(a); break;
    }
    if (!r.finite()) throw DomainError("non-finite value or derivative", to_string(i));
    vals[i] = r;
  }
  return vals[root()];
}

std::string Expression::to_string() const { return to_string(root()); }

std::string Expression::to_string(std::uint32_t index) const {
  const Node& n = nodes_[index];
  switch (n.op) {
    case Op::constant: return format_constant(n.value);
    case Op::variable: return "t";
    case Op::add: return "(" + to_string(n.lhs) + " + " + to_string(n.rhs) + ")";
    case Op::sub: return "(" + to_string(n.lhs) + " - " + to_string(n.rhs) + ")";
    case Op::mul: return "(" + to_string(n.lhs) + " * " + to_string(n.rhs) + ")";
    case Op::div: return "(" + to_string(n.lhs) + " / " + to_string(n.rhs) + ")";
    case Op::pow: return "(" + to_string(n.lhs) + "^" + to_string(n.rhs) + ")";
    case Op::neg: return "(-" + to_string(n.lhs) + ")";
    default: return std::string(function_name(n.op)) + "(" + to_string(n.lhs) + ")";
  }
}

std::string Expression::tree() const { return tree(root()); }

std::string Expression::tree(std::uint32_t index) const {
  const Node& n = nodes_[index];
  switch (n.op) {
    case Op::constant: return format_constant(n.value);
    case Op::variable: return "Var t";
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
    case Op::pow:
      return std::string(op_name(n.op)) + "(" + tree(n.lhs) + ", " + tree(n.rhs) + ")";
    default: return std::string(op_name(n.op)) + "(" + tree(n.lhs) + ")";
  }
}

}  // namespace warpiso
