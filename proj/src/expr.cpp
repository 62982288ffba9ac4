#include "fbvp/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

namespace fbvp::expr {

struct Expression::Node {
  Op op = Op::number;
  double value = 0.0;
  int exponent = 0;
  std::vector<Expression> children;
};

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

std::string point_message(const std::string& what, double x, double y) {
  std::ostringstream os;
  os << what << " at (x=" << format_number(x) << ", y=" << format_number(y) << ")";
  return os.str();
}

// Integer power by repeated squaring; used for both evaluation and literal
// folding so the two agree bit for bit.
double ipow(double base, int n) {
  double result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

EvaluationError::EvaluationError(const std::string& what, double x, double y)
    : std::runtime_error(point_message(what, x, y)), x_(x), y_(y) {}

Expression::Expression() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression Expression::number(double value) {
  auto n = std::make_shared<Node>();
  n->op = Op::number;
  n->value = value;
  return Expression(std::move(n));
}

Expression Expression::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->op = v == Var::x ? Op::var_x : Op::var_y;
  return Expression(std::move(n));
}

Expression Expression::binary(Op op, Expression lhs, Expression rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children = {std::move(lhs), std::move(rhs)};
  return Expression(std::move(n));
}

Expression Expression::unary(Op op, Expression arg) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children = {std::move(arg)};
  return Expression(std::move(n));
}

Expression Expression::power(Expression base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("exponent must be a non-negative integer");
  auto n = std::make_shared<Node>();
  n->op = Op::pow;
  n->exponent = exponent;
  n->children = {std::move(base)};
  return Expression(std::move(n));
}

Op Expression::op() const { return node_->op; }
double Expression::value() const { return node_->value; }
int Expression::exponent() const { return node_->exponent; }
const Expression& Expression::lhs() const { return node_->children.at(0); }
const Expression& Expression::rhs() const { return node_->children.at(1); }

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.op != nb.op) return false;
  if (na.op == Op::number) return na.value == nb.value;
  if (na.op == Op::pow && na.exponent != nb.exponent) return false;
  if (na.children.size() != nb.children.size()) return false;
  for (std::size_t k = 0; k < na.children.size(); ++k) {
    if (!(na.children[k] == nb.children[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// simplifying builders

Expression add(const Expression& a, const Expression& b) {
  if (a.is_number(0.0)) return b;
  if (b.is_number(0.0)) return a;
  if (a.is_number() && b.is_number()) return Expression::number(a.value() + b.value());
  return Expression::binary(Op::add, a, b);
}

Expression sub(const Expression& a, const Expression& b) {
  if (b.is_number(0.0)) return a;
  if (a.is_number(0.0)) return neg(b);
  if (a.is_number() && b.is_number()) return Expression::number(a.value() - b.value());
  return Expression::binary(Op::sub, a, b);
}

Expression mul(const Expression& a, const Expression& b) {
  if (a.is_number(0.0) || b.is_number(0.0)) return Expression();
  if (a.is_number(1.0)) return b;
  if (b.is_number(1.0)) return a;
  if (a.is_number() && b.is_number()) return Expression::number(a.value() * b.value());
  return Expression::binary(Op::mul, a, b);
}

Expression div(const Expression& a, const Expression& b) {
  if (b.is_number(1.0)) return a;
  if (b.is_number(0.0)) return Expression::binary(Op::div, a, b);
  if (a.is_number(0.0)) return Expression();
  if (a.is_number() && b.is_number()) return Expression::number(a.value() / b.value());
  return Expression::binary(Op::div, a, b);
}

Expression neg(const Expression& a) {
  if (a.is_number()) return Expression::number(-a.value());
  if (a.op() == Op::neg) return a.arg();
  return Expression::unary(Op::neg, a);
}

Expression pow(const Expression& a, int n) {
  if (n == 0) return Expression::number(1.0);
  if (n == 1) return a;
  if (a.is_number()) return Expression::number(ipow(a.value(), n));
  return Expression::power(a, n);
}

Expression sin(const Expression& a) { return Expression::unary(Op::sin, a); }
Expression cos(const Expression& a) { return Expression::unary(Op::cos, a); }
Expression exp(const Expression& a) { return Expression::unary(Op::exp, a); }
Expression step(const Expression& a) { return Expression::unary(Op::step, a); }

// ---------------------------------------------------------------------------
// printing

namespace {

int precedence(const Expression& e) {
  switch (e.op()) {
    case Op::add:
    case Op::sub:
      return 1;
    case Op::mul:
    case Op::div:
      return 2;
    case Op::neg:
      return 3;
    case Op::pow:
      return 4;
    case Op::number:
      return e.value() < 0.0 || std::signbit(e.value()) ? 3 : 5;
    default:
      return 5;
  }
}

void print_to(std::string& out, const Expression& e, int min_prec) {
  const bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.op()) {
    case Op::number:
      if (std::signbit(e.value())) {
        out += '-';
        out += format_number(-e.value());
      } else {
        out += format_number(e.value());
      }
      break;
    case Op::var_x:
      out += 'x';
      break;
    case Op::var_y:
      out += 'y';
      break;
    case Op::add:
    case Op::sub:
      print_to(out, e.lhs(), 1);
      out += e.op() == Op::add ? " + " : " - ";
      print_to(out, e.rhs(), 2);
      break;
    case Op::mul:
    case Op::div:
      print_to(out, e.lhs(), 2);
      out += e.op() == Op::mul ? "*" : "/";
      print_to(out, e.rhs(), 3);
      break;
    case Op::neg:
      out += '-';
      print_to(out, e.arg(), 3);
      break;
    case Op::pow:
      print_to(out, e.arg(), 4);
      out += '^';
      out += std::to_string(e.exponent());
      break;
    case Op::sin:
    case Op::cos:
    case Op::exp:
    case Op::step: {
      static constexpr std::array names{"sin", "cos", "exp", "step"};
      out += names[static_cast<int>(e.op()) - static_cast<int>(Op::sin)];
      out += '(';
      print_to(out, e.arg(), 0);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), end);
}

std::string print(const Expression& e) {
  std::string out;
  print_to(out, e, 0);
  return out;
}

// ---------------------------------------------------------------------------
// evaluation

double evaluate(const Expression& e, double x, double y) {
  switch (e.op()) {
    case Op::number:
      return e.value();
    case Op::var_x:
      return x;
    case Op::var_y:
      return y;
    case Op::add:
      return evaluate(e.lhs(), x, y) + evaluate(e.rhs(), x, y);
    case Op::sub:
      return evaluate(e.lhs(), x, y) - evaluate(e.rhs(), x, y);
    case Op::mul:
      return evaluate(e.lhs(), x, y) * evaluate(e.rhs(), x, y);
    case Op::div: {
      const double num = evaluate(e.lhs(), x, y);
      const double den = evaluate(e.rhs(), x, y);
      if (den == 0.0) throw EvaluationError("division by zero", x, y);
      return num / den;
    }
    case Op::pow:
      return ipow(evaluate(e.arg(), x, y), e.exponent());
    case Op::neg:
      return -evaluate(e.arg(), x, y);
    case Op::sin:
      return std::sin(evaluate(e.arg(), x, y));
    case Op::cos:
      return std::cos(evaluate(e.arg(), x, y));
    case Op::exp:
      return std::exp(evaluate(e.arg(), x, y));
    case Op::step:
      return evaluate(e.arg(), x, y) >= 0.0 ? 1.0 : 0.0;
  }
  throw std::logic_error("unreachable expression node");
}

bool depends_on(const Expression& e, Var v) {
  switch (e.op()) {
    case Op::number:
      return false;
    case Op::var_x:
      return v == Var::x;
    case Op::var_y:
      return v == Var::y;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
      return depends_on(e.lhs(), v) || depends_on(e.rhs(), v);
    default:
      return depends_on(e.arg(), v);
  }
}

Expression substitute(const Expression& e, Var v, double value) {
  switch (e.op()) {
    case Op::number:
      return e;
    case Op::var_x:
      return v == Var::x ? Expression::number(value) : e;
    case Op::var_y:
      return v == Var::y ? Expression::number(value) : e;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
      return Expression::binary(e.op(), substitute(e.lhs(), v, value), substitute(e.rhs(), v, value));
    case Op::pow:
      return Expression::power(substitute(e.arg(), v, value), e.exponent());
    default:
      return Expression::unary(e.op(), substitute(e.arg(), v, value));
  }
}

// ---------------------------------------------------------------------------
// differentiation

namespace {

Expression derivative(const Expression& e, Var v) {
  switch (e.op()) {
    case Op::number:
      return Expression();
    case Op::var_x:
      return Expression::number(v == Var::x ? 1.0 : 0.0);
    case Op::var_y:
      return Expression::number(v == Var::y ? 1.0 : 0.0);
    case Op::add:
      return add(derivative(e.lhs(), v), derivative(e.rhs(), v));
    case Op::sub:
      return sub(derivative(e.lhs(), v), derivative(e.rhs(), v));
    case Op::mul:
      return add(mul(derivative(e.lhs(), v), e.rhs()), mul(e.lhs(), derivative(e.rhs(), v)));
    case Op::div: {
      const Expression da = derivative(e.lhs(), v);
      const Expression db = derivative(e.rhs(), v);
      if (db.is_number(0.0)) return div(da, e.rhs());
      return div(sub(mul(da, e.rhs()), mul(e.lhs(), db)), pow(e.rhs(), 2));
    }
    case Op::pow: {
      const int n = e.exponent();
      if (n == 0) return Expression();
      return mul(mul(Expression::number(n), pow(e.arg(), n - 1)), derivative(e.arg(), v));
    }
    case Op::neg:
      return neg(derivative(e.arg(), v));
    case Op::sin:
      return mul(cos(e.arg()), derivative(e.arg(), v));
    case Op::cos:
      return mul(neg(sin(e.arg())), derivative(e.arg(), v));
    case Op::exp:
      return mul(e, derivative(e.arg(), v));
    case Op::step:
      if (depends_on(e.arg(), v)) {
        throw UnsupportedOperation("cannot differentiate step(" + print(e.arg()) + ") with respect to " +
                                   (v == Var::x ? "x" : "y"));
      }
      return Expression();
  }
  throw std::logic_error("unreachable expression node");
}

}  // namespace

Expression differentiate(const Expression& e, Var v, int order) {
  if (order < 1 || order > 4) throw std::invalid_argument("derivative order must be between 1 and 4");
  Expression d = e;
  for (int k = 0; k < order; ++k) d = derivative(d, v);
  return d;
}

Expression mixed_derivative(const Expression& e, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("derivative orders must be non-negative");
  Expression d = e;
  for (int k = 0; k < i; ++k) d = derivative(d, Var::x);
  for (int k = 0; k < j; ++k) d = derivative(d, Var::y);
  return d;
}

// ---------------------------------------------------------------------------
// sampling

GridFunction sample(const Expression& e, const Grid& grid) {
  GridFunction out(grid);
  for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      try {
        out(ix, iy) = evaluate(e, grid.x(ix), grid.y(iy));
      } catch (const EvaluationError& err) {
        throw EvaluationError(std::string(err.what()) + " [node " + std::to_string(ix) + "," + std::to_string(iy) + "]",
                              err.x(), err.y());
      }
    }
  }
  return out;
}

std::vector<double> sample_along(const Expression& e, std::span<const double> nodes, Var axis, double fixed) {
  std::vector<double> out(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double x = axis == Var::x ? nodes[k] : fixed;
    const double y = axis == Var::x ? fixed : nodes[k];
    try {
      out[k] = evaluate(e, x, y);
    } catch (const EvaluationError& err) {
      throw EvaluationError(std::string(err.what()) + " [node " + std::to_string(k) + "]", err.x(), err.y());
    }
  }
  return out;
}

}  // namespace fbvp::expr
