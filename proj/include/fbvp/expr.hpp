#pragma once

// Expression language for coefficients and boundary data.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' INT)*
//   atom  := NUMBER | 'x' | 'y' | FUNC '(' expr ')' | '(' expr ')'
//   FUNC  := 'sin' | 'cos' | 'exp' | 'step'
//
// '^' binds tighter than unary minus, so "-x^2" is -(x^2). Exponents are
// non-negative integer literals. step(t) = 0 for t < 0 and 1 for t >= 0.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fbvp/grid.hpp"

namespace fbvp::expr {

enum class Var { x, y };

enum class Op { number, var_x, var_y, add, sub, mul, div, pow, neg, sin, cos, exp, step };

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class EvaluationError : public std::runtime_error {
public:
  EvaluationError(const std::string& what, double x, double y);
  double x() const { return x_; }
  double y() const { return y_; }

private:
  double x_;
  double y_;
};

class UnsupportedOperation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Immutable AST handle. Copies share structure.
class Expression {
public:
  // The literal 0.
  Expression();

  static Expression number(double value);
  static Expression variable(Var v);
  // Raw node constructors; no simplification.
  static Expression binary(Op op, Expression lhs, Expression rhs);
  static Expression unary(Op op, Expression arg);
  static Expression power(Expression base, int exponent);

  Op op() const;
  double value() const;  // number nodes only
  int exponent() const;  // pow nodes only
  const Expression& lhs() const;
  const Expression& rhs() const;
  const Expression& arg() const { return lhs(); }

  bool is_number() const { return op() == Op::number; }
  bool is_number(double v) const { return is_number() && value() == v; }

  friend bool operator==(const Expression& a, const Expression& b);

private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Simplifying builders: drop literal zero terms and literal one factors and
// fold arithmetic on two literals. Used by differentiate and by code that
// assembles expressions programmatically.
Expression add(const Expression& a, const Expression& b);
Expression sub(const Expression& a, const Expression& b);
Expression mul(const Expression& a, const Expression& b);
Expression div(const Expression& a, const Expression& b);
Expression neg(const Expression& a);
Expression pow(const Expression& a, int n);
Expression sin(const Expression& a);
Expression cos(const Expression& a);
Expression exp(const Expression& a);
Expression step(const Expression& a);

inline Expression operator+(const Expression& a, const Expression& b) { return add(a, b); }
inline Expression operator-(const Expression& a, const Expression& b) { return sub(a, b); }
inline Expression operator*(const Expression& a, const Expression& b) { return mul(a, b); }
inline Expression operator/(const Expression& a, const Expression& b) { return div(a, b); }
inline Expression operator-(const Expression& a) { return neg(a); }

Expression parse(std::string_view src);

// Canonical text form; parse(print(e)) rebuilds e for any parsed e.
std::string print(const Expression& e);

// Shortest decimal form that reads back to the same double. Locale-free.
std::string format_number(double v);

double evaluate(const Expression& e, double x, double y);

bool depends_on(const Expression& e, Var v);

// Replace every occurrence of v by the literal value.
Expression substitute(const Expression& e, Var v, double value);

// Exact symbolic derivative of the given order (1..4).
Expression differentiate(const Expression& e, Var v, int order);

// D_x^i D_y^j e for i, j >= 0 (x derivatives taken first).
Expression mixed_derivative(const Expression& e, int i, int j);

// Values at every grid node, in GridFunction storage order.
GridFunction sample(const Expression& e, const Grid& grid);

// Values along one axis with the other variable bound to `fixed`.
std::vector<double> sample_along(const Expression& e, std::span<const double> nodes, Var axis, double fixed);

// Coefficients c_k of e = sum_k c_k (v - anchor)^k, if e is a polynomial in v
// that does not reference the other variable. Constant subexpressions (e.g.
// sin(2)) are folded.
std::optional<std::vector<double>> as_polynomial(const Expression& e, Var v, double anchor);

// Polynomial in (v - anchor) written as an expression.
Expression polynomial_expression(std::span<const double> coeffs, Var v, double anchor);

}  // namespace fbvp::expr
