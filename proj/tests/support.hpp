#pragma once

// Generators and oracles shared by the unit and acceptance suites.

#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "fbvp/domain.hpp"

namespace fbvp::testing {

using expr::Expression;
using expr::Var;

inline Expression random_polynomial(std::mt19937_64& rng, Var v, int max_degree = 3) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  Expression out = Expression::number(coef(rng));
  for (int k = 1; k <= d; ++k) {
    out = Expression::binary(expr::Op::add, out,
                             Expression::binary(expr::Op::mul, Expression::number(coef(rng)),
                                                Expression::power(Expression::variable(v), k)));
  }
  return out;
}

// Corner scalars uniform in [-1,1], polynomial edges of degree <= 3 with
// coefficients in [-1,1].
inline NonClassicalData random_nonclassical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  NonClassicalData nc;
  for (auto& row : nc.corner) {
    for (double& z : row) z = coef(rng);
  }
  for (auto& e : nc.x_edge) e = random_polynomial(rng, Var::x);
  for (auto& e : nc.y_edge) e = random_polynomial(rng, Var::y);
  return nc;
}

// Random expression over x and y from the full grammar. Literals are
// non-negative (as the parser produces them), step only takes y arguments so
// the result stays differentiable in x, and divisions are by expressions
// bounded away from zero.
inline Expression random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 11);
  std::uniform_real_distribution<double> lit(0.0, 2.0);
  auto number = [&] { return Expression::number(std::round(lit(rng) * 100.0) / 100.0); };
  if (depth <= 0) {
    switch (pick(rng) % 3) {
      case 0:
        return Expression::variable(Var::x);
      case 1:
        return Expression::variable(Var::y);
      default:
        return number();
    }
  }
  const int sub = depth - 1;
  switch (pick(rng)) {
    case 0:
      return Expression::binary(expr::Op::add, random_expression(rng, sub), random_expression(rng, sub));
    case 1:
      return Expression::binary(expr::Op::sub, random_expression(rng, sub), random_expression(rng, sub));
    case 2:
    case 3:
      return Expression::binary(expr::Op::mul, random_expression(rng, sub), random_expression(rng, sub));
    case 4: {
      // 1.5 + cos(.) stays in [0.5, 2.5]
      const Expression den = Expression::binary(expr::Op::add, Expression::number(1.5),
                                                Expression::unary(expr::Op::cos, random_expression(rng, sub)));
      return Expression::binary(expr::Op::div, random_expression(rng, sub), den);
    }
    case 5:
      return Expression::power(random_expression(rng, sub), std::uniform_int_distribution<int>(0, 3)(rng));
    case 6:
      return Expression::unary(expr::Op::neg, random_expression(rng, sub));
    case 7:
      return Expression::unary(expr::Op::sin, random_expression(rng, sub));
    case 8:
      return Expression::unary(expr::Op::cos, random_expression(rng, sub));
    case 9:
      // keep exp arguments tame
      return Expression::unary(expr::Op::exp, Expression::unary(expr::Op::sin, random_expression(rng, sub)));
    case 10:
      return Expression::binary(
          expr::Op::mul, random_expression(rng, sub),
          Expression::unary(expr::Op::step, Expression::binary(expr::Op::sub, Expression::variable(Var::y), number())));
    default:
      return random_expression(rng, 0);
  }
}

// Central difference of f at t.
inline double central_difference(const std::function<double(double)>& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Composite Simpson rule on [a,b] (b may be below a), n even.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fbvp_test_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fbvp::testing
