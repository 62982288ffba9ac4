#include <algorithm>

#include "fbvp/expr.hpp"

namespace fbvp::expr {

namespace {

using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b, double sign) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += sign * b[k];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
}

std::optional<Poly> to_poly(const Expression& e, Var v, double anchor) {
  const Var other = v == Var::x ? Var::y : Var::x;
  if (depends_on(e, other)) return std::nullopt;
  if (!depends_on(e, v)) return Poly{evaluate(e, anchor, anchor)};

  switch (e.op()) {
    case Op::var_x:
    case Op::var_y:
      // v = anchor + s
      return Poly{anchor, 1.0};
    case Op::add:
    case Op::sub: {
      auto a = to_poly(e.lhs(), v, anchor);
      auto b = to_poly(e.rhs(), v, anchor);
      if (!a || !b) return std::nullopt;
      Poly r = poly_add(*a, *b, e.op() == Op::add ? 1.0 : -1.0);
      trim(r);
      return r;
    }
    case Op::mul: {
      auto a = to_poly(e.lhs(), v, anchor);
      auto b = to_poly(e.rhs(), v, anchor);
      if (!a || !b) return std::nullopt;
      Poly r = poly_mul(*a, *b);
      trim(r);
      return r;
    }
    case Op::div: {
      auto a = to_poly(e.lhs(), v, anchor);
      auto b = to_poly(e.rhs(), v, anchor);
      if (!a || !b || b->size() != 1 || (*b)[0] == 0.0) return std::nullopt;
      for (double& c : *a) c /= (*b)[0];
      return a;
    }
    case Op::neg: {
      auto a = to_poly(e.arg(), v, anchor);
      if (!a) return std::nullopt;
      for (double& c : *a) c = -c;
      return a;
    }
    case Op::pow: {
      auto a = to_poly(e.arg(), v, anchor);
      if (!a) return std::nullopt;
      Poly r{1.0};
      for (int k = 0; k < e.exponent(); ++k) r = poly_mul(r, *a);
      trim(r);
      return r;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<double>> as_polynomial(const Expression& e, Var v, double anchor) {
  try {
    return to_poly(e, v, anchor);
  } catch (const EvaluationError&) {
    return std::nullopt;
  }
}

Expression polynomial_expression(std::span<const double> coeffs, Var v, double anchor) {
  const Expression shifted = sub(Expression::variable(v), Expression::number(anchor));
  Expression out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out = add(out, mul(Expression::number(coeffs[k]), pow(shifted, static_cast<int>(k))));
  }
  return out;
}

}  // namespace fbvp::expr
