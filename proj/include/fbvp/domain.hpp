#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fbvp/expr.hpp"
#include "fbvp/grid.hpp"

namespace fbvp {

using expr::Expression;

// Derivative order pair (i, j) for D_x^i D_y^j.
struct DerivIndex {
  int i = 0;
  int j = 0;
  auto operator<=>(const DerivIndex&) const = default;
};

inline constexpr int kOrderX = 4;
inline constexpr int kOrderY = 2;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Final-boundary value problem on G = (0,h1) x (0,h2) for
//   D_x^4 D_y^2 u + sum a_ij D_x^i D_y^j u = rhs.
// The principal coefficient is 1; absent coefficients are zero.
struct ProblemSpec {
  double h1 = 1.0;
  double h2 = 1.0;
  double p = kInfinity;  // Lebesgue exponent; only selects the diagnostic norm
  std::map<DerivIndex, Expression> coeffs;
  Expression rhs;
};

// Classical final-boundary data: phi_k(y) are u, u_x, u_xx, u_xxx on x = h1;
// psi_1(x), psi_2(x) are u and u_y on y = h2.
struct ClassicalData {
  std::array<Expression, 4> phi;
  std::array<Expression, 2> psi;
};

// Node values of a one-variable function on the uniform partition of its
// edge, endpoints included.
struct SampledFunction {
  std::vector<double> values;
};

// Edge datum given either symbolically or by node samples.
class EdgeFunction {
public:
  EdgeFunction() = default;
  EdgeFunction(Expression e) : data_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  EdgeFunction(SampledFunction s) : data_(std::move(s)) {}  // NOLINT(google-explicit-constructor)

  bool is_expression() const { return std::holds_alternative<Expression>(data_); }
  const Expression& expression() const { return std::get<Expression>(data_); }
  const SampledFunction& samples() const { return std::get<SampledFunction>(data_); }

  // Values at `nodes` along `axis`, with the other coordinate bound to
  // `fixed`. Sampled data must have one value per node.
  std::vector<double> at_nodes(std::span<const double> nodes, expr::Var axis, double fixed) const;

private:
  std::variant<Expression, SampledFunction> data_;
};

// Non-classical data: corner[i][j] = D_x^i D_y^j u(h1,h2) for i <= 3, j <= 1;
// x_edge[j] = D_x^4 D_y^j u(x,h2); y_edge[i] = D_x^i D_y^2 u(h1,y).
struct NonClassicalData {
  std::array<std::array<double, 2>, 4> corner{};
  std::array<EdgeFunction, 2> x_edge;
  std::array<EdgeFunction, 4> y_edge;
};

struct SolutionField {
  std::map<DerivIndex, GridFunction> derivs;  // all 15 pairs; (4,2) is v
  std::size_t iterations = 0;
  double final_update = 0.0;
  std::vector<double> update_history;

  const GridFunction& u() const { return derivs.at({0, 0}); }
  const GridFunction& v() const { return derivs.at({kOrderX, kOrderY}); }
};

// Regularity class the coefficient a_ij is declared to belong to. Recorded
// for reporting only.
enum class CoefficientClass { lp, linf_x_lp_y, lp_x_linf_y };

struct ValidationReport {
  std::vector<std::string> violations;
  std::map<DerivIndex, CoefficientClass> classes;

  bool ok() const { return violations.empty(); }
};

std::string to_string(CoefficientClass c);
std::string index_key(DerivIndex idx);  // "i,j"

bool is_coefficient_index(DerivIndex idx);

// Every index pair (i,j) with 0 <= i <= 4, 0 <= j <= 2, (4,2) included last.
const std::vector<DerivIndex>& all_derivative_indices();

ValidationReport validate_spec(const ProblemSpec& spec);

// Throws std::invalid_argument listing the violations if the problem is invalid.
void require_valid(const ProblemSpec& spec);

// phi must not reference x and psi must not reference y.
std::vector<std::string> validate_classical(const ClassicalData& cd);

// Edge expressions must be one-variable and finite on the grid; sampled
// edges must match the grid's node counts.
std::vector<std::string> validate_nonclassical(const NonClassicalData& nc, const Grid* grid = nullptr);

}  // namespace fbvp
