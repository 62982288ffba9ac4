#include "fbvp/convert.hpp"

#include <algorithm>
#include <cmath>

#include "fbvp/quadrature.hpp"

namespace fbvp {

using expr::Var;

namespace {

Expression nth_derivative(const Expression& e, Var v, int order) {
  if (order == 0) return e;
  try {
    return expr::differentiate(e, v, order);
  } catch (const expr::UnsupportedOperation& err) {
    throw UnsupportedData(err.what());
  }
}

void require_classical(const ClassicalData& cd) {
  const auto problems = validate_classical(cd);
  if (problems.empty()) return;
  std::string msg = "invalid classical data:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw std::invalid_argument(msg);
}

std::string primes(int n) { return std::string(static_cast<std::size_t>(n), '\''); }

}  // namespace

std::array<double, 8> AgreementReport::residuals() const {
  std::array<double, 8> r{};
  for (std::size_t k = 0; k < terms.size(); ++k) r[k] = terms[k].residual;
  return r;
}

NonClassicalData classical_to_nonclassical(const ClassicalData& cd, const ProblemSpec& spec) {
  require_classical(cd);
  NonClassicalData nc;
  for (int i = 0; i < 4; ++i) {
    const Expression& phi = cd.phi[i];
    for (int j = 0; j < 2; ++j) nc.corner[i][j] = expr::evaluate(nth_derivative(phi, Var::y, j), spec.h1, spec.h2);
    nc.y_edge[i] = nth_derivative(phi, Var::y, 2);
  }
  for (int j = 0; j < 2; ++j) nc.x_edge[j] = nth_derivative(cd.psi[j], Var::x, 4);
  return nc;
}

CornerValues psi_side_corner(const ClassicalData& cd, const ProblemSpec& spec) {
  require_classical(cd);
  CornerValues out{};
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 4; ++i) out[i][j] = expr::evaluate(nth_derivative(cd.psi[j], Var::x, i), spec.h1, spec.h2);
  }
  return out;
}

AgreementReport check_agreement(const ClassicalData& cd, const ProblemSpec& spec) {
  require_classical(cd);
  AgreementReport report;
  for (int m = 0; m < 4; ++m) {
    for (int j = 0; j < 2; ++j) {
      AgreementTerm& t = report.terms[2 * m + j];
      t.lhs_label = "psi" + std::to_string(j + 1) + primes(m) + "(h1)";
      t.rhs_label = "phi" + std::to_string(m + 1) + primes(j) + "(h2)";
      t.lhs = expr::evaluate(nth_derivative(cd.psi[j], Var::x, m), spec.h1, spec.h2);
      t.rhs = expr::evaluate(nth_derivative(cd.phi[m], Var::y, j), spec.h1, spec.h2);
      t.residual = t.lhs - t.rhs;
      report.max_abs = std::max(report.max_abs, std::abs(t.residual));
    }
  }
  return report;
}

bool ReconstructedClassical::has_closed_form() const {
  auto has = [](const ClassicalTrace& t) { return t.closed_form.has_value(); };
  return std::all_of(phi.begin(), phi.end(), has) && std::all_of(psi.begin(), psi.end(), has);
}

ClassicalData ReconstructedClassical::classical() const {
  if (!has_closed_form()) {
    throw UnsupportedData("classical data has no closed form: edge data are not all polynomial expressions");
  }
  ClassicalData cd;
  for (int k = 0; k < 4; ++k) cd.phi[k] = *phi[k].closed_form;
  for (int k = 0; k < 2; ++k) cd.psi[k] = *psi[k].closed_form;
  return cd;
}

namespace {

// Builds one trace from its Taylor part (coefficients in powers of t-anchor)
// and an edge datum integrated against (t-s)^power/power!.
ClassicalTrace build_trace(std::vector<double> taylor, const EdgeFunction& edge, int power, Var axis, double anchor,
                           double fixed, const std::optional<Grid>& grid) {
  ClassicalTrace trace;
  std::optional<std::vector<double>> poly;
  if (edge.is_expression()) poly = expr::as_polynomial(edge.expression(), axis, anchor);

  if (poly) {
    auto coeffs = integrate_shifted_polynomial(*poly, power);
    if (coeffs.size() < taylor.size()) coeffs.resize(taylor.size(), 0.0);
    for (std::size_t k = 0; k < taylor.size(); ++k) coeffs[k] += taylor[k];
    trace.closed_form = expr::polynomial_expression(coeffs, axis, anchor);
    if (grid) {
      const auto nodes = axis == Var::x ? grid->xs() : grid->ys();
      trace.nodes.assign(nodes.begin(), nodes.end());
      trace.values.resize(nodes.size());
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        trace.values[k] = evaluate_shifted_polynomial(coeffs, nodes[k], anchor);
      }
    }
    return trace;
  }

  if (!grid) throw UnsupportedData("non-polynomial edge data need a grid for quadrature");
  const auto nodes = axis == Var::x ? grid->xs() : grid->ys();
  trace.nodes.assign(nodes.begin(), nodes.end());
  trace.values = edge_kernel_integral(edge, nodes, axis, fixed, power);
  for (std::size_t k = 0; k < nodes.size(); ++k) trace.values[k] += evaluate_shifted_polynomial(taylor, nodes[k], anchor);
  return trace;
}

}  // namespace

ReconstructedClassical nonclassical_to_classical(const NonClassicalData& nc, const ProblemSpec& spec,
                                                 const std::optional<Grid>& grid) {
  if (grid && (grid->h1() != spec.h1 || grid->h2() != spec.h2)) {
    throw std::invalid_argument("grid extents do not match the problem");
  }
  if (auto problems = validate_nonclassical(nc, grid ? &*grid : nullptr); !problems.empty()) {
    throw std::invalid_argument("invalid non-classical data: " + problems.front());
  }
  ReconstructedClassical out;
  for (int i = 0; i < 4; ++i) {
    out.phi[i] = build_trace({nc.corner[i][0], nc.corner[i][1]}, nc.y_edge[i], 1, Var::y, spec.h2, spec.h1, grid);
  }
  for (int j = 0; j < 2; ++j) {
    std::vector<double> taylor(4);
    for (int m = 0; m < 4; ++m) taylor[m] = nc.corner[m][j] / factorial(m);
    out.psi[j] = build_trace(std::move(taylor), nc.x_edge[j], 3, Var::x, spec.h1, spec.h2, grid);
  }
  return out;
}

}  // namespace fbvp
