#include "fbvp/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace fbvp {

std::vector<double> EdgeFunction::at_nodes(std::span<const double> nodes, expr::Var axis, double fixed) const {
  if (is_expression()) return expr::sample_along(expression(), nodes, axis, fixed);
  const auto& v = samples().values;
  if (v.size() != nodes.size()) {
    throw std::invalid_argument("sampled edge has " + std::to_string(v.size()) + " values but the grid has " +
                                std::to_string(nodes.size()) + " nodes");
  }
  return v;
}

std::string to_string(CoefficientClass c) {
  switch (c) {
    case CoefficientClass::lp:
      return "L_p";
    case CoefficientClass::linf_x_lp_y:
      return "L^{x,y}_{inf,p}";
    case CoefficientClass::lp_x_linf_y:
      return "L^{x,y}_{p,inf}";
  }
  return "?";
}

std::string index_key(DerivIndex idx) { return std::to_string(idx.i) + "," + std::to_string(idx.j); }

bool is_coefficient_index(DerivIndex idx) {
  return idx.i >= 0 && idx.i <= kOrderX && idx.j >= 0 && idx.j <= kOrderY && !(idx.i == kOrderX && idx.j == kOrderY);
}

const std::vector<DerivIndex>& all_derivative_indices() {
  static const std::vector<DerivIndex> indices = [] {
    std::vector<DerivIndex> out;
    for (int i = 0; i <= kOrderX; ++i) {
      for (int j = 0; j <= kOrderY; ++j) {
        if (i == kOrderX && j == kOrderY) continue;
        out.push_back({i, j});
      }
    }
    out.push_back({kOrderX, kOrderY});
    return out;
  }();
  return indices;
}

ValidationReport validate_spec(const ProblemSpec& spec) {
  ValidationReport report;
  if (!(spec.h1 > 0.0) || !std::isfinite(spec.h1)) report.violations.push_back("h1 must be positive and finite");
  if (!(spec.h2 > 0.0) || !std::isfinite(spec.h2)) report.violations.push_back("h2 must be positive and finite");
  if (!(spec.p >= 1.0)) report.violations.push_back("p must be >= 1 or inf");

  for (const auto& [idx, coeff] : spec.coeffs) {
    if (idx.i == kOrderX && idx.j == kOrderY) {
      report.violations.push_back("coefficient (4,2): principal coefficient is fixed at 1");
      continue;
    }
    if (!is_coefficient_index(idx)) {
      report.violations.push_back("coefficient (" + index_key(idx) + ") is out of range (need 0<=i<=4, 0<=j<=2)");
      continue;
    }
    if (idx.i == kOrderX) {
      report.classes[idx] = CoefficientClass::linf_x_lp_y;
    } else if (idx.j == kOrderY) {
      report.classes[idx] = CoefficientClass::lp_x_linf_y;
    } else {
      report.classes[idx] = CoefficientClass::lp;
    }
  }
  return report;
}

void require_valid(const ProblemSpec& spec) {
  const auto report = validate_spec(spec);
  if (report.ok()) return;
  std::string msg = "invalid problem:";
  for (const auto& v : report.violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

std::vector<std::string> validate_classical(const ClassicalData& cd) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < cd.phi.size(); ++k) {
    if (expr::depends_on(cd.phi[k], expr::Var::x)) out.push_back("phi" + std::to_string(k + 1) + " must not depend on x");
  }
  for (std::size_t k = 0; k < cd.psi.size(); ++k) {
    if (expr::depends_on(cd.psi[k], expr::Var::y)) out.push_back("psi" + std::to_string(k + 1) + " must not depend on y");
  }
  return out;
}

std::vector<std::string> validate_nonclassical(const NonClassicalData& nc, const Grid* grid) {
  std::vector<std::string> out;
  for (const auto& row : nc.corner) {
    for (double z : row) {
      if (!std::isfinite(z)) out.push_back("corner values must be finite");
    }
  }
  auto check = [&](const EdgeFunction& f, const std::string& name, expr::Var axis) {
    const expr::Var other = axis == expr::Var::x ? expr::Var::y : expr::Var::x;
    if (f.is_expression() && expr::depends_on(f.expression(), other)) {
      out.push_back(name + " must depend on " + (axis == expr::Var::x ? "x" : "y") + " only");
      return;
    }
    if (grid == nullptr) return;
    const auto nodes = axis == expr::Var::x ? grid->xs() : grid->ys();
    const double fixed = axis == expr::Var::x ? grid->h2() : grid->h1();
    try {
      for (double v : f.at_nodes(nodes, axis, fixed)) {
        if (!std::isfinite(v)) {
          out.push_back(name + " is not finite at every node");
          break;
        }
      }
    } catch (const std::exception& e) {
      out.push_back(name + ": " + e.what());
    }
  };
  for (int j = 0; j < 2; ++j) check(nc.x_edge[j], "Z4" + std::to_string(j), expr::Var::x);
  for (int i = 0; i < 4; ++i) check(nc.y_edge[i], "Z" + std::to_string(i) + "2", expr::Var::y);
  return out;
}

}  // namespace fbvp
