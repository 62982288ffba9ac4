#include "fbvp/mms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbvp/convert.hpp"

namespace fbvp {

using expr::Var;

namespace {

Expression derive(const Expression& e, Var v, int order) {
  Expression d = e;
  for (int k = 0; k < order; ++k) d = expr::differentiate(d, v, 1);
  return d;
}

}  // namespace

ManufacturedProblem manufacture(const Expression& u_star, const ProblemSpec& base_spec) {
  require_valid(base_spec);
  const double h1 = base_spec.h1;
  const double h2 = base_spec.h2;

  ManufacturedProblem mp;
  mp.u_star = u_star;
  mp.spec = base_spec;
  try {
    // x derivatives first, then y.
    std::map<DerivIndex, Expression> d;
    for (const DerivIndex idx : all_derivative_indices()) d[idx] = expr::mixed_derivative(u_star, idx.i, idx.j);

    Expression rhs = d.at({kOrderX, kOrderY});
    for (const auto& [idx, a] : base_spec.coeffs) rhs = expr::add(rhs, expr::mul(a, d.at(idx)));
    mp.spec.rhs = rhs;

    for (int i = 0; i < 4; ++i) {
      mp.cd.phi[i] = expr::substitute(d.at({i, 0}), Var::x, h1);
      for (int j = 0; j < 2; ++j) mp.nc.corner[i][j] = expr::evaluate(d.at({i, j}), h1, h2);
      mp.nc.y_edge[i] = expr::substitute(d.at({i, 2}), Var::x, h1);
    }
    for (int j = 0; j < 2; ++j) {
      const Expression dy = derive(u_star, Var::y, j);
      mp.cd.psi[j] = expr::substitute(dy, Var::y, h2);
      // y derivatives first here, matching how the x-edge is read off psi.
      mp.nc.x_edge[j] = expr::substitute(derive(dy, Var::x, kOrderX), Var::y, h2);
    }
  } catch (const expr::UnsupportedOperation& err) {
    throw UnsupportedData(std::string("cannot manufacture from u*: ") + err.what());
  }
  return mp;
}

std::vector<StudyRow> convergence_study(const Expression& u_star, const ProblemSpec& base_spec,
                                        const std::vector<std::size_t>& grids, const SolverConfig& cfg,
                                        const StudyOptions& opts) {
  if (grids.empty()) throw std::invalid_argument("convergence study needs at least one grid");
  for (std::size_t k = 0; k < grids.size(); ++k) {
    const std::size_t n = grids[k];
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("grid node counts must be odd and >= 3");
    if (k > 0 && (grids[k] <= grids[k - 1] || (grids[k] - 1) % (grids[k - 1] - 1) != 0)) {
      throw std::invalid_argument("grid node counts must increase and nest (e.g. 17, 33, 65)");
    }
  }

  const ManufacturedProblem mp = manufacture(u_star, base_spec);
  std::map<DerivIndex, Expression> exact;
  if (opts.all_derivatives) {
    for (const DerivIndex idx : all_derivative_indices()) exact[idx] = expr::mixed_derivative(u_star, idx.i, idx.j);
  } else {
    exact[{0, 0}] = u_star;
  }

  std::vector<StudyRow> rows;
  for (const std::size_t n : grids) {
    const Grid grid(base_spec.h1, base_spec.h2, n, n);
    SolutionField sol;
    try {
      sol = picard_solve(mp.spec, mp.nc, grid, cfg);
    } catch (const NonConvergence& err) {
      throw NonConvergence(std::string(err.what()) + " [grid " + std::to_string(n) + "x" + std::to_string(n) + "]",
                           err.partial());
    } catch (const Divergence& err) {
      throw Divergence(std::string(err.what()) + " [grid " + std::to_string(n) + "x" + std::to_string(n) + "]");
    }

    StudyRow row;
    row.h = std::max(grid.hx(), grid.hy());
    row.nodes_x = grid.nx();
    row.nodes_y = grid.ny();
    row.iterations = sol.iterations;
    for (const auto& [idx, e] : exact) {
      row.max_err = std::max(row.max_err, max_abs_difference(sol.derivs.at(idx), expr::sample(e, grid)));
    }
    if (!rows.empty()) {
      const StudyRow& prev = rows.back();
      if (prev.max_err > kRoundingFloor && row.max_err > kRoundingFloor) {
        row.order = std::log(prev.max_err / row.max_err) / std::log(prev.h / row.h);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string study_csv(const std::vector<StudyRow>& rows) {
  std::ostringstream os;
  os << "h,nodes_x,nodes_y,max_err,order\n";
  for (const auto& r : rows) {
    os << expr::format_number(r.h) << ',' << r.nodes_x << ',' << r.nodes_y << ',' << expr::format_number(r.max_err)
       << ',';
    if (r.order) os << expr::format_number(*r.order);
    os << '\n';
  }
  return os.str();
}

}  // namespace fbvp
