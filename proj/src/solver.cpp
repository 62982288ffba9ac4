#include "fbvp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace fbvp {

NonConvergence::NonConvergence(const std::string& what, SolutionField partial)
    : std::runtime_error(what), partial_(std::move(partial)) {}

LowerOrderOperator::LowerOrderOperator(const ProblemSpec& spec, const NonClassicalData& nc, const Grid& grid)
    : rec_(nc, grid) {
  require_valid(spec);
  if (grid.h1() != spec.h1 || grid.h2() != spec.h2) throw std::invalid_argument("grid extents do not match the problem");
  for (const auto& [idx, a] : spec.coeffs) coeffs_.emplace(idx, expr::sample(a, grid));
}

GridFunction LowerOrderOperator::apply(const GridFunction& v) const {
  const Grid& grid = rec_.grid();
  GridFunction out(grid);
  if (coeffs_.empty()) return out;

  // x-passes by kernel power (4 = no pass), then y-passes on top of them.
  std::array<std::optional<GridFunction>, 5> xpass;
  std::array<std::array<std::optional<GridFunction>, 3>, 5> xypass;
  auto x_of = [&](int i) -> const GridFunction& {
    if (i == kOrderX) return v;
    auto& slot = xpass[i];
    if (!slot) slot = rec_.integrate_x(v, kOrderX - 1 - i);
    return *slot;
  };
  auto xy_of = [&](int i, int j) -> const GridFunction& {
    if (j == kOrderY) return x_of(i);
    auto& slot = xypass[i][j];
    if (!slot) slot = rec_.integrate_y(x_of(i), kOrderY - 1 - j);
    return *slot;
  };

  auto dst = out.values();
  for (const auto& [idx, a] : coeffs_) {
    const auto vol = xy_of(idx.i, idx.j).values();
    const auto aff = rec_.affine(idx).values();
    const auto coef = a.values();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += coef[k] * (aff[k] + vol[k]);
  }
  return out;
}

std::map<DerivIndex, GridFunction> LowerOrderOperator::reconstruct_all(const GridFunction& v) const {
  std::map<DerivIndex, GridFunction> out;
  for (const DerivIndex idx : all_derivative_indices()) out.emplace(idx, rec_.reconstruct(idx, v));
  return out;
}

GridFunction apply_operator(const ProblemSpec& spec, const GridFunction& v, const NonClassicalData& nc,
                            const Grid& grid) {
  return LowerOrderOperator(spec, nc, grid).apply(v);
}

SolutionField picard_solve(const ProblemSpec& spec, const NonClassicalData& nc, const Grid& grid,
                           const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

  const LowerOrderOperator op(spec, nc, grid);
  const GridFunction rhs = expr::sample(spec.rhs, grid);

  SolutionField sol;
  GridFunction v(grid);
  bool converged = false;
  for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
    GridFunction next = rhs - op.apply(v);
    if (!next.all_finite()) {
      throw Divergence("Picard iterate became non-finite at iteration " + std::to_string(k));
    }
    const double update = max_abs_difference(next, v);
    v = std::move(next);
    sol.iterations = k;
    sol.final_update = update;
    sol.update_history.push_back(update);
    if (update < cfg.tol) {
      converged = true;
      break;
    }
  }

  sol.derivs = op.reconstruct_all(v);
  if (!converged) {
    std::ostringstream msg;
    msg << "Picard iteration did not converge in " << cfg.max_iter << " iterations (last update "
        << expr::format_number(sol.final_update) << ", tol " << expr::format_number(cfg.tol) << ")";
    throw NonConvergence(msg.str(), std::move(sol));
  }
  return sol;
}

double interior_norm(const GridFunction& f, double p) {
  const Grid& g = f.grid();
  double acc = 0.0;
  for (std::size_t iy = 1; iy + 1 < g.ny(); ++iy) {
    for (std::size_t ix = 1; ix + 1 < g.nx(); ++ix) {
      const double a = std::abs(f(ix, iy));
      if (std::isinf(p)) {
        acc = std::max(acc, a);
      } else {
        acc += std::pow(a, p);
      }
    }
  }
  if (std::isinf(p)) return acc;
  return std::pow(g.hx() * g.hy() * acc, 1.0 / p);
}

double residual_norm(const ProblemSpec& spec, const SolutionField& sol, const Grid& grid) {
  require_valid(spec);
  GridFunction r = sol.v() - expr::sample(spec.rhs, grid);
  for (const auto& [idx, a] : spec.coeffs) {
    const GridFunction coef = expr::sample(a, grid);
    const auto field = sol.derivs.at(idx).values();
    auto dst = r.values();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += coef.values()[k] * field[k];
  }
  return interior_norm(r, spec.p);
}

}  // namespace fbvp
