#pragma once

// Manufactured solutions and grid-refinement studies.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fbvp/domain.hpp"
#include "fbvp/solver.hpp"

namespace fbvp {

struct ManufacturedProblem {
  Expression u_star;
  ProblemSpec spec;  // base spec with rhs = V_{4,2} u_star
  NonClassicalData nc;
  ClassicalData cd;
};

// Forms the right-hand side symbolically and extracts the exact boundary
// traces of u_star. Throws UnsupportedData if u_star cannot be
// differentiated (e.g. contains step of x or y).
ManufacturedProblem manufacture(const Expression& u_star, const ProblemSpec& base_spec);

struct StudyOptions {
  bool all_derivatives = false;  // measure all 15 fields instead of u only
};

struct StudyRow {
  double h = 0.0;  // max(hx, hy)
  std::size_t nodes_x = 0;
  std::size_t nodes_y = 0;
  double max_err = 0.0;
  std::optional<double> order;  // relative to the previous (coarser) row
  std::size_t iterations = 0;
};

// Errors below this are treated as exact; no order is estimated from them.
inline constexpr double kRoundingFloor = 1e-12;

// Node counts must be odd, >= 3, increasing and nested.
std::vector<StudyRow> convergence_study(const Expression& u_star, const ProblemSpec& base_spec,
                                        const std::vector<std::size_t>& grids, const SolverConfig& cfg,
                                        const StudyOptions& opts = {});

// CSV with columns h,nodes_x,nodes_y,max_err,order.
std::string study_csv(const std::vector<StudyRow>& rows);

}  // namespace fbvp
