#pragma once

// Picard solver for the non-classical problem. With v = D_x^4 D_y^2 u the
// equation becomes the second-kind Volterra equation
//
//   v + L(v) = rhs,   L(v) = sum_{(i,j) != (4,2)} a_ij * R_ij(v),
//
// where R_ij is the Taylor reconstruction of D_x^i D_y^j u anchored at
// (h1,h2). Every R_ij(v)(x,y) depends on v only over [x,h1] x [y,h2].

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "fbvp/domain.hpp"
#include "fbvp/taylor.hpp"

namespace fbvp {

// The diagnostic norm exponent is taken from ProblemSpec::p.
struct SolverConfig {
  double tol = 1e-12;           // sup-norm threshold on the Picard update
  std::size_t max_iter = 200;
};

class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, SolutionField partial);
  const SolutionField& partial() const { return partial_; }
  const std::vector<double>& update_history() const { return partial_.update_history; }

private:
  SolutionField partial_;
};

class Divergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The lower-order part L of the operator with coefficients sampled on the
// grid and all kernel weights precomputed.
class LowerOrderOperator {
public:
  LowerOrderOperator(const ProblemSpec& spec, const NonClassicalData& nc, const Grid& grid);

  const Reconstructor& reconstructor() const { return rec_; }
  const std::map<DerivIndex, GridFunction>& coefficients() const { return coeffs_; }

  GridFunction apply(const GridFunction& v) const;

  // All 15 reconstructed fields for a given v.
  std::map<DerivIndex, GridFunction> reconstruct_all(const GridFunction& v) const;

private:
  Reconstructor rec_;
  std::map<DerivIndex, GridFunction> coeffs_;
};

GridFunction apply_operator(const ProblemSpec& spec, const GridFunction& v, const NonClassicalData& nc,
                            const Grid& grid);

// v^0 = 0, v^{k+1} = rhs - L(v^k) until sup|v^{k+1} - v^k| < tol. Throws
// NonConvergence (carrying the last iterate) when max_iter is exhausted and
// Divergence if a non-finite value appears.
SolutionField picard_solve(const ProblemSpec& spec, const NonClassicalData& nc, const Grid& grid,
                           const SolverConfig& cfg);

// Discrete norm of v + L(v) - rhs over interior nodes: max norm for p = inf,
// otherwise (hx hy sum |r|^p)^(1/p).
double residual_norm(const ProblemSpec& spec, const SolutionField& sol, const Grid& grid);

double interior_norm(const GridFunction& f, double p);

}  // namespace fbvp
