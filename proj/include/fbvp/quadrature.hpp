#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fbvp/domain.hpp"

namespace fbvp {

// Product-trapezoid weights for the oriented Volterra integral
//
//   g(t_m) = int_{t_N}^{t_m} (t_m - s)^k / k! f(s) ds,   m = 0..N,
//
// on a uniform partition t_0 < ... < t_N whose last node is the anchor. The
// kernel is evaluated exactly at the nodes and the product is integrated by
// the composite trapezoid rule. Row m only touches f at nodes m..N, and
// g(t_N) = 0.
class KernelWeights {
public:
  KernelWeights(std::size_t n, int power, double spacing);

  std::size_t size() const { return n_; }
  int power() const { return power_; }

  // Weight of f(t_l) in g(t_m); zero unless m <= l.
  double operator()(std::size_t m, std::size_t l) const { return w_[m * n_ + l]; }

  // out[m] = sum_{l >= m} w(m,l) f[l].
  void apply(std::span<const double> f, std::span<double> out) const;

private:
  std::size_t n_;
  int power_;
  std::vector<double> w_;
};

// Cumulative weighted integral of node values f with kernel power k in 0..3,
// anchored at the last node.
std::vector<double> weighted_cumulative_integral(std::span<const double> f, int power, double spacing);

// Oriented kernel integral of an edge datum:
//   g(t) = int_{anchor}^{t} (t - s)^k / k! f(s) ds
// at each node. Exact (closed-form antiderivative) when f is a polynomial
// expression, product trapezoid otherwise. `nodes` must be the uniform
// partition ending at `anchor`; `fixed` binds the other variable.
std::vector<double> edge_kernel_integral(const EdgeFunction& f, std::span<const double> nodes, expr::Var axis,
                                         double fixed, int power);

// Coefficients of t -> int_{anchor}^{t} (t - s)^k / k! p(s) ds in powers of
// (t - anchor), for p given in powers of (s - anchor).
std::vector<double> integrate_shifted_polynomial(std::span<const double> p, int power);

// Horner evaluation of sum_k c_k (t - anchor)^k.
double evaluate_shifted_polynomial(std::span<const double> c, double t, double anchor);

double factorial(int n);

}  // namespace fbvp
