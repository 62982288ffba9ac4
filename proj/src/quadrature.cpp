#include "fbvp/quadrature.hpp"

#include <stdexcept>

namespace fbvp {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

KernelWeights::KernelWeights(std::size_t n, int power, double spacing) : n_(n), power_(power), w_(n * n, 0.0) {
  if (n < 2) throw std::invalid_argument("kernel weights need at least 2 nodes");
  if (power < 0 || power > 3) throw std::invalid_argument("kernel power must be in 0..3");
  const std::size_t last = n - 1;
  const double norm = factorial(power);
  for (std::size_t m = 0; m < last; ++m) {
    for (std::size_t l = m; l <= last; ++l) {
      // (t_m - t_l)^k / k!, with t_m - t_l = -(l - m) h.
      const double d = -static_cast<double>(l - m) * spacing;
      double kernel = 1.0;
      for (int p = 0; p < power; ++p) kernel *= d;
      kernel /= norm;
      const double end_factor = (l == m || l == last) ? 0.5 : 1.0;
      // Orientation: the integral runs from t_N down to t_m.
      w_[m * n_ + l] = -spacing * end_factor * kernel;
    }
  }
}

void KernelWeights::apply(std::span<const double> f, std::span<double> out) const {
  for (std::size_t m = 0; m < n_; ++m) {
    const double* row = w_.data() + m * n_;
    double s = 0.0;
    for (std::size_t l = m; l < n_; ++l) s += row[l] * f[l];
    out[m] = s;
  }
}

std::vector<double> weighted_cumulative_integral(std::span<const double> f, int power, double spacing) {
  KernelWeights w(f.size(), power, spacing);
  std::vector<double> out(f.size());
  w.apply(f, out);
  return out;
}

std::vector<double> integrate_shifted_polynomial(std::span<const double> p, int power) {
  // int_0^T (T - s)^k / k! s^q ds = q! T^{q+k+1} / (q+k+1)!
  std::vector<double> out(p.size() + power + 1, 0.0);
  for (std::size_t q = 0; q < p.size(); ++q) {
    const int deg = static_cast<int>(q) + power + 1;
    out[deg] = p[q] * factorial(static_cast<int>(q)) / factorial(deg);
  }
  return out;
}

double evaluate_shifted_polynomial(std::span<const double> c, double t, double anchor) {
  const double s = t - anchor;
  double r = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * s + c[k];
  return r;
}

std::vector<double> edge_kernel_integral(const EdgeFunction& f, std::span<const double> nodes, expr::Var axis,
                                         double fixed, int power) {
  const double anchor = nodes.back();
  if (f.is_expression()) {
    if (auto poly = expr::as_polynomial(f.expression(), axis, anchor)) {
      const auto c = integrate_shifted_polynomial(*poly, power);
      std::vector<double> out(nodes.size());
      for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = evaluate_shifted_polynomial(c, nodes[k], anchor);
      return out;
    }
  }
  const double spacing = nodes[1] - nodes[0];
  return weighted_cumulative_integral(f.at_nodes(nodes, axis, fixed), power, spacing);
}

}  // namespace fbvp
