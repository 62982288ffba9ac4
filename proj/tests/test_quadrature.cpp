#include <doctest.h>

#include <cmath>
#include <random>

#include "fbvp/quadrature.hpp"
#include "support.hpp"

using namespace fbvp;

namespace {

std::vector<double> nodes(double extent, std::size_t n) {
  const Grid g(extent, 1, n, 3);
  return {g.xs().begin(), g.xs().end()};
}

}  // namespace

TEST_CASE("constant integrand, power 0: g(x) = x - 1 exactly") {
  const auto t = nodes(1.0, 17);
  const std::vector<double> ones(t.size(), 1.0);
  const auto g = weighted_cumulative_integral(ones, 0, t[1] - t[0]);
  for (std::size_t m = 0; m < t.size(); ++m) CHECK(g[m] == doctest::Approx(t[m] - 1.0).epsilon(1e-15));
  CHECK(g.back() == 0.0);
}

TEST_CASE("constant integrand, power 3: second-order convergence to (x-1)^4/24") {
  double prev_err = 0.0;
  for (std::size_t n : {17, 33, 65}) {
    const auto t = nodes(1.0, n);
    const std::vector<double> ones(n, 1.0);
    const auto g = weighted_cumulative_integral(ones, 3, t[1] - t[0]);
    double err = 0.0;
    for (std::size_t m = 0; m < n; ++m) err = std::max(err, std::abs(g[m] - std::pow(t[m] - 1.0, 4) / 24.0));
    if (prev_err > 0.0) CHECK(std::log2(prev_err / err) == doctest::Approx(2.0).epsilon(0.05));
    prev_err = err;
  }
}

TEST_CASE("f(t) = t, power 1: oriented integral gives g(0) = 1/3") {
  // int_1^0 (0 - t) t dt = 1/3
  double prev_err = 0.0;
  for (std::size_t n : {33, 65, 129}) {
    const auto t = nodes(1.0, n);
    const auto g = weighted_cumulative_integral(t, 1, t[1] - t[0]);
    const double err = std::abs(g[0] - 1.0 / 3.0);
    CHECK(err < 1e-3);
    if (prev_err > 0.0) CHECK(std::log2(prev_err / err) == doctest::Approx(2.0).epsilon(0.05));
    prev_err = err;
  }
}

TEST_CASE("kernel weights are anchored and causal") {
  const KernelWeights w(9, 2, 0.125);
  for (std::size_t l = 0; l < 9; ++l) CHECK(w(8, l) == 0.0);
  for (std::size_t m = 0; m < 9; ++m) {
    for (std::size_t l = 0; l < m; ++l) CHECK(w(m, l) == 0.0);
  }
  CHECK_THROWS_AS(KernelWeights(9, 4, 0.1), std::invalid_argument);

  // Changing f below node m leaves g at m and above bit-identical.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> f(9);
  for (double& v : f) v = u(rng);
  auto g1 = weighted_cumulative_integral(f, 3, 0.125);
  f[0] += 10.0;
  f[1] -= 3.0;
  auto g2 = weighted_cumulative_integral(f, 3, 0.125);
  for (std::size_t m = 2; m < 9; ++m) CHECK(g1[m] == g2[m]);
}

TEST_CASE("exact polynomial kernel integrals match an independent quadrature") {
  // int_{a}^{t} (t-s)^k/k! p(s) ds with p(s) = 2 - s + 3 s^3, a = 0.8
  const auto poly = expr::parse("2 - x + 3*x^3");
  const double anchor = 0.8;
  const auto t = nodes(anchor, 9);
  for (int k = 0; k <= 3; ++k) {
    const auto g = edge_kernel_integral(poly, t, expr::Var::x, 0.0, k);
    for (std::size_t m = 0; m < t.size(); ++m) {
      auto integrand = [&](double s) {
        return std::pow(t[m] - s, k) / factorial(k) * expr::evaluate(poly, s, 0.0);
      };
      CHECK(std::abs(g[m] - testing::simpson(integrand, anchor, t[m])) < 1e-12);
    }
  }
}

TEST_CASE("non-polynomial edges fall back to the product trapezoid") {
  const auto t = nodes(1.0, 33);
  const EdgeFunction f = expr::parse("sin(x)");
  const auto g = edge_kernel_integral(f, t, expr::Var::x, 0.0, 1);
  const auto direct = weighted_cumulative_integral(expr::sample_along(f.expression(), t, expr::Var::x, 0.0), 1,
                                                   t[1] - t[0]);
  CHECK(g == direct);

  const EdgeFunction sampled = SampledFunction{std::vector<double>(t.size(), 1.0)};
  const auto gs = edge_kernel_integral(sampled, t, expr::Var::x, 0.0, 0);
  CHECK(gs[0] == doctest::Approx(-1.0));
}

TEST_CASE("shifted polynomial helpers") {
  // p = 1: int_0^T (T-s)^3/6 ds = T^4/24
  const std::vector<double> one{1.0};
  const auto c = integrate_shifted_polynomial(one, 3);
  REQUIRE(c.size() == 5);
  CHECK(c[4] == doctest::Approx(1.0 / 24.0));
  CHECK(evaluate_shifted_polynomial(c, 0.5, 1.0) == doctest::Approx(std::pow(-0.5, 4) / 24.0));
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(4) == 24.0);
}
