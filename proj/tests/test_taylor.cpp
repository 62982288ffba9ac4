#include <doctest.h>

#include <cmath>
#include <random>

#include "fbvp/taylor.hpp"
#include "support.hpp"

using namespace fbvp;
using expr::parse;

namespace {

GridFunction random_field(std::mt19937_64& rng, const Grid& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GridFunction f(g);
  for (double& v : f.values()) v = u(rng);
  return f;
}

double taylor_monomial(int power, double t) {
  return std::pow(t, power) / std::tgamma(power + 1.0);
}

}  // namespace

TEST_CASE("reconstruct examples") {
  const Grid g(1, 1, 9, 9);
  std::mt19937_64 rng(21);
  const GridFunction v = random_field(rng, g);

  SUBCASE("(4,2) returns v") {
    const NonClassicalData nc = testing::random_nonclassical(rng);
    CHECK(max_abs_difference(reconstruct(4, 2, v, nc, g), v) == 0.0);
  }

  SUBCASE("zero data and zero v give zero") {
    for (const DerivIndex idx : all_derivative_indices()) {
      CHECK(reconstruct(idx.i, idx.j, GridFunction(g), NonClassicalData{}, g).max_abs() == 0.0);
    }
  }

  SUBCASE("bad indices") {
    CHECK_THROWS_AS(reconstruct(5, 0, v, NonClassicalData{}, g), std::out_of_range);
    CHECK_THROWS_AS(reconstruct(-1, 0, v, NonClassicalData{}, g), std::out_of_range);
    CHECK_THROWS_AS(reconstruct(0, 3, v, NonClassicalData{}, g), std::out_of_range);
  }
}

TEST_CASE("v = 1 with zero data reconstructs (x-1)^4 (y-1)^2 / 48 to second order") {
  std::map<DerivIndex, double> prev;
  for (std::size_t n : {17, 33, 65}) {
    const Grid g(1, 1, n, n);
    const Reconstructor rec(NonClassicalData{}, g);
    const GridFunction one(g, 1.0);
    for (const DerivIndex idx : all_derivative_indices()) {
      const GridFunction d = rec.reconstruct(idx, one);
      double err = 0.0;
      for (std::size_t iy = 0; iy < n; ++iy) {
        for (std::size_t ix = 0; ix < n; ++ix) {
          const double exact = taylor_monomial(4 - idx.i, g.x(ix) - 1.0) * taylor_monomial(2 - idx.j, g.y(iy) - 1.0);
          err = std::max(err, std::abs(d(ix, iy) - exact));
        }
      }
      CAPTURE(idx.i);
      CAPTURE(idx.j);
      CHECK(err < 5e-3);
      if (prev.contains(idx) && prev[idx] > 1e-12 && err > 1e-12) {
        CHECK(std::log2(prev[idx] / err) == doctest::Approx(2.0).epsilon(0.1));
      }
      prev[idx] = err;
    }
  }
}

TEST_CASE("reconstruction matches the data on the corner and final edges") {
  std::mt19937_64 rng(22);
  const Grid g(0.8, 1.4, 13, 11);
  for (int trial = 0; trial < 10; ++trial) {
    const NonClassicalData nc = testing::random_nonclassical(rng);
    const GridFunction v = random_field(rng, g);
    const Reconstructor rec(nc, g);
    const std::size_t cx = g.nx() - 1;
    const std::size_t cy = g.ny() - 1;
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 1; ++j) CHECK(rec.reconstruct({i, j}, v)(cx, cy) == doctest::Approx(nc.corner[i][j]));
    }
    for (int j = 0; j <= 1; ++j) {
      const auto edge = nc.x_edge[j].at_nodes(g.xs(), expr::Var::x, g.h2());
      const GridFunction d = rec.reconstruct({4, j}, v);
      for (std::size_t ix = 0; ix < g.nx(); ++ix) CHECK(std::abs(d(ix, cy) - edge[ix]) <= 1e-14);
    }
    for (int i = 0; i <= 3; ++i) {
      const auto edge = nc.y_edge[i].at_nodes(g.ys(), expr::Var::y, g.h1());
      const GridFunction d = rec.reconstruct({i, 2}, v);
      for (std::size_t iy = 0; iy < g.ny(); ++iy) CHECK(std::abs(d(cx, iy) - edge[iy]) <= 1e-14);
    }
  }
}

TEST_CASE("edge traces agree with the converted classical data") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g(1, 1, 17, 17);
    const TraceConsistency tc = edge_trace_consistency(testing::random_nonclassical(rng), g);
    CHECK(tc.max_discrepancy <= 1e-12);
  }

  NonClassicalData smooth;
  smooth.x_edge[1] = parse("sin(3*x)");
  smooth.y_edge[0] = parse("exp(y)");
  CHECK(edge_trace_consistency(smooth, Grid(1, 1, 33, 33)).max_discrepancy <= 1e-12);
}

TEST_CASE("neighbouring reconstructions are derivatives of each other") {
  // D_x R_ij and D_y R_ij against R_{i+1,j} and R_{i,j+1}, by central
  // differences on interior nodes, with smooth v and data.
  NonClassicalData nc;
  nc.corner[0][0] = 0.3;
  nc.corner[2][1] = -0.7;
  nc.x_edge[0] = parse("cos(x)");
  nc.y_edge[1] = parse("1 + y^2");
  const auto v_expr = parse("sin(x)*cos(y) + x*y");

  std::map<std::pair<int, int>, double> prev;
  for (std::size_t n : {33, 65}) {
    const Grid g(1, 1, n, n);
    const Reconstructor rec(nc, g);
    const GridFunction v = expr::sample(v_expr, g);
    for (const DerivIndex idx : all_derivative_indices()) {
      const GridFunction f = rec.reconstruct(idx, v);
      for (int axis = 0; axis < 2; ++axis) {
        const DerivIndex next = axis == 0 ? DerivIndex{idx.i + 1, idx.j} : DerivIndex{idx.i, idx.j + 1};
        if (next.i > 4 || next.j > 2) continue;
        const GridFunction df = rec.reconstruct(next, v);
        double err = 0.0;
        for (std::size_t iy = 1; iy + 1 < n; ++iy) {
          for (std::size_t ix = 1; ix + 1 < n; ++ix) {
            const double fd = axis == 0 ? (f(ix + 1, iy) - f(ix - 1, iy)) / (2 * g.hx())
                                        : (f(ix, iy + 1) - f(ix, iy - 1)) / (2 * g.hy());
            err = std::max(err, std::abs(fd - df(ix, iy)));
          }
        }
        CAPTURE(idx.i);
        CAPTURE(idx.j);
        CAPTURE(axis);
        CHECK(err < 1e-2);
        const auto key = std::make_pair(idx.i * 3 + idx.j, axis);
        if (prev.contains(key) && err > 1e-10) CHECK(std::log2(prev[key] / err) > 1.8);
        prev[key] = err;
      }
    }
  }
}

TEST_CASE("the v term is linear") {
  std::mt19937_64 rng(24);
  const Grid g(1, 1, 17, 9);
  const NonClassicalData nc = testing::random_nonclassical(rng);
  const Reconstructor rec(nc, g);
  const GridFunction a = random_field(rng, g);
  const GridFunction b = random_field(rng, g);
  for (const DerivIndex idx : all_derivative_indices()) {
    const GridFunction lhs = rec.reconstruct(idx, 2.0 * a + (-3.0) * b) - rec.affine(idx);
    const GridFunction rhs = 2.0 * rec.volterra(idx, a) + (-3.0) * rec.volterra(idx, b);
    CHECK(max_abs_difference(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("column integrals agree with row integrals on the transposed field") {
  std::mt19937_64 rng(25);
  const Grid g(1, 1, 9, 9);
  const Reconstructor rec(NonClassicalData{}, g);
  const GridFunction f = random_field(rng, g);
  GridFunction ft(g);
  for (std::size_t iy = 0; iy < 9; ++iy) {
    for (std::size_t ix = 0; ix < 9; ++ix) ft(ix, iy) = f(iy, ix);
  }
  for (int k = 0; k <= 1; ++k) {
    const GridFunction a = rec.integrate_y(f, k);
    const GridFunction b = rec.integrate_x(ft, k);
    for (std::size_t iy = 0; iy < 9; ++iy) {
      for (std::size_t ix = 0; ix < 9; ++ix) CHECK(a(ix, iy) == doctest::Approx(b(iy, ix)).epsilon(1e-14));
    }
  }
}
