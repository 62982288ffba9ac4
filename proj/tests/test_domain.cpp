#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fbvp/domain.hpp"

using namespace fbvp;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate_spec") {
  ProblemSpec spec;
  spec.rhs = expr::parse("0");
  CHECK(validate_spec(spec).ok());

  SUBCASE("negative extent") {
    spec.h1 = -1;
    CHECK(mentions(validate_spec(spec), "h1 must be positive"));
  }
  SUBCASE("principal coefficient") {
    spec.coeffs[{4, 2}] = expr::parse("1");
    CHECK(mentions(validate_spec(spec), "principal coefficient is fixed"));
  }
  SUBCASE("index out of range") {
    spec.coeffs[{5, 0}] = expr::parse("1");
    spec.coeffs[{0, -1}] = expr::parse("1");
    CHECK(validate_spec(spec).violations.size() == 2);
  }
  SUBCASE("exponent") {
    spec.p = 0.5;
    CHECK(mentions(validate_spec(spec), "p must be"));
    spec.p = NAN;
    CHECK(mentions(validate_spec(spec), "p must be"));
    spec.p = kInfinity;
    CHECK(validate_spec(spec).ok());
  }
  SUBCASE("is idempotent") {
    spec.h2 = 0;
    const auto a = validate_spec(spec);
    const auto b = validate_spec(spec);
    CHECK(a.violations == b.violations);
  }
}

TEST_CASE("coefficient classes follow the index") {
  ProblemSpec spec;
  for (const DerivIndex idx : all_derivative_indices()) {
    if (is_coefficient_index(idx)) spec.coeffs[idx] = expr::parse("1");
  }
  const auto report = validate_spec(spec);
  REQUIRE(report.ok());
  CHECK(report.classes.size() == 14);
  CHECK(report.classes.at({0, 0}) == CoefficientClass::lp);
  CHECK(report.classes.at({3, 1}) == CoefficientClass::lp);
  CHECK(report.classes.at({4, 0}) == CoefficientClass::linf_x_lp_y);
  CHECK(report.classes.at({4, 1}) == CoefficientClass::linf_x_lp_y);
  CHECK(report.classes.at({0, 2}) == CoefficientClass::lp_x_linf_y);
  CHECK(report.classes.at({3, 2}) == CoefficientClass::lp_x_linf_y);
}

TEST_CASE("all_derivative_indices lists 15 pairs ending with (4,2)") {
  const auto& all = all_derivative_indices();
  CHECK(all.size() == 15);
  CHECK(all.back() == DerivIndex{4, 2});
}

TEST_CASE("grid nodes") {
  const Grid g(0.7, 1.3, 11, 7);
  CHECK(g.x(0) == 0.0);
  CHECK(g.x(10) == 0.7);
  CHECK(g.y(6) == 1.3);
  CHECK(g.hx() == doctest::Approx(0.07));
  for (std::size_t k = 1; k < g.nx(); ++k) CHECK(g.x(k) > g.x(k - 1));

  CHECK_THROWS_AS(Grid(1, 1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0, 1, 5, 5), std::invalid_argument);
}

TEST_CASE("grid function arithmetic") {
  const Grid g(1, 1, 3, 4);
  GridFunction a(g, 1.0);
  GridFunction b(g, 2.5);
  a(2, 3) = -4.0;
  CHECK((a + b)(2, 3) == 2.5 - 4.0);
  CHECK((a - b).max_abs() == 6.5);
  CHECK((2.0 * a)(0, 0) == 2.0);
  CHECK(a.row(3)[2] == -4.0);
  CHECK(max_abs_difference(a, b) == 6.5);
  CHECK_THROWS_AS(a += GridFunction(Grid(1, 1, 3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction(g, std::vector<double>(5)), std::invalid_argument);
  a(1, 1) = NAN;
  CHECK_FALSE(a.all_finite());
}

TEST_CASE("data validation") {
  ClassicalData cd;
  cd.phi[1] = expr::parse("x");
  cd.psi[0] = expr::parse("y");
  CHECK(validate_classical(cd).size() == 2);

  NonClassicalData nc;
  CHECK(validate_nonclassical(nc).empty());
  nc.x_edge[0] = expr::parse("y");
  CHECK(validate_nonclassical(nc).size() == 1);

  const Grid g(1, 1, 5, 5);
  NonClassicalData sampled;
  sampled.y_edge[2] = SampledFunction{{1, 2, 3}};
  CHECK(validate_nonclassical(sampled).empty());
  CHECK(validate_nonclassical(sampled, &g).size() == 1);
  sampled.y_edge[2] = SampledFunction{{1, 2, 3, 4, 5}};
  CHECK(validate_nonclassical(sampled, &g).empty());

  NonClassicalData singular;
  singular.x_edge[1] = expr::parse("1/(x-0.5)");
  CHECK(validate_nonclassical(singular, &g).size() == 1);
}
