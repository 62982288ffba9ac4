#include "fbvp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fbvp {

namespace {

std::vector<double> uniform_nodes(double extent, std::size_t n) {
  std::vector<double> nodes(n);
  const double h = extent / static_cast<double>(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) nodes[k] = static_cast<double>(k) * h;
  nodes.back() = extent;
  return nodes;
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("grid functions live on different grids");
}

}  // namespace

Grid::Grid(double h1, double h2, std::size_t nx, std::size_t ny) {
  if (!(h1 > 0.0) || !std::isfinite(h1)) throw std::invalid_argument("h1 must be positive and finite");
  if (!(h2 > 0.0) || !std::isfinite(h2)) throw std::invalid_argument("h2 must be positive and finite");
  if (nx < 3 || ny < 3) {
    throw std::invalid_argument("grid needs at least 3 nodes per axis (got " + std::to_string(nx) + "x" +
                                std::to_string(ny) + ")");
  }
  hx_ = h1 / static_cast<double>(nx - 1);
  hy_ = h2 / static_cast<double>(ny - 1);
  xs_ = uniform_nodes(h1, nx);
  ys_ = uniform_nodes(h2, ny);
}

GridFunction::GridFunction(Grid grid, double fill) : grid_(std::move(grid)), values_(grid_.size(), fill) {}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw std::invalid_argument("grid function shape does not match grid");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

GridFunction& GridFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridFunction::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double s, GridFunction a) { return a *= s; }

double max_abs_difference(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a.grid(), b.grid());
  double m = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) m = std::max(m, std::abs(a.values()[k] - b.values()[k]));
  return m;
}

}  // namespace fbvp
