#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fbvp {

// Uniform tensor grid over [0,h1] x [0,h2]. Both endpoints are nodes and the
// last node on each axis is exactly the final edge.
class Grid {
public:
  Grid(double h1, double h2, std::size_t nx, std::size_t ny);

  std::size_t nx() const { return xs_.size(); }
  std::size_t ny() const { return ys_.size(); }
  std::size_t size() const { return nx() * ny(); }

  double h1() const { return xs_.back(); }
  double h2() const { return ys_.back(); }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  double x(std::size_t i) const { return xs_[i]; }
  double y(std::size_t j) const { return ys_[j]; }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }

  bool operator==(const Grid& other) const = default;

private:
  double hx_;
  double hy_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Node values of a scalar field. Storage is row-major by y then x, so x is
// the fastest-varying index.
class GridFunction {
public:
  explicit GridFunction(Grid grid, double fill = 0.0);
  GridFunction(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }

  double operator()(std::size_t ix, std::size_t iy) const { return values_[iy * grid_.nx() + ix]; }
  double& operator()(std::size_t ix, std::size_t iy) { return values_[iy * grid_.nx() + ix]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  // Contiguous view of one y = const row.
  std::span<const double> row(std::size_t iy) const {
    return std::span<const double>(values_).subspan(iy * grid_.nx(), grid_.nx());
  }
  std::span<double> row(std::size_t iy) {
    return std::span<double>(values_).subspan(iy * grid_.nx(), grid_.nx());
  }

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(double s);

  double max_abs() const;
  bool all_finite() const;

private:
  Grid grid_;
  std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double s, GridFunction a);

// max |a - b| over all nodes; grids must match.
double max_abs_difference(const GridFunction& a, const GridFunction& b);

}  // namespace fbvp
