#include "fbvp/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fbvp/convert.hpp"

namespace fbvp {

using expr::Var;

namespace {

std::size_t slot(DerivIndex idx) { return static_cast<std::size_t>(idx.i * (kOrderY + 1) + idx.j); }

void require_index(DerivIndex idx) {
  if (idx.i < 0 || idx.i > kOrderX || idx.j < 0 || idx.j > kOrderY) {
    throw std::out_of_range("derivative index (" + index_key(idx) + ") out of range");
  }
}

}  // namespace

Reconstructor::Reconstructor(const NonClassicalData& nc, const Grid& grid) : grid_(grid), corner_(nc.corner) {
  if (auto problems = validate_nonclassical(nc, &grid_); !problems.empty()) {
    throw std::invalid_argument("invalid non-classical data: " + problems.front());
  }
  const auto xs = grid_.xs();
  const auto ys = grid_.ys();
  const double h1 = grid_.h1();
  const double h2 = grid_.h2();

  for (int k = 0; k <= 3; ++k) wx_.emplace_back(grid_.nx(), k, grid_.hx());
  for (int k = 0; k <= 1; ++k) wy_.emplace_back(grid_.ny(), k, grid_.hy());

  for (int k = 0; k < 4; ++k) {
    xpow_[k].resize(xs.size());
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      double p = 1.0;
      for (int e = 0; e < k; ++e) p *= xs[ix] - h1;
      xpow_[k][ix] = p / factorial(k);
    }
  }
  for (int k = 0; k < 2; ++k) {
    ypow_[k].resize(ys.size());
    for (std::size_t iy = 0; iy < ys.size(); ++iy) ypow_[k][iy] = k == 0 ? 1.0 : ys[iy] - h2;
  }

  for (int n = 0; n < 2; ++n) {
    z4_[n] = nc.x_edge[n].at_nodes(xs, Var::x, h2);
    for (int k = 0; k < 4; ++k) z4_int_[n][k] = edge_kernel_integral(nc.x_edge[n], xs, Var::x, h2, k);
  }
  for (int m = 0; m < 4; ++m) {
    zm2_[m] = nc.y_edge[m].at_nodes(ys, Var::y, h1);
    for (int k = 0; k < 2; ++k) zm2_int_[m][k] = edge_kernel_integral(nc.y_edge[m], ys, Var::y, h1, k);
  }

  affine_.reserve((kOrderX + 1) * (kOrderY + 1));
  for (int i = 0; i <= kOrderX; ++i) {
    for (int j = 0; j <= kOrderY; ++j) affine_.push_back(build_affine({i, j}));
  }
}

GridFunction Reconstructor::build_affine(DerivIndex idx) const {
  const int i = idx.i;
  const int j = idx.j;
  GridFunction out(grid_);
  for (std::size_t iy = 0; iy < grid_.ny(); ++iy) {
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
      double s = 0.0;
      for (int m = i; m <= 3; ++m) {
        for (int n = j; n <= 1; ++n) s += xpow_[m - i][ix] * ypow_[n - j][iy] * corner_[m][n];
      }
      for (int n = j; n <= 1; ++n) {
        s += ypow_[n - j][iy] * (i < kOrderX ? z4_int_[n][3 - i][ix] : z4_[n][ix]);
      }
      for (int m = i; m <= 3; ++m) {
        s += xpow_[m - i][ix] * (j < kOrderY ? zm2_int_[m][1 - j][iy] : zm2_[m][iy]);
      }
      out(ix, iy) = s;
    }
  }
  return out;
}

const GridFunction& Reconstructor::affine(DerivIndex idx) const {
  require_index(idx);
  return affine_[slot(idx)];
}

GridFunction Reconstructor::integrate_x(const GridFunction& f, int power) const {
  GridFunction out(grid_);
  const KernelWeights& w = wx_.at(power);
  for (std::size_t iy = 0; iy < grid_.ny(); ++iy) w.apply(f.row(iy), out.row(iy));
  return out;
}

GridFunction Reconstructor::integrate_y(const GridFunction& f, int power) const {
  GridFunction out(grid_);
  const KernelWeights& w = wy_.at(power);
  const std::size_t ny = grid_.ny();
  const std::size_t nx = grid_.nx();
  for (std::size_t n = 0; n < ny; ++n) {
    auto dst = out.row(n);
    for (std::size_t r = n; r < ny; ++r) {
      const double wr = w(n, r);
      if (wr == 0.0) continue;
      auto src = f.row(r);
      for (std::size_t ix = 0; ix < nx; ++ix) dst[ix] += wr * src[ix];
    }
  }
  return out;
}

GridFunction Reconstructor::volterra(DerivIndex idx, const GridFunction& v) const {
  require_index(idx);
  if (!(v.grid() == grid_)) throw std::invalid_argument("v is defined on a different grid");
  GridFunction xv = idx.i < kOrderX ? integrate_x(v, kOrderX - 1 - idx.i) : v;
  return idx.j < kOrderY ? integrate_y(xv, kOrderY - 1 - idx.j) : xv;
}

GridFunction Reconstructor::reconstruct(DerivIndex idx, const GridFunction& v) const {
  GridFunction out = volterra(idx, v);
  out += affine(idx);
  return out;
}

GridFunction reconstruct(int i, int j, const GridFunction& v, const NonClassicalData& nc, const Grid& grid) {
  require_index({i, j});
  return Reconstructor(nc, grid).reconstruct({i, j}, v);
}

TraceConsistency edge_trace_consistency(const NonClassicalData& nc, const Grid& grid) {
  ProblemSpec spec;
  spec.h1 = grid.h1();
  spec.h2 = grid.h2();
  const auto traces = nonclassical_to_classical(nc, spec, grid);
  const Reconstructor rec(nc, grid);

  TraceConsistency out;
  const std::size_t last_x = grid.nx() - 1;
  const std::size_t last_y = grid.ny() - 1;
  for (int i = 0; i < 4; ++i) {
    const GridFunction& field = rec.affine({i, 0});
    for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
      out.phi[i] = std::max(out.phi[i], std::abs(traces.phi[i].values[iy] - field(last_x, iy)));
    }
    out.max_discrepancy = std::max(out.max_discrepancy, out.phi[i]);
  }
  for (int j = 0; j < 2; ++j) {
    const GridFunction& field = rec.affine({0, j});
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      out.psi[j] = std::max(out.psi[j], std::abs(traces.psi[j].values[ix] - field(ix, last_y)));
    }
    out.max_discrepancy = std::max(out.max_discrepancy, out.psi[j]);
  }
  return out;
}

}  // namespace fbvp
