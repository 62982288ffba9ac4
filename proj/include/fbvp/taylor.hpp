#pragma once

// Reconstruction of every derivative D_x^i D_y^j u (0 <= i <= 4,
// 0 <= j <= 2) from v = D_x^4 D_y^2 u and the non-classical data, by Taylor
// expansion with integral remainder about the final corner (h1,h2):
//
//   D^i_x D^j_y u(x,y) =
//       sum_{m=i}^{3} sum_{n=j}^{1} X^{m-i}/(m-i)! Y^{n-j}/(n-j)! Z_mn
//     + sum_{n=j}^{1} Y^{n-j}/(n-j)! Ix_{3-i}[Z_4n](x)
//     + sum_{m=i}^{3} X^{m-i}/(m-i)! Iy_{1-j}[Z_m2](y)
//     + Iy_{1-j} Ix_{3-i} [v](x,y)
//
// with X = x - h1, Y = y - h2 and the oriented kernel integrals
//   Ix_k[f](x) = int_{h1}^{x} (x-t)^k/k! f(t) dt,
//   Iy_k[f](y) = int_{h2}^{y} (y-s)^k/k! f(s) ds.
// For i = 4 the x-sums are empty and Ix is replaced by evaluation; dually
// for j = 2. Edge integrals are exact for polynomial edge data; the v term
// uses the product trapezoid rule.

#include <array>
#include <vector>

#include "fbvp/domain.hpp"
#include "fbvp/quadrature.hpp"

namespace fbvp {

class Reconstructor {
public:
  Reconstructor(const NonClassicalData& nc, const Grid& grid);

  const Grid& grid() const { return grid_; }

  // Everything except the v term. Precomputed for all 15 index pairs.
  const GridFunction& affine(DerivIndex idx) const;

  // Iy_{1-j} Ix_{3-i} [v], with the i = 4 / j = 2 conventions.
  GridFunction volterra(DerivIndex idx, const GridFunction& v) const;

  GridFunction reconstruct(DerivIndex idx, const GridFunction& v) const;

  // Row-wise Ix_k and column-wise Iy_k on grid functions.
  GridFunction integrate_x(const GridFunction& f, int power) const;
  GridFunction integrate_y(const GridFunction& f, int power) const;

private:
  GridFunction build_affine(DerivIndex idx) const;

  Grid grid_;
  std::array<std::array<double, 2>, 4> corner_;
  std::vector<KernelWeights> wx_;  // powers 0..3
  std::vector<KernelWeights> wy_;  // powers 0..1
  std::array<std::vector<double>, 4> xpow_;  // (x-h1)^k/k! at x nodes
  std::array<std::vector<double>, 2> ypow_;  // (y-h2)^k/k! at y nodes
  std::array<std::vector<double>, 2> z4_;    // Z_4n at x nodes
  std::array<std::array<std::vector<double>, 4>, 2> z4_int_;  // [n][k] Ix_k[Z_4n]
  std::array<std::vector<double>, 4> zm2_;   // Z_m2 at y nodes
  std::array<std::array<std::vector<double>, 2>, 4> zm2_int_;  // [m][k] Iy_k[Z_m2]
  std::vector<GridFunction> affine_;
};

// Throws std::out_of_range unless 0 <= i <= 4 and 0 <= j <= 2.
GridFunction reconstruct(int i, int j, const GridFunction& v, const NonClassicalData& nc, const Grid& grid);

struct TraceConsistency {
  std::array<double, 4> phi{};  // max |phi_{i+1}(y) - D^i_x u(h1,y)|
  std::array<double, 2> psi{};  // max |psi_{j+1}(x) - D^j_y u(x,h2)|
  double max_discrepancy = 0.0;
};

// Compares the boundary functions built by nonclassical_to_classical with
// the traces of the reconstruction on x = h1 and y = h2.
TraceConsistency edge_trace_consistency(const NonClassicalData& nc, const Grid& grid);

}  // namespace fbvp
