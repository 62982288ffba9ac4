#pragma once

// Two-way conversion between classical final-boundary data (phi_k, psi_k)
// and non-classical corner/edge data, and the corner agreement check.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbvp/domain.hpp"

namespace fbvp {

class UnsupportedData : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AgreementTerm {
  std::string lhs_label;  // e.g. "psi1'(h1)"
  std::string rhs_label;  // e.g. "phi2(h2)"
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
};

// The eight corner agreement residuals, in the order
//   psi1(h1)-phi1(h2), psi2(h1)-phi1'(h2), psi1'(h1)-phi2(h2),
//   psi2'(h1)-phi2'(h2), psi1''(h1)-phi3(h2), psi2''(h1)-phi3'(h2),
//   psi1'''(h1)-phi4(h2), psi2'''(h1)-phi4'(h2).
struct AgreementReport {
  std::array<AgreementTerm, 8> terms;
  double max_abs = 0.0;

  std::array<double, 8> residuals() const;
};

using CornerValues = std::array<std::array<double, 2>, 4>;

// Corner scalars from the phi side (Z_ij = phi_{i+1}^{(j)}(h2)), edge data
// psi_{j+1}^{(4)}(x) and phi_{i+1}''(y). Disagreement with the psi side is
// not resolved here; see check_agreement.
NonClassicalData classical_to_nonclassical(const ClassicalData& cd, const ProblemSpec& spec);

// Corner candidates from the psi side: psi_{j+1}^{(i)}(h1).
CornerValues psi_side_corner(const ClassicalData& cd, const ProblemSpec& spec);

AgreementReport check_agreement(const ClassicalData& cd, const ProblemSpec& spec);

// One reconstructed boundary function. The closed form is present when the
// generating edge datum is a polynomial expression; node values are present
// whenever a grid was supplied.
struct ClassicalTrace {
  std::optional<Expression> closed_form;
  std::vector<double> nodes;
  std::vector<double> values;
};

struct ReconstructedClassical {
  std::array<ClassicalTrace, 4> phi;  // sampled along y at x = h1
  std::array<ClassicalTrace, 2> psi;  // sampled along x at y = h2

  bool has_closed_form() const;
  // Throws UnsupportedData unless every trace has a closed form.
  ClassicalData classical() const;
};

// phi_{i+1}(y) = Z_i0 + (y-h2) Z_i1 + int_{h2}^y (y-s) Z_i2(s) ds
// psi_{j+1}(x) = sum_{m<=3} (x-h1)^m/m! Z_mj + int_{h1}^x (x-s)^3/3! Z_4j(s) ds
// Polynomial edges integrate exactly; anything else needs `grid` and uses the
// product trapezoid rule.
ReconstructedClassical nonclassical_to_classical(const NonClassicalData& nc, const ProblemSpec& spec,
                                                 const std::optional<Grid>& grid = std::nullopt);

}  // namespace fbvp
