#pragma once

// JSON problem files:
//
// {
//   "h1": 1, "h2": 1, "p": "inf",
//   "coefficients": { "0,0": "1", "3,2": "x" },
//   "rhs": "sin(x)*cos(y)",
//   "classical":    { "phi1": "...", ..., "phi4": "...", "psi1": "...", "psi2": "..." }
//     or
//   "nonclassical": { "corner": { "0,0": 1.0, ... },
//                     "x_edge": { "Z40": "...", "Z41": "..." },
//                     "y_edge": { "Z02": "...", "Z12": "...", "Z22": "...", "Z32": "..." } }
// }
//
// Expressions may be given as strings or plain numbers. Missing corner
// entries, edge functions and classical functions are zero.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fbvp/convert.hpp"
#include "fbvp/domain.hpp"

namespace fbvp {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  ProblemSpec spec;
  std::optional<ClassicalData> classical;
  std::optional<NonClassicalData> nonclassical;
};

// With require_boundary_data, exactly one of "classical"/"nonclassical" must
// be present; otherwise both may be absent (coefficient-only files).
ProblemFile parse_problem(const nlohmann::json& doc, bool require_boundary_data = true);
ProblemFile read_problem_file(const std::filesystem::path& path, bool require_boundary_data = true);

nlohmann::json spec_to_json(const ProblemSpec& spec);
nlohmann::json classical_to_json(const ClassicalData& cd);
// Traces without a closed form are written as {"nodes": [...], "values": [...]}.
nlohmann::json classical_to_json(const ReconstructedClassical& rc);
nlohmann::json nonclassical_to_json(const NonClassicalData& nc);

}  // namespace fbvp
