#pragma once

// Command implementations behind the fbvp executable. Each returns the
// process exit code and writes only to the given streams and output files.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fbvp/convert.hpp"
#include "fbvp/grid.hpp"

namespace fbvp::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kAgreementViolation = 3,
  kNonConvergence = 4,
  kOrderShortfall = 5,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct ConvertOptions {
  std::string direction;  // "to-classical" or "to-nonclassical"
  std::optional<std::string> out_path;  // stdout when absent
  double agreement_tol = 1e-10;
  std::size_t nx = 65;  // sampling grid for non-polynomial edge data
  std::size_t ny = 65;
};

struct SolveOptions {
  std::size_t nx = 65;
  std::size_t ny = 65;
  double tol = 1e-12;
  std::size_t max_iter = 200;
  std::string out_path = "solution.csv";
  std::vector<std::string> fields{"u"};  // "u", "v" or "d<i><j>"
  double agreement_tol = 1e-10;
};

struct VerifyOptions {
  std::string u_star;
  std::optional<std::string> coefficient_file;
  std::vector<std::size_t> grids{17, 33, 65};
  double min_order = 1.8;
  double tol = 1e-12;
  std::size_t max_iter = 200;
  bool all_derivatives = false;
};

int cmd_convert(const std::string& file, const ConvertOptions& opts, Streams io);
int cmd_check(const std::string& file, double agreement_tol, Streams io);
int cmd_solve(const std::string& file, const SolveOptions& opts, Streams io);
int cmd_verify(const VerifyOptions& opts, Streams io);

// Header line plus eight rows "index,lhs,rhs,residual", then "max_abs,<v>".
void write_agreement_table(std::ostream& os, const AgreementReport& report);

// Header "x,y,value", rows ordered by y then x, 17 significant digits.
void write_field_csv(std::ostream& os, const GridFunction& f);

// Parses "u", "v" or "d<i><j>" into a derivative index.
DerivIndex parse_field_name(const std::string& name);

}  // namespace fbvp::cli
