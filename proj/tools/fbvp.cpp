#include <iostream>

#include <CLI11.hpp>

#include "fbvp/commands.hpp"

using namespace fbvp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Final-boundary value problems for D_x^4 D_y^2 u + ... = f: data conversion, solving, verification"};
  app.require_subcommand(1);

  std::string file;
  ConvertOptions convert;
  std::string convert_out;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between classical and non-classical boundary data");
  convert_cmd->add_option("direction", convert.direction, "to-classical | to-nonclassical")
      ->required()
      ->check(CLI::IsMember({"to-classical", "to-nonclassical"}));
  convert_cmd->add_option("file", file, "Problem file (JSON)")->required();
  convert_cmd->add_option("--out", convert_out, "Output file (default: stdout)");
  convert_cmd->add_option("--agreement-tol", convert.agreement_tol, "Largest accepted agreement residual");
  convert_cmd->add_option("--nx", convert.nx, "x nodes for sampling non-polynomial data");
  convert_cmd->add_option("--ny", convert.ny, "y nodes for sampling non-polynomial data");

  double check_tol = 1e-10;
  auto* check_cmd = app.add_subcommand("check", "Print the agreement residuals of classical data");
  check_cmd->add_option("file", file, "Problem file (JSON)")->required();
  check_cmd->add_option("--agreement-tol", check_tol, "Largest accepted agreement residual");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the non-classical problem on a uniform grid");
  solve_cmd->add_option("file", file, "Problem file (JSON)")->required();
  solve_cmd->add_option("--nx", solve.nx, "Nodes along x")->check(CLI::Range(3, 1 << 20));
  solve_cmd->add_option("--ny", solve.ny, "Nodes along y")->check(CLI::Range(3, 1 << 20));
  solve_cmd->add_option("--tol", solve.tol, "Picard update tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iter", solve.max_iter, "Maximum Picard iterations")->check(CLI::Range(1, 1 << 30));
  solve_cmd->add_option("--out", solve.out_path, "Output CSV (suffixed per field when several)");
  solve_cmd->add_option("--field", solve.fields, "Field(s) to write: u, v or d<i><j>")->allow_extra_args(false);
  solve_cmd->add_option("--agreement-tol", solve.agreement_tol, "Agreement gate for classical input");

  VerifyOptions verify;
  std::string coeff_file;
  auto* verify_cmd = app.add_subcommand("verify", "Manufactured-solution convergence study");
  verify_cmd->add_option("--u-star", verify.u_star, "Exact solution u*(x,y)")->required();
  verify_cmd->add_option("file", coeff_file, "Problem file supplying h1, h2, p and coefficients");
  verify_cmd->add_option("--grids", verify.grids, "Nested odd node counts, e.g. 33,65,129")->delimiter(',')->allow_extra_args(false);
  verify_cmd->add_option("--min-order", verify.min_order, "Required order on the finest pair");
  verify_cmd->add_option("--tol", verify.tol, "Picard update tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-iter", verify.max_iter, "Maximum Picard iterations");
  verify_cmd->add_flag("--all-derivatives", verify.all_derivatives, "Measure all 15 derivative fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Streams io{std::cout, std::cerr};
  if (*convert_cmd) {
    if (!convert_out.empty()) convert.out_path = convert_out;
    return cmd_convert(file, convert, io);
  }
  if (*check_cmd) return cmd_check(file, check_tol, io);
  if (*solve_cmd) return cmd_solve(file, solve, io);
  if (!coeff_file.empty()) verify.coefficient_file = coeff_file;
  return cmd_verify(verify, io);
}
