#include "fbvp/commands.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>

#include "fbvp/mms.hpp"
#include "fbvp/problem_file.hpp"
#include "fbvp/solver.hpp"

namespace fbvp::cli {

namespace {

std::string fixed17(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), end);
}

void write_json(const nlohmann::json& doc, const std::optional<std::string>& path, std::ostream& fallback) {
  if (!path) {
    fallback << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(*path);
  if (!out) throw InputError("cannot write '" + *path + "'");
  out << doc.dump(2) << '\n';
}

std::string field_file(const std::string& out_path, const std::string& field, bool several) {
  if (!several) return out_path;
  std::filesystem::path p(out_path);
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  p.replace_filename(p.stem().string() + "_" + field + ext);
  return p.string();
}

}  // namespace

void write_agreement_table(std::ostream& os, const AgreementReport& report) {
  os << "index,lhs,rhs,residual\n";
  for (std::size_t k = 0; k < report.terms.size(); ++k) {
    const auto& t = report.terms[k];
    os << k + 1 << ',' << fixed17(t.lhs) << ',' << fixed17(t.rhs) << ',' << fixed17(t.residual) << '\n';
  }
  os << "max_abs," << fixed17(report.max_abs) << '\n';
}

void write_field_csv(std::ostream& os, const GridFunction& f) {
  const Grid& g = f.grid();
  os << "x,y,value\n";
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
      os << fixed17(g.x(ix)) << ',' << fixed17(g.y(iy)) << ',' << fixed17(f(ix, iy)) << '\n';
    }
  }
}

DerivIndex parse_field_name(const std::string& name) {
  if (name == "u") return {0, 0};
  if (name == "v") return {kOrderX, kOrderY};
  if (name.size() == 3 && name[0] == 'd' && name[1] >= '0' && name[1] <= '4' && name[2] >= '0' && name[2] <= '2') {
    return {name[1] - '0', name[2] - '0'};
  }
  throw InputError("unknown field '" + name + "' (use u, v or d<i><j> with i<=4, j<=2)");
}

int cmd_check(const std::string& file, double agreement_tol, Streams io) {
  try {
    const ProblemFile pf = read_problem_file(file);
    if (!pf.classical) throw InputError("check needs a file with classical boundary data");
    const AgreementReport report = check_agreement(*pf.classical, pf.spec);
    write_agreement_table(io.out, report);
    return report.max_abs > agreement_tol ? kAgreementViolation : kOk;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_convert(const std::string& file, const ConvertOptions& opts, Streams io) {
  try {
    const ProblemFile pf = read_problem_file(file);
    nlohmann::json doc = spec_to_json(pf.spec);
    // The report goes to stdout only when stdout is not carrying the file.
    std::ostream& report_os = opts.out_path ? io.out : io.err;

    if (opts.direction == "to-classical") {
      if (!pf.nonclassical) throw InputError("to-classical needs a file with nonclassical boundary data");
      const Grid grid(pf.spec.h1, pf.spec.h2, opts.nx, opts.ny);
      const ReconstructedClassical rc = nonclassical_to_classical(*pf.nonclassical, pf.spec, grid);
      doc["classical"] = classical_to_json(rc);
      write_json(doc, opts.out_path, io.out);
      return kOk;
    }
    if (opts.direction == "to-nonclassical") {
      if (!pf.classical) throw InputError("to-nonclassical needs a file with classical boundary data");
      const NonClassicalData nc = classical_to_nonclassical(*pf.classical, pf.spec);
      const AgreementReport report = check_agreement(*pf.classical, pf.spec);
      doc["nonclassical"] = nonclassical_to_json(nc);
      write_json(doc, opts.out_path, io.out);
      write_agreement_table(report_os, report);
      return report.max_abs > opts.agreement_tol ? kAgreementViolation : kOk;
    }
    throw InputError("direction must be to-classical or to-nonclassical");
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_solve(const std::string& file, const SolveOptions& opts, Streams io) {
  ProblemFile pf;
  NonClassicalData nc;
  std::vector<DerivIndex> fields;
  try {
    pf = read_problem_file(file);
    for (const auto& name : opts.fields) fields.push_back(parse_field_name(name));
    if (pf.classical) {
      const AgreementReport report = check_agreement(*pf.classical, pf.spec);
      if (report.max_abs > opts.agreement_tol) {
        write_agreement_table(io.err, report);
        io.err << "error: classical data violate the agreement conditions (max residual "
               << fixed17(report.max_abs) << ")\n";
        return kAgreementViolation;
      }
      nc = classical_to_nonclassical(*pf.classical, pf.spec);
    } else {
      nc = *pf.nonclassical;
    }
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const Grid grid(pf.spec.h1, pf.spec.h2, opts.nx, opts.ny);
    SolverConfig cfg;
    cfg.tol = opts.tol;
    cfg.max_iter = opts.max_iter;
    const SolutionField sol = picard_solve(pf.spec, nc, grid, cfg);
    const double residual = residual_norm(pf.spec, sol, grid);

    for (std::size_t k = 0; k < fields.size(); ++k) {
      const std::string path = field_file(opts.out_path, opts.fields[k], fields.size() > 1);
      std::ofstream out(path);
      if (!out) throw InputError("cannot write '" + path + "'");
      write_field_csv(out, sol.derivs.at(fields[k]));
      io.out << "wrote " << opts.fields[k] << " to " << path << '\n';
    }
    io.out << "iterations: " << sol.iterations << '\n';
    io.out << "final_update: " << fixed17(sol.final_update) << '\n';
    io.out << "residual_norm: " << fixed17(residual) << '\n';
    return kOk;
  } catch (const NonConvergence& e) {
    io.out << "iterations: " << e.partial().iterations << '\n';
    io.out << "final_update: " << fixed17(e.partial().final_update) << '\n';
    io.err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Divergence& e) {
    io.err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_verify(const VerifyOptions& opts, Streams io) {
  std::vector<StudyRow> rows;
  try {
    const Expression u_star = expr::parse(opts.u_star);
    ProblemSpec spec;
    if (opts.coefficient_file) spec = read_problem_file(*opts.coefficient_file, false).spec;
    SolverConfig cfg;
    cfg.tol = opts.tol;
    cfg.max_iter = opts.max_iter;
    StudyOptions study;
    study.all_derivatives = opts.all_derivatives;
    rows = convergence_study(u_star, spec, opts.grids, cfg, study);
  } catch (const NonConvergence& e) {
    io.err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Divergence& e) {
    io.err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kInputError;
  }

  io.out << study_csv(rows);
  if (rows.size() < 2) return kOk;
  const StudyRow& finest = rows.back();
  if (finest.max_err <= kRoundingFloor) return kOk;
  if (finest.order && *finest.order >= opts.min_order) return kOk;
  io.err << "error: observed order below " << fixed17(opts.min_order) << '\n';
  return kOrderShortfall;
}

}  // namespace fbvp::cli
