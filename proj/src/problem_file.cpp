#include "fbvp/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace fbvp {

using nlohmann::json;

namespace {

Expression read_expression(const json& node, const std::string& where) {
  if (node.is_number()) return Expression::number(node.get<double>());
  if (!node.is_string()) throw InputError(where + ": expected an expression string or a number");
  try {
    return expr::parse(node.get<std::string>());
  } catch (const expr::ParseError& err) {
    throw InputError(where + ": " + err.what());
  }
}

double read_number(const json& node, const std::string& where) {
  if (!node.is_number()) throw InputError(where + ": expected a number");
  return node.get<double>();
}

DerivIndex read_index(const std::string& key, const std::string& where) {
  DerivIndex idx{-1, -1};
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw InputError(where + ": index key '" + key + "' must look like \"i,j\"");
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const std::string si = key.substr(0, comma);
    const std::string sj = key.substr(comma + 1);
    idx.i = std::stoi(si, &used_i);
    idx.j = std::stoi(sj, &used_j);
    if (used_i != si.size() || used_j != sj.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw InputError(where + ": index key '" + key + "' must look like \"i,j\"");
  }
  return idx;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw InputError(where + ": unknown key '" + key + "'");
  }
}

const json& require_object(const json& node, const std::string& where) {
  if (!node.is_object()) throw InputError(where + ": expected an object");
  return node;
}

ClassicalData read_classical(const json& node) {
  require_object(node, "classical");
  reject_unknown_keys(node, {"phi1", "phi2", "phi3", "phi4", "psi1", "psi2"}, "classical");
  ClassicalData cd;
  auto read = [&](const std::string& key) -> Expression {
    if (!node.contains(key)) return Expression{};
    const json& v = node.at(key);
    if (v.is_object()) {
      throw InputError("classical." + key + ": sampled classical data are not accepted; give an expression");
    }
    return read_expression(v, "classical." + key);
  };
  for (int k = 0; k < 4; ++k) cd.phi[k] = read("phi" + std::to_string(k + 1));
  for (int k = 0; k < 2; ++k) cd.psi[k] = read("psi" + std::to_string(k + 1));
  if (auto problems = validate_classical(cd); !problems.empty()) throw InputError("classical: " + problems.front());
  return cd;
}

NonClassicalData read_nonclassical(const json& node) {
  require_object(node, "nonclassical");
  reject_unknown_keys(node, {"corner", "x_edge", "y_edge"}, "nonclassical");
  NonClassicalData nc;
  if (node.contains("corner")) {
    const json& corner = require_object(node.at("corner"), "nonclassical.corner");
    for (const auto& [key, value] : corner.items()) {
      const DerivIndex idx = read_index(key, "nonclassical.corner");
      if (idx.i < 0 || idx.i > 3 || idx.j < 0 || idx.j > 1) {
        throw InputError("nonclassical.corner: index '" + key + "' out of range (need i<=3, j<=1)");
      }
      nc.corner[idx.i][idx.j] = read_number(value, "nonclassical.corner." + key);
    }
  }
  if (node.contains("x_edge")) {
    const json& xe = require_object(node.at("x_edge"), "nonclassical.x_edge");
    reject_unknown_keys(xe, {"Z40", "Z41"}, "nonclassical.x_edge");
    for (int j = 0; j < 2; ++j) {
      const std::string key = "Z4" + std::to_string(j);
      if (xe.contains(key)) nc.x_edge[j] = read_expression(xe.at(key), "nonclassical.x_edge." + key);
    }
  }
  if (node.contains("y_edge")) {
    const json& ye = require_object(node.at("y_edge"), "nonclassical.y_edge");
    reject_unknown_keys(ye, {"Z02", "Z12", "Z22", "Z32"}, "nonclassical.y_edge");
    for (int i = 0; i < 4; ++i) {
      const std::string key = "Z" + std::to_string(i) + "2";
      if (ye.contains(key)) nc.y_edge[i] = read_expression(ye.at(key), "nonclassical.y_edge." + key);
    }
  }
  if (auto problems = validate_nonclassical(nc); !problems.empty()) throw InputError("nonclassical: " + problems.front());
  return nc;
}

json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

}  // namespace

ProblemFile parse_problem(const json& doc, bool require_boundary_data) {
  require_object(doc, "problem file");
  reject_unknown_keys(doc, {"h1", "h2", "p", "coefficients", "rhs", "classical", "nonclassical"}, "problem file");

  ProblemFile pf;
  if (doc.contains("h1")) pf.spec.h1 = read_number(doc.at("h1"), "h1");
  if (doc.contains("h2")) pf.spec.h2 = read_number(doc.at("h2"), "h2");
  if (doc.contains("p")) {
    const json& p = doc.at("p");
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") throw InputError("p: expected a number or \"inf\"");
      pf.spec.p = kInfinity;
    } else {
      pf.spec.p = read_number(p, "p");
    }
  }
  if (doc.contains("coefficients")) {
    const json& coeffs = require_object(doc.at("coefficients"), "coefficients");
    for (const auto& [key, value] : coeffs.items()) {
      pf.spec.coeffs[read_index(key, "coefficients")] = read_expression(value, "coefficients." + key);
    }
  }
  if (doc.contains("rhs")) pf.spec.rhs = read_expression(doc.at("rhs"), "rhs");

  const ValidationReport report = validate_spec(pf.spec);
  if (!report.ok()) throw InputError(report.violations.front());

  const bool has_c = doc.contains("classical");
  const bool has_n = doc.contains("nonclassical");
  if (has_c && has_n) throw InputError("give exactly one of \"classical\" and \"nonclassical\", not both");
  if (require_boundary_data && !has_c && !has_n) {
    throw InputError("missing boundary data: give \"classical\" or \"nonclassical\"");
  }
  if (has_c) pf.classical = read_classical(doc.at("classical"));
  if (has_n) pf.nonclassical = read_nonclassical(doc.at("nonclassical"));
  return pf;
}

ProblemFile read_problem_file(const std::filesystem::path& path, bool require_boundary_data) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw InputError(path.string() + ": " + err.what());
  }
  return parse_problem(doc, require_boundary_data);
}

json spec_to_json(const ProblemSpec& spec) {
  json doc;
  doc["h1"] = spec.h1;
  doc["h2"] = spec.h2;
  doc["p"] = p_to_json(spec.p);
  json coeffs = json::object();
  for (const auto& [idx, a] : spec.coeffs) coeffs[index_key(idx)] = expr::print(a);
  doc["coefficients"] = coeffs;
  doc["rhs"] = expr::print(spec.rhs);
  return doc;
}

json classical_to_json(const ClassicalData& cd) {
  json out;
  for (int k = 0; k < 4; ++k) out["phi" + std::to_string(k + 1)] = expr::print(cd.phi[k]);
  for (int k = 0; k < 2; ++k) out["psi" + std::to_string(k + 1)] = expr::print(cd.psi[k]);
  return out;
}

json classical_to_json(const ReconstructedClassical& rc) {
  auto trace = [](const ClassicalTrace& t) -> json {
    if (t.closed_form) return expr::print(*t.closed_form);
    return json{{"nodes", t.nodes}, {"values", t.values}};
  };
  json out;
  for (int k = 0; k < 4; ++k) out["phi" + std::to_string(k + 1)] = trace(rc.phi[k]);
  for (int k = 0; k < 2; ++k) out["psi" + std::to_string(k + 1)] = trace(rc.psi[k]);
  return out;
}

json nonclassical_to_json(const NonClassicalData& nc) {
  auto edge = [](const EdgeFunction& f) -> json {
    if (f.is_expression()) return expr::print(f.expression());
    return json{{"values", f.samples().values}};
  };
  json corner = json::object();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) corner[index_key({i, j})] = nc.corner[i][j];
  }
  json out;
  out["corner"] = corner;
  out["x_edge"] = json{{"Z40", edge(nc.x_edge[0])}, {"Z41", edge(nc.x_edge[1])}};
  out["y_edge"] = json{{"Z02", edge(nc.y_edge[0])}, {"Z12", edge(nc.y_edge[1])}, {"Z22", edge(nc.y_edge[2])},
                       {"Z32", edge(nc.y_edge[3])}};
  return out;
}

}  // namespace fbvp
