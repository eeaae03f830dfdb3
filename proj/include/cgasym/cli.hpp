#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 parse or usage error, 3 point on the allowed/forbidden boundary.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cgasym/allreal.hpp"
#include "cgasym/classify.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/higher_order.hpp"
#include "cgasym/model1d.hpp"
#include "cgasym/region_geometry.hpp"
#include "cgasym/sweep.hpp"
#include "cgasym/verify.hpp"

namespace cgasym {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitBoundary = 3 };

/// Tunables read from an optional key=value file.
struct CliConfig {
  double caustic_factor = 1.0;
  std::int64_t exact_cap_twice_j = 1200;
  int verify_samples = 0;
};

inline CliConfig load_config(std::istream& in) {
  CliConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "caustic_factor") {
        c.caustic_factor = std::stod(value);
      } else if (key == "exact_cap") {
        c.exact_cap_twice_j = std::stoll(value);
      } else if (key == "verify_samples") {
        c.verify_samples = std::stoi(value);
      } else {
        throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ParseError("config line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
  }
  return c;
}

namespace cli_detail {

inline nlohmann::json region_json(const QuantumNumbers& q, const RegionClass& rc) {
  nlohmann::json j{{"tag", to_string(rc.tag)}};
  if (rc.forbidden) {
    j["subregion"] = to_string(rc.forbidden->subregion);
    j["branch"] = to_string(rc.forbidden->branch);
    j["sign_function"] = rc.forbidden->sign_function;
    j["largest_lambda"] = to_string(rc.forbidden->largest_lambda);
    j["branch_tie"] = rc.forbidden->branch_tie;
  }
  (void)q;
  return j;
}

inline void print_region_text(std::ostream& os, const RegionClass& rc) {
  os << "region: " << to_string(rc.tag) << '\n';
  if (rc.forbidden) {
    os << "subregion: " << to_string(rc.forbidden->subregion) << '\n'
       << "branch: " << to_string(rc.forbidden->branch) << '\n'
       << "sign_function: " << rc.forbidden->sign_function << '\n'
       << "largest_lambda: " << to_string(rc.forbidden->largest_lambda) << '\n';
    if (rc.forbidden->branch_tie) os << "branch_tie: true\n";
  }
}

inline std::string six_sf(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct EvalArgs {
  std::string q, method = "exact", format = "text";
  bool no_i_factor = false;
};

inline int cmd_eval(const EvalArgs& a, const CliConfig& cfg, std::ostream& out) {
  const QuantumNumbers q = parse_quantum_numbers(a.q);
  const RegionClass rc = classify(q);
  const mpq_class b2 = beta_squared(q);
  const bool caustic = near_caustic(q, cfg.caustic_factor);
  double value = 0;
  std::optional<ExactRadical> exact;
  if (a.method == "exact") {
    exact = wigner_sum(q);
    value = radical_to_float(*exact);
  } else if (a.method == "first") {
    value = first_order(q);
  } else if (a.method == "higher") {
    value = higher_order(q);
  } else if (a.method == "allreal") {
    if (rc.tag == RegionTag::Allowed) {
      value = allowed_allreal(q, !a.no_i_factor);
    } else if (rc.tag == RegionTag::Forbidden) {
      value = forbidden_allreal(q);
    } else {
      value = first_order(q);  // raises the boundary / domain error
    }
  } else {
    throw ParseError("unknown method '" + a.method + "'");
  }
  if (a.format == "json") {
    nlohmann::json j{{"q", to_string(q)},
                     {"method", a.method},
                     {"value", value},
                     {"region", region_json(q, rc)},
                     {"beta2", b2.get_str()},
                     {"near_caustic", caustic}};
    if (exact) j["exact"] = {{"sign", exact->sign()}, {"radicand", exact->radicand().get_str()}, {"text", exact->to_string()}};
    out << j.dump(2) << '\n';
  } else {
    out << "q: " << to_string(q) << '\n' << "method: " << a.method << '\n' << "value: " << six_sf(value) << '\n'
        << "value_full: " << format_double(value) << '\n';
    if (exact) out << "exact: " << exact->to_string() << '\n';
    print_region_text(out, rc);
    out << "beta2: " << b2.get_str() << '\n' << "near_caustic: " << (caustic ? "true" : "false") << '\n';
  }
  return kExitOk;
}

struct RegionArgs {
  std::string q, triple, format = "text";
};

inline int cmd_region(const RegionArgs& a, std::ostream& out) {
  if (!a.triple.empty()) {
    std::vector<HalfInt> v;
    std::stringstream ss(a.triple);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_half_int(tok));
    if (v.size() != 3) throw ParseError("--triple expects J1,J2,J");
    out << to_json(region_map_geometry(v[0], v[1], v[2])).dump(2) << '\n';
    return kExitOk;
  }
  const QuantumNumbers q = parse_quantum_numbers(a.q);
  const RegionClass rc = classify(q);
  const mpq_class b2 = beta_squared(q);
  const mpq_class bp = branch_polynomial(q);
  if (a.format == "json") {
    nlohmann::json j{{"q", to_string(q)}, {"region", region_json(q, rc)}, {"beta2", b2.get_str()},
                     {"branch_polynomial", bp.get_str()}};
    if (triangle_allowed(q)) {
      const auto la = lambda_alpha(q);
      j["lambda"] = {la.lambda1, la.lambda2, la.lambda3};
      j["alpha"] = la.alpha;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "q: " << to_string(q) << '\n';
    print_region_text(out, rc);
    out << "beta2: " << b2.get_str() << '\n' << "branch_polynomial: " << bp.get_str() << '\n';
  }
  return kExitOk;
}

struct SweepArgs {
  std::string j1, j2, j, m1, m2, outputs = "exact,first,higher,region", out_path;
  unsigned threads = 1;
  std::optional<std::int64_t> exact_cap;
};

inline int cmd_sweep(const SweepArgs& a, const CliConfig& cfg, std::ostream& out) {
  SweepSpec spec;
  spec.j1 = parse_half_int(a.j1);
  spec.j2 = parse_half_int(a.j2);
  spec.j = parse_half_int(a.j);
  if (!a.m1.empty()) spec.m1_range = parse_range(a.m1);
  if (!a.m2.empty()) spec.m2_range = parse_range(a.m2);
  spec.outputs = parse_outputs(a.outputs);
  spec.outputs.insert(SweepOutput::Region);
  spec.exact_cap_twice_j = a.exact_cap.value_or(cfg.exact_cap_twice_j);
  spec.threads = a.threads;
  if (a.out_path.empty()) {
    run_sweep(spec, out);
  } else {
    std::ostringstream buf;
    run_sweep(spec, buf);
    std::ofstream f(a.out_path);
    if (!f) throw DomainError("cannot open output file " + a.out_path);
    f << buf.str();
  }
  return kExitOk;
}

struct ModelArgs {
  std::int64_t m = 0, n = 0;
  std::string method = "all", format = "text";
  double tol = 1e-12;
};

inline int cmd_model1d(const ModelArgs& a, std::ostream& out) {
  const ModelInput in{a.m, a.n};
  nlohmann::json j{{"m", a.m}, {"n", a.n}};
  if (a.method == "exact" || a.method == "all") {
    const auto e = f_exact(in);
    j["exact"] = {{"coefficient", e.coefficient.get_str()}, {"times_pi", e.times_pi}, {"value", e.value()}};
  }
  if (a.method == "quadrature" || a.method == "all") {
    const auto qv = f_quadrature(in, a.tol);
    j["quadrature"] = {{"re", qv.real()}, {"im", qv.imag()}};
  }
  if (a.method == "asymptotic" || a.method == "all") {
    try {
      j["asymptotic"] = f_asymptotic(in);
    } catch (const CriticalRatioError& e) {
      if (a.method == "asymptotic") throw;
      j["asymptotic"] = nullptr;
    }
  }
  if (j.size() == 2) throw ParseError("unknown model1d method '" + a.method + "'");
  if (a.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    if (j.contains("exact"))
      out << "exact: " << j["exact"]["coefficient"].get<std::string>() << (j["exact"]["times_pi"].get<bool>() ? "*pi" : "")
          << " = " << format_double(j["exact"]["value"].get<double>()) << '\n';
    if (j.contains("quadrature"))
      out << "quadrature: " << format_double(j["quadrature"]["re"].get<double>()) << " + "
          << format_double(j["quadrature"]["im"].get<double>()) << "i\n";
    if (j.contains("asymptotic"))
      out << "asymptotic: " << (j["asymptotic"].is_null() ? std::string("undefined (m = n)") : format_double(j["asymptotic"].get<double>()))
          << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::string level = "quick";
};

inline int cmd_verify(const VerifyArgs& a, const CliConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = a.seed;
  if (a.level == "quick") {
    opt.level = VerifyLevel::Quick;
  } else if (a.level == "full") {
    opt.level = VerifyLevel::Full;
  } else {
    throw ParseError("--level must be quick or full");
  }
  opt.samples = cfg.verify_samples;
  const auto results = run_verify(opt);
  print_verify_table(results, out);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  out << (all ? "all suites passed" : "some suites FAILED") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clebsch-Gordan coefficients: exact values and stationary-phase asymptotics", "cgasym"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file (caustic_factor, exact_cap, verify_samples)");

  cli_detail::EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate one coefficient");
  c_eval->add_option("--q", eval.q, "J1,M1,J2,M2,J,M (integers, p/2 or x.5)")->required();
  c_eval->add_option("--method", eval.method, "exact|first|allreal|higher")
      ->check(CLI::IsMember({"exact", "first", "allreal", "higher"}));
  c_eval->add_option("--format", eval.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  c_eval->add_flag("--no-i-factor", eval.no_i_factor, "allreal: use the simplified allowed-region form");

  cli_detail::RegionArgs region;
  auto* c_region = app.add_subcommand("region", "Classify a point, or export the region map of a j-triple");
  auto* o_q = c_region->add_option("--q", region.q, "J1,M1,J2,M2,J,M");
  auto* o_t = c_region->add_option("--triple", region.triple, "J1,J2,J: hexagon, ellipse and tangency points as JSON");
  o_q->excludes(o_t);
  c_region->add_option("--format", region.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  cli_detail::SweepArgs sweep;
  std::int64_t exact_cap = 0;
  auto* c_sweep = app.add_subcommand("sweep", "CSV sweep over (m1, m2) at fixed j's");
  c_sweep->add_option("--j1", sweep.j1)->required();
  c_sweep->add_option("--j2", sweep.j2)->required();
  c_sweep->add_option("--j", sweep.j)->required();
  c_sweep->add_option("--m1", sweep.m1, "lo:hi[:step] (use --m1=-4:4 for negative bounds)");
  c_sweep->add_option("--m2", sweep.m2, "lo:hi[:step]");
  c_sweep->add_option("--outputs", sweep.outputs, "comma list of exact,first,higher,allreal,region");
  c_sweep->add_option("--out", sweep.out_path, "write CSV here instead of standard output");
  c_sweep->add_option("--threads", sweep.threads)->check(CLI::PositiveNumber);
  auto* o_cap = c_sweep->add_option("--exact-cap", exact_cap, "largest 2j for exact output");

  cli_detail::ModelArgs model;
  auto* c_model = app.add_subcommand("model1d", "The one-dimensional model integral F(m, n)");
  c_model->add_option("--m", model.m)->required();
  c_model->add_option("--n", model.n)->required();
  c_model->add_option("--method", model.method, "exact|quadrature|asymptotic|all")
      ->check(CLI::IsMember({"exact", "quadrature", "asymptotic", "all"}));
  c_model->add_option("--tol", model.tol);
  c_model->add_option("--format", model.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  cli_detail::VerifyArgs ver;
  auto* c_verify = app.add_subcommand("verify", "Run the self-verification suites");
  c_verify->add_option("--seed", ver.seed);
  c_verify->add_option("--level", ver.level, "quick|full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    CliConfig cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ParseError("cannot read config file " + config_path);
      cfg = load_config(f);
    }
    if (c_eval->parsed()) return cli_detail::cmd_eval(eval, cfg, out);
    if (c_region->parsed()) {
      if (region.q.empty() && region.triple.empty()) throw ParseError("region needs --q or --triple");
      return cli_detail::cmd_region(region, out);
    }
    if (c_sweep->parsed()) {
      if (o_cap->count() > 0) sweep.exact_cap = exact_cap;
      return cli_detail::cmd_sweep(sweep, cfg, out);
    }
    if (c_model->parsed()) return cli_detail::cmd_model1d(model, out);
    if (c_verify->parsed()) return cli_detail::cmd_verify(ver, cfg, out);
  } catch (const BoundaryError& e) {
    err << "error: boundary point: " << e.what() << '\n';
    return kExitBoundary;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cgasym
