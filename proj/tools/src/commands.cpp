#include "sdlab/cli/commands.hpp"

#include <fstream>
#include <iostream>

#include "sdlab/cli/census_config.hpp"

namespace sdlab::cli {

using io::Json;
using simplex::CenterFamily;

namespace {

std::ostream& diag(const Output& out) { return out.diagnostics ? *out.diagnostics : std::cerr; }

/// Writes the report; an I/O failure turns the exit code into exit_usage.
int emit(const Json& report, const Output& out, int code) {
  const auto text = io::dump(report);
  if (out.path.empty() || out.path == "-") {
    std::cout << text << std::flush;
    return code;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    diag(out) << "error: cannot write report to " << out.path << "\n";
    return exit_usage;
  }
  return code;
}

Json header(const char* command) { return {{"v", io::schema_version}, {"command", command}}; }

/// Symbolic centers with c^1 pushed off the simplex: its coordinates sum to 2.
CenterFamily corrupted_family(int n_max) {
  const auto sym = CenterFamily::symbolic(n_max);
  std::vector<simplex::BarycentricPoint> points;
  for (int i = 0; i <= n_max; ++i) points.push_back(sym.center(i));
  if (n_max >= 1) {
    auto& last = points[1].coords.back();
    last += poly::Polynomial::constant(last.mode(), 1);
  }
  return CenterFamily::from_points(std::move(points), sym.coefficients(), false);
}

}  // namespace

shell::SignConvention parse_convention(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("convention must look like \"+1,-1\"");
  auto sign = [](std::string s) {
    std::erase(s, ' ');
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw std::invalid_argument("convention signs must be +1 or -1");
  };
  return {sign(text.substr(0, comma)), sign(text.substr(comma + 1))};
}

Json relations_report(const RelationsOptions& opts) {
  const auto family = opts.corrupt_centers ? corrupted_family(std::max(opts.max_n, 1)) : CenterFamily::symbolic(opts.max_n);
  const relcheck::MapProvider maps(family);
  Json report = header("relations");
  report["max_n"] = opts.max_n;
  report["centers"] = opts.corrupt_centers ? "corrupted" : "symbolic";
  Json sd = Json::array();
  Json h = Json::array();
  Json implication = Json::array();
  Json literal = Json::array();
  std::size_t failures = 0;
  std::size_t instances = 0;
  for (int n = 0; n <= opts.max_n; ++n) {
    const auto a = relcheck::check_subdivision_relations(n, maps);
    const auto b = relcheck::check_patience_relations(n, maps);
    failures += a.failures() + b.failures();
    instances += a.instances.size() + b.instances.size();
    if (n >= 1) sd.push_back({{"n", n}, {"report", io::to_json(a)}});
    h.push_back({{"n", n}, {"report", io::to_json(b)}});
    if (n >= 1 && n <= 3) {
      const auto c = relcheck::cross_check_implication(n, maps);
      failures += c.failures();
      instances += c.instances.size();
      implication.push_back({{"n", n}, {"report", io::to_json(c)}});
    }
    if (n >= 1) {
      // Informational: the face-k relation as literally stated. Not counted.
      const auto d = relcheck::literal_face_k_relation(n, maps);
      std::size_t fixed = 0;
      for (const auto& r : d.instances) {
        if (!r.pass && r.sigma[static_cast<std::size_t>(r.k)] == r.k) ++fixed;
      }
      literal.push_back({{"n", n}, {"instances", d.instances.size()}, {"failures", d.failures()},
                         {"failures_with_sigma_fixing_k", fixed}});
    }
  }
  report["subdivision"] = std::move(sd);
  report["homotopy"] = std::move(h);
  report["implication"] = std::move(implication);
  report["literal_face_k"] = std::move(literal);
  report["instances"] = instances;
  report["failures"] = failures;
  report["status"] = failures == 0 ? "pass" : "fail";
  return report;
}

int run_relations(const RelationsOptions& opts, const Output& out) {
  if (opts.max_n < 0 || opts.max_n > 6) {
    diag(out) << "error: --max-n must be in [0, 6]\n";
    return exit_usage;
  }
  const auto report = relations_report(opts);
  return emit(report, out, report["failures"].get<std::size_t>() == 0 ? exit_pass : exit_failure);
}

Json homotopy_report(const HomotopyOptions& opts) {
  const auto symbolic = CenterFamily::symbolic(opts.max_s);
  Json report = header("homotopy");
  report["max_s"] = opts.max_s;
  report["seed"] = opts.seed;

  std::optional<shell::SignConvention> chosen = opts.convention;
  bool ok = true;
  if (!opts.convention) {
    const auto search = shell::search_conventions(opts.max_s, symbolic);
    Json per_s = Json::array();
    for (std::size_t s = 0; s < search.working.size(); ++s) {
      Json working = Json::array();
      for (const auto& c : search.working[s]) working.push_back(io::to_json(c));
      per_s.push_back({{"s", s}, {"working", std::move(working)}});
    }
    Json common = Json::array();
    for (const auto& c : search.common) common.push_back(io::to_json(c));
    report["search"] = {{"per_s", std::move(per_s)}, {"common", std::move(common)}, {"unique", search.unique()}};
    ok = search.unique();
    if (ok) chosen = search.common.front();
  }
  report["mode"] = opts.convention ? "explicit" : "auto";
  report["convention"] = chosen ? io::to_json(*chosen) : Json(nullptr);

  Json per_s = Json::array();
  Json specialization = Json::array();
  if (chosen) {
    const auto field = poly::FiniteField::build(opts.specialize_p, 1);
    const auto target =
        CenterFamily::sampled(opts.max_s, 1, opts.specialize_degree, field, opts.seed);
    for (int s = 0; s <= opts.max_s; ++s) {
      const auto r = shell::homotopy_boundary(s, opts.max_s, symbolic, *chosen);
      ok = ok && r.telescopes();
      per_s.push_back(io::to_json(r));
      const auto check = shell::specialization_check(s, *chosen, symbolic, target);
      ok = ok && check.pass();
      specialization.push_back({{"s", s},
                                {"specialized_residual_empty", check.specialized_telescopes},
                                {"direct_residual_empty", check.direct_telescopes},
                                {"boundaries_agree", check.boundaries_agree},
                                {"status", check.pass() ? "pass" : "fail"}});
    }
  }
  report["telescoping"] = std::move(per_s);
  report["specialization"] = {{"field", "F_" + std::to_string(opts.specialize_p)},
                              {"degree_bound", opts.specialize_degree},
                              {"seed", opts.seed},
                              {"results", std::move(specialization)}};
  report["status"] = ok ? "pass" : "fail";
  return report;
}

int run_homotopy(const HomotopyOptions& opts, const Output& out) {
  if (opts.max_s < 0 || opts.max_s > 4) {
    diag(out) << "error: --max-s must be in [0, 4]\n";
    return exit_usage;
  }
  const auto report = homotopy_report(opts);
  return emit(report, out, report["status"] == "pass" ? exit_pass : exit_failure);
}

Json shell_report(int n) {
  const auto sh = shell::build_shell(n);
  const auto hom = shell::homology(sh.complex);
  const auto can = shell::canonical_map(n);
  const auto target_hom = shell::homology(can.target);
  Json report = header("shell");
  report["n"] = n;
  report["ranks"] = sh.complex.ranks;
  Json h = Json::array();
  for (std::size_t s = 0; s < hom.size(); ++s) h.push_back({{"s", s}, {"homology", io::to_json(hom[s])}});
  Json th = Json::array();
  for (std::size_t s = 0; s < target_hom.size(); ++s) th.push_back({{"s", s}, {"homology", io::to_json(target_hom[s])}});
  const bool d2 = shell::verify_d_squared(sh.complex);
  bool expected = hom[0].is_integers();
  for (int s = 1; s <= n - 1; ++s) expected = expected && hom[static_cast<std::size_t>(s)].is_zero();
  report["d_squared_zero"] = d2;
  report["homology"] = std::move(h);
  report["canonical_map_commutes"] = can.commutes;
  report["target_homology"] = std::move(th);
  report["status"] = d2 && can.commutes && expected ? "pass" : "fail";
  return report;
}

int run_shell(int n, const Output& out) {
  if (n < 0 || n > 8) {
    diag(out) << "error: --n must be in [0, 8]\n";
    return exit_usage;
  }
  const auto report = shell_report(n);
  return emit(report, out, report["status"] == "pass" ? exit_pass : exit_failure);
}

Json degrees_report(const DegreesOptions& opts) {
  const auto family =
      CenterFamily::random_polynomial(opts.n, opts.m, opts.N, poly::CoefficientMode::rational(), opts.seed);
  relcheck::DegreeOptions options;
  options.inject_t_degree_fault = opts.inject_fault;
  const auto r = relcheck::degree_report(opts.n, family, options);
  Json report = header("degrees");
  report["m"] = opts.m;
  report["seed"] = opts.seed;
  report["inject_fault"] = opts.inject_fault;
  report["report"] = io::to_json(r);
  report["status"] = r.violations() == 0 ? "pass" : "fail";
  return report;
}

int run_degrees(const DegreesOptions& opts, const Output& out) {
  if (opts.n < 0 || opts.n > 5 || opts.N < 0 || opts.N > 12 || opts.m < 0 || opts.m > 4) {
    diag(out) << "error: need 0 <= n <= 5, 0 <= N <= 12, 0 <= m <= 4\n";
    return exit_usage;
  }
  const auto report = degrees_report(opts);
  return emit(report, out, report["status"] == "pass" ? exit_pass : exit_failure);
}

int run_census(const std::string& config_path, const Output& out) {
  CensusExperiment exp;
  try {
    exp = load_census_config(config_path);
  } catch (const ConfigError& e) {
    diag(out) << "config error at " << e.what() << "\n";
    return exit_usage;
  }
  Json outcome;
  try {
    outcome = run_experiment(exp);
  } catch (const lab::CapExceeded& e) {
    diag(out) << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    diag(out) << "error: " << e.what() << "\n";
    return exit_usage;
  }
  bool ok = true;
  for (const auto& a : outcome["assertions"]) ok = ok && a["status"] == "pass";
  Json report = header("census");
  report["config"] = exp.echo;
  report["result"] = std::move(outcome["result"]);
  report["assertions"] = std::move(outcome["assertions"]);
  report["status"] = ok ? "pass" : "fail";
  return emit(report, out, ok ? exit_pass : exit_failure);
}

}  // namespace sdlab::cli
