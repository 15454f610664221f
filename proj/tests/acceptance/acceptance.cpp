// One line per acceptance criterion; exit status 1 if any line fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "sdlab/cli/census_config.hpp"
#include "sdlab/cli/commands.hpp"
#include "sdlab/lab/dimension.hpp"
#include "sdlab/poly/parser.hpp"
#include "sdlab/relcheck/degrees.hpp"
#include "sdlab/relcheck/relations.hpp"
#include "sdlab/shell/complex.hpp"
#include "sdlab/shell/telescoping.hpp"

using namespace sdlab;

namespace {

// Runtime limits in seconds.
constexpr double kRelationLimit = 120.0;
constexpr double kTelescopingLimit = 300.0;
constexpr double kShellLimit = 60.0;
constexpr double kCensusLimitPerField = 60.0;

constexpr int kRelationMaxN = 4;
constexpr int kTelescopingMaxS = 3;
constexpr std::uint32_t kSpecializeP = 11;
constexpr int kSpecializeDegree = 3;
constexpr std::uint64_t kSpecializeSeeds[] = {1, 2, 3};
constexpr int kShellMaxN = 6;
constexpr int kOracleMinInstances = 20;
constexpr std::uint32_t kOracleMinQ = 5;
constexpr int kOracleE = 3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("%s %s  %s: %s\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string data_path(const std::string& rel) { return std::string(SDLAB_DATA_DIR) + "/" + rel; }

Outcome relation_suite() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::size_t interior = 0;
  for (int n = 0; n <= kRelationMaxN; ++n) {
    const auto family = simplex::CenterFamily::symbolic(n);
    const auto a = relcheck::check_subdivision_relations(n, family);
    const auto b = relcheck::check_patience_relations(n, family);
    instances += a.instances.size() + b.instances.size();
    failed += a.failures() + b.failures();
    for (const auto& r : b.instances) interior += r.relation_id == "h6.interior";
  }
  const double elapsed = seconds_since(start);

  relcheck::PerturbedProvider::Perturbation p;
  p.n = 2;
  p.sigma = {0, 1, 2};
  p.row = 1;
  p.col = 1;
  const relcheck::PerturbedProvider perturbed(simplex::CenterFamily::symbolic(2), p);
  const auto perturbed_failures = relcheck::check_subdivision_relations(2, perturbed).failures() +
                                  relcheck::check_patience_relations(2, perturbed).failures();

  const auto Q = poly::CoefficientMode::rational();
  std::vector<simplex::BarycentricPoint> pts(3);
  pts[0].coords = {poly::Polynomial::constant(Q, 1)};
  pts[1].coords = {poly::Polynomial::constant(Q, 1), poly::Polynomial::constant(Q, 1)};
  pts[2].coords = {poly::Polynomial::constant(Q, 0), poly::Polynomial::constant(Q, 0), poly::Polynomial::constant(Q, 1)};
  const auto corrupt = simplex::CenterFamily::from_points(pts, Q, false);
  const auto corrupt_failures = relcheck::check_subdivision_relations(2, corrupt).failures();

  Outcome out;
  out.pass = failed == 0 && perturbed_failures >= 1 && corrupt_failures >= 1 && elapsed < kRelationLimit;
  out.detail = std::to_string(failed) + " failures / " + std::to_string(instances) + " instances for n<=" +
               std::to_string(kRelationMaxN) + " (face d_k with sigma(k)=k checked as interior face: " +
               std::to_string(interior) + "); negative controls " + std::to_string(perturbed_failures) + ", " +
               std::to_string(corrupt_failures) + " failures; " + fmt(elapsed) + " < " + fmt(kRelationLimit);
  return out;
}

Outcome telescoping() {
  const auto start = std::chrono::steady_clock::now();
  const auto symbolic = simplex::CenterFamily::symbolic(kTelescopingMaxS);
  const auto search = shell::search_conventions(kTelescopingMaxS, symbolic);
  bool identical = search.unique();
  for (int s = 1; s <= kTelescopingMaxS && identical; ++s) {
    identical = search.working[static_cast<std::size_t>(s)] == search.common;
  }
  int specialized = 0;
  int specialized_pass = 0;
  if (search.unique()) {
    const auto f = poly::FiniteField::build(kSpecializeP, 1);
    for (auto seed : kSpecializeSeeds) {
      const auto target = simplex::CenterFamily::sampled(kTelescopingMaxS, 1, kSpecializeDegree, f, seed);
      for (int s = 0; s <= kTelescopingMaxS; ++s) {
        ++specialized;
        specialized_pass += shell::specialization_check(s, search.common.front(), symbolic, target).pass();
      }
    }
  }
  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = identical && specialized > 0 && specialized_pass == specialized && elapsed < kTelescopingLimit;
  out.detail = "convention " + (search.unique() ? search.common.front().to_string() : std::string("not unique")) +
               " unique for 1<=s<=" + std::to_string(kTelescopingMaxS) + "; F_" + std::to_string(kSpecializeP) +
               " specializations " + std::to_string(specialized_pass) + "/" + std::to_string(specialized) + "; " +
               fmt(elapsed) + " < " + fmt(kTelescopingLimit);
  return out;
}

Outcome counting() {
  const auto sd2 = simplex::all_subdivision_maps(2, simplex::CenterFamily::symbolic(2)).size();
  const auto sd3 = simplex::all_subdivision_maps(3, simplex::CenterFamily::symbolic(3)).size();
  const auto h2 = simplex::all_homotopy_maps(2, simplex::CenterFamily::symbolic(2)).size();
  return {sd2 == 6 && sd3 == 24 && h2 == 9, "sd at n=2: " + std::to_string(sd2) + " (6), n=3: " + std::to_string(sd3) +
                                                 " (24); homotopy at n=2: " + std::to_string(h2) + " (9)"};
}

Outcome degree_bounds() {
  const auto mode = poly::CoefficientMode::finite_field(poly::FiniteField::build(kSpecializeP, 1));
  std::size_t charts = 0;
  std::size_t violations = 0;
  std::size_t shape = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int N : {n + 1, n + 2}) {
      const auto family = simplex::CenterFamily::random_polynomial(n, 2, N, mode, static_cast<std::uint64_t>(10 * n + N));
      const auto r = relcheck::degree_report(n, family);
      charts += r.records.size();
      violations += r.violations();
      for (const auto& rec : r.records) {
        if (!(rec.max_t_degree <= 1) || !(rec.max_x_degree <= N)) ++shape;
        if (rec.map == "sd" && !rec.upper_triangular) ++shape;
        if (rec.map != "sd" && (!rec.unit_column || !rec.trailing_identity)) ++shape;
      }
    }
  }
  return {violations == 0 && shape == 0 && charts > 0,
          std::to_string(violations + shape) + " violations over " + std::to_string(charts) +
              " charts (n<=3, N in {n+1, n+2}, random centers over F_11)"};
}

Outcome shell_homology() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 0; n <= kShellMaxN && ok; ++n) {
    const auto sh = shell::build_shell(n);
    const auto h = shell::homology(sh.complex);
    ok = shell::verify_d_squared(sh.complex) && h[0].is_integers() && shell::canonical_map(n).commutes;
    for (int s = 1; s <= n - 1 && ok; ++s) ok = h[static_cast<std::size_t>(s)].is_zero();
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < kShellLimit, std::string(ok ? "H_0 = Z, H_s = 0, can is a chain map" : "mismatch") +
                                          " for n<=" + std::to_string(kShellMaxN) + "; " + fmt(elapsed) + " < " +
                                          fmt(kShellLimit)};
}

Outcome vanishing() {
  const auto square = cli::run_experiment(cli::load_census_config(data_path("census/vanishing_graph_square_q3.json")));
  const auto linear = cli::run_experiment(cli::load_census_config(data_path("census/vanishing_graph_linear_q3.json")));
  const auto& a = square["result"];
  const auto& b = linear["result"];
  const bool ok = a["candidates"] == 9 && a["vanishing"] == 0 && a["bound"] == "1" && a["within_bound"] == true &&
                  b["candidates"] == 9 && b["vanishing"] == 1 && b["bound"] == "1" && b["within_bound"] == true;
  return {ok, "graph(X1^2): " + a["vanishing"].dump() + " <= " + a["bound"].get<std::string>() +
                  "; graph(X1): " + b["vanishing"].dump() + " <= " + b["bound"].get<std::string>() + " (q=3, N=1)"};
}

Outcome bad_centers() {
  bool ok = true;
  std::string detail;
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const auto start = std::chrono::steady_clock::now();
    const auto exp = cli::load_census_config(data_path("census/bad_centers_diagonal_q" + std::to_string(q) + ".json"));
    const auto r = cli::run_experiment(exp)["result"];
    const double elapsed = seconds_since(start);
    const mpq_class id_fraction(r["per_sigma"][0]["bad_fraction"].get<std::string>());
    const mpq_class joint(r["joint"]["bad_fraction"].get<std::string>());
    const mpq_class expect_id(q - 1, q * q);
    const mpq_class expect_joint(1, q);
    const bool field_ok = r["plan"] == "exhaustive" && r["families"] == q * q && id_fraction == expect_id &&
                          joint == expect_joint && elapsed < kCensusLimitPerField;
    ok = ok && field_ok;
    if (!detail.empty()) detail += "; ";
    detail += "q=" + std::to_string(q) + " id " + id_fraction.get_str() + " joint " + joint.get_str() + " " + fmt(elapsed);
  }
  return {ok, detail};
}

Outcome oracle_instances() {
  std::ifstream in(data_path("oracles/dimension_instances.json"));
  const auto doc = nlohmann::json::parse(in);
  int total = 0;
  int exact = 0;
  bool shape_ok = doc["max_e"] == kOracleE;
  for (const auto& inst : doc["instances"]) {
    const std::uint32_t p = inst["p"];
    const int slots = inst["slots"];
    shape_ok = shape_ok && p >= kOracleMinQ;
    const lab::FieldTower tower(p, kOracleE);
    lab::PointSystem sys;
    const auto mode = poly::CoefficientMode::finite_field(tower.base());
    for (const auto& eq : inst["equations"]) {
      sys.equations.push_back(poly::parse_poly(eq.get<std::string>(), {slots, -1, 0}, mode));
    }
    for (int i = 1; i <= slots; ++i) sys.slots.push_back(poly::Variable::X(static_cast<std::uint32_t>(i)));
    const auto est = lab::estimate_dimension(sys, tower, kOracleE);
    ++total;
    exact += est.stable && est.dim == poly::Degree(inst["dim"].get<int>());
  }
  return {shape_ok && total >= kOracleMinInstances && exact == total,
          std::to_string(exact) + "/" + std::to_string(total) + " exact and stable (q>=5, E=3), " +
              std::to_string(total - exact) + " misclassified"};
}

std::string full_suite_bytes() {
  std::string all;
  all += io::dump(cli::relations_report({kRelationMaxN, false}));
  cli::HomotopyOptions h;
  h.max_s = kTelescopingMaxS;
  h.seed = 2024;
  all += io::dump(cli::homotopy_report(h));
  all += io::dump(cli::shell_report(kShellMaxN));
  cli::DegreesOptions d;
  d.n = 3;
  d.N = 4;
  d.seed = 2024;
  all += io::dump(cli::degrees_report(d));
  for (const char* name : {"bad_centers_diagonal_q5.json", "vanishing_graph_square_q3.json",
                           "face_condition_diagonal_q7.json", "homotopy_face_diagonal_q5.json"}) {
    all += io::dump(cli::run_experiment(cli::load_census_config(data_path(std::string("census/") + name))));
  }
  return all;
}

Outcome determinism() {
  const auto first = full_suite_bytes();
  const auto second = full_suite_bytes();
  return {first == second, std::to_string(first.size()) + " report bytes, runs " +
                               (first == second ? "identical" : "differ")};
}

}  // namespace

int main() {
  report("AC1", "relation suite", relation_suite);
  report("AC2", "telescoping", telescoping);
  report("AC3", "counting facts", counting);
  report("AC4", "degree and shape bounds", degree_bounds);
  report("AC5", "shell homology", shell_homology);
  report("AC6", "vanishing census", vanishing);
  report("AC7", "bad-center census", bad_centers);
  report("AC8", "dimension oracle", oracle_instances);
  report("AC9", "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
