#include "sdlab/cli/census_config.hpp"

#include <fstream>
#include <sstream>

#include <gmpxx.h>

namespace sdlab::cli {

using io::Json;

namespace {

const Json& field(const Json& obj, const std::string& at, const char* key) {
  if (!obj.is_object()) throw ConfigError(at.empty() ? "/" : at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(at + "/" + key, "missing required field");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& at, const char* key) {
  if (!obj.is_object()) throw ConfigError(at.empty() ? "/" : at, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::int64_t integer(const Json& j, const std::string& at, std::int64_t lo, std::int64_t hi) {
  if (!j.is_number_integer()) throw ConfigError(at, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < lo || v > hi) {
    throw ConfigError(at, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
  }
  return v;
}

std::string text(const Json& j, const std::string& at) {
  if (!j.is_string()) throw ConfigError(at, "expected a string");
  return j.get<std::string>();
}

lab::Permutation permutation(const Json& j, const std::string& at) {
  if (!j.is_array()) throw ConfigError(at, "expected a permutation array");
  std::vector<int> images;
  for (std::size_t i = 0; i < j.size(); ++i) {
    images.push_back(static_cast<int>(integer(j[i], at + "/" + std::to_string(i), 0, 64)));
  }
  try {
    return lab::Permutation(images);
  } catch (const std::exception& e) {
    throw ConfigError(at, e.what());
  }
}

Experiment experiment_kind(const std::string& s, const std::string& at) {
  if (s == "bad_centers") return Experiment::bad_centers;
  if (s == "vanishing") return Experiment::vanishing;
  if (s == "face_condition") return Experiment::face_condition;
  if (s == "homotopy_face") return Experiment::homotopy_face;
  if (s == "dimension") return Experiment::dimension;
  throw ConfigError(at, "unknown experiment \"" + s + "\"");
}

std::pair<int, int> entry(const Json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(at, "expected [i, j]");
  return {static_cast<int>(integer(j[0], at + "/0", 1, 64)), static_cast<int>(integer(j[1], at + "/1", 0, 63))};
}

}  // namespace

CensusExperiment parse_census_config(const std::string& source) {
  Json root;
  try {
    root = Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw ConfigError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  CensusExperiment exp;
  if (const auto* v = optional_field(root, "", "v")) integer(*v, "/v", 1, 1);
  exp.name = text(field(root, "", "experiment"), "/experiment");
  exp.experiment = experiment_kind(exp.name, "/experiment");

  const auto& f = field(root, "", "field");
  const auto p = integer(field(f, "/field", "p"), "/field/p", 2, 65521);
  if (!poly::is_prime(static_cast<std::uint64_t>(p))) throw ConfigError("/field/p", "not a prime");
  int e_max = 3;
  if (const auto* e = optional_field(f, "/field", "e_max")) e_max = static_cast<int>(integer(*e, "/field/e_max", 2, 8));
  const auto fieldptr = poly::FiniteField::build(static_cast<std::uint32_t>(p), 1);

  const auto& var = field(root, "", "variety");
  const int m = static_cast<int>(integer(field(var, "/variety", "m"), "/variety/m", 0, 16));
  const int n = static_cast<int>(integer(field(var, "/variety", "n"), "/variety/n", 0, 16));
  int t = 0;
  if (const auto* tj = optional_field(var, "/variety", "t")) t = static_cast<int>(integer(*tj, "/variety/t", 0, 64));
  const auto& eqs = field(var, "/variety", "equations");
  if (!eqs.is_array()) throw ConfigError("/variety/equations", "expected an array of polynomial texts");
  std::vector<std::string> eq_text;
  for (std::size_t i = 0; i < eqs.size(); ++i) eq_text.push_back(text(eqs[i], "/variety/equations/" + std::to_string(i)));
  exp.variety = lab::VarietySpec{m, n, t, {}, fieldptr};
  for (std::size_t i = 0; i < eq_text.size(); ++i) {
    try {
      exp.variety.equations.push_back(poly::parse_poly(eq_text[i], exp.variety.declaration(), exp.variety.mode()));
    } catch (const std::exception& e) {
      throw ConfigError("/variety/equations/" + std::to_string(i), e.what());
    }
  }

  auto& cfg = exp.centers;
  cfg.max_e = e_max;
  if (const auto* c = optional_field(root, "", "centers")) {
    if (const auto* N = optional_field(*c, "/centers", "N")) cfg.N = static_cast<int>(integer(*N, "/centers/N", 0, 16));
    if (const auto* mode = optional_field(*c, "/centers", "mode")) {
      const auto s = text(*mode, "/centers/mode");
      if (s == "exhaustive") {
        cfg.plan = lab::SamplePlan::exhaustive;
      } else if (s == "sampled") {
        cfg.plan = lab::SamplePlan::sampled;
      } else {
        throw ConfigError("/centers/mode", "expected \"exhaustive\" or \"sampled\"");
      }
    }
    if (const auto* sz = optional_field(*c, "/centers", "sample_size")) {
      cfg.sample_size = static_cast<std::uint64_t>(integer(*sz, "/centers/sample_size", 0, 1'000'000));
    }
    if (const auto* seed = optional_field(*c, "/centers", "seed")) {
      if (!seed->is_number_unsigned() && !seed->is_number_integer()) throw ConfigError("/centers/seed", "expected an integer");
      cfg.seed = seed->get<std::uint64_t>();
    }
    if (const auto* lam = optional_field(*c, "/centers", "lambda")) {
      if (!lam->is_array()) throw ConfigError("/centers/lambda", "expected a list of [i, j] entries");
      for (std::size_t i = 0; i < lam->size(); ++i) cfg.lambda.push_back(entry((*lam)[i], "/centers/lambda/" + std::to_string(i)));
    }
    if (const auto* fx = optional_field(*c, "/centers", "fixed")) {
      if (!fx->is_array()) throw ConfigError("/centers/fixed", "expected a list of {entry, value}");
      for (std::size_t i = 0; i < fx->size(); ++i) {
        const auto at = "/centers/fixed/" + std::to_string(i);
        cfg.fixed.push_back({entry(field((*fx)[i], at, "entry"), at + "/entry"),
                             static_cast<long>(integer(field((*fx)[i], at, "value"), at + "/value", -1'000'000, 1'000'000))});
      }
    }
  }
  if (const auto* caps = optional_field(root, "", "caps")) {
    if (const auto* me = optional_field(*caps, "/caps", "max_enumeration")) {
      cfg.max_enumeration = static_cast<std::uint64_t>(integer(*me, "/caps/max_enumeration", 1, INT64_MAX));
    }
    if (const auto* mp = optional_field(*caps, "/caps", "max_points")) {
      cfg.max_points = static_cast<std::uint64_t>(integer(*mp, "/caps/max_points", 1, INT64_MAX));
    }
  }

  const Json* sigma = optional_field(root, "", "sigma_set");
  if (sigma == nullptr || (sigma->is_string() && sigma->get<std::string>() == "all")) {
    exp.sigma_set = lab::Permutation::all(n);
  } else if (sigma->is_array()) {
    for (std::size_t i = 0; i < sigma->size(); ++i) {
      const auto at = "/sigma_set/" + std::to_string(i);
      auto s = permutation((*sigma)[i], at);
      if (s.size_param() != n) throw ConfigError(at, "permutation does not act on [n]");
      exp.sigma_set.push_back(std::move(s));
    }
  } else {
    throw ConfigError("/sigma_set", "expected \"all\" or a list of permutation arrays");
  }

  if (const auto* asserts = optional_field(root, "", "assertions")) {
    if (!asserts->is_array()) throw ConfigError("/assertions", "expected an array");
    for (std::size_t i = 0; i < asserts->size(); ++i) {
      const auto at = "/assertions/" + std::to_string(i);
      Assertion a;
      a.path = text(field((*asserts)[i], at, "path"), at + "/path");
      if (const auto* eq = optional_field((*asserts)[i], at, "equals")) a.equals = *eq;
      if (const auto* am = optional_field((*asserts)[i], at, "at_most")) a.at_most = *am;
      if (a.equals.is_null() && a.at_most.is_null()) throw ConfigError(at, "assertion needs \"equals\" or \"at_most\"");
      try {
        (void)Json::json_pointer(a.path);
      } catch (const std::exception&) {
        throw ConfigError(at + "/path", "not a JSON pointer");
      }
      exp.assertions.push_back(std::move(a));
    }
  }

  Json sigmas = Json::array();
  for (const auto& s : exp.sigma_set) sigmas.push_back(s.images());
  Json lambda = Json::array();
  for (const auto& [i, j] : cfg.lambda) lambda.push_back({i, j});
  exp.echo = {{"experiment", exp.name},
              {"field", {{"p", p}, {"e_max", e_max}}},
              {"variety", {{"m", m}, {"n", n}, {"t", t}, {"equations", Json::array()}}},
              {"centers",
               {{"N", cfg.N},
                {"mode", cfg.plan == lab::SamplePlan::exhaustive ? "exhaustive" : "sampled"},
                {"sample_size", cfg.sample_size},
                {"seed", cfg.seed},
                {"lambda", std::move(lambda)}}},
              {"sigma_set", std::move(sigmas)}};
  for (const auto& eq : exp.variety.equations) exp.echo["variety"]["equations"].push_back(eq.to_string());
  return exp;
}

CensusExperiment load_census_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_census_config(buf.str());
}

namespace {

std::optional<mpq_class> as_rational(const Json& j) {
  try {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
    if (j.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>())));
    if (j.is_string()) {
      mpq_class q(j.get<std::string>());
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return q;
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

bool equal_values(const Json& actual, const Json& expected) {
  const auto a = as_rational(actual);
  const auto e = as_rational(expected);
  if (a && e) return *a == *e;
  return actual == expected;
}

bool at_most(const Json& actual, const Json& bound) {
  const auto a = as_rational(actual);
  const auto b = as_rational(bound);
  return a && b && *a <= *b;
}

}  // namespace

Json run_experiment(const CensusExperiment& exp) {
  Json result;
  const auto& v = exp.variety;
  const auto& cfg = exp.centers;
  switch (exp.experiment) {
    case Experiment::bad_centers:
      result = io::to_json(lab::bad_center_census(v, cfg, exp.sigma_set));
      break;
    case Experiment::vanishing:
      result = io::to_json(lab::vanishing_census(v, cfg.N, cfg.max_e, cfg.max_points), v.field->characteristic(), cfg.N);
      break;
    case Experiment::face_condition: {
      const lab::FieldTower tower(v.field->characteristic(), cfg.max_e);
      result = io::to_json(lab::face_condition_check(v, tower, cfg.max_e, cfg.max_points));
      break;
    }
    case Experiment::homotopy_face:
      result = io::to_json(lab::homotopy_face_condition_check(v, cfg));
      break;
    case Experiment::dimension: {
      const lab::FieldTower tower(v.field->characteristic(), cfg.max_e);
      result = io::to_json(lab::estimate_dimension(v.chart(), tower, cfg.max_e, cfg.max_points));
      break;
    }
  }
  Json checks = Json::array();
  for (const auto& a : exp.assertions) {
    const Json::json_pointer ptr(a.path);
    Json actual;
    bool pass = result.contains(ptr);
    if (pass) actual = result.at(ptr);
    if (pass && !a.equals.is_null()) pass = equal_values(actual, a.equals);
    if (pass && !a.at_most.is_null()) pass = at_most(actual, a.at_most);
    Json check = {{"path", a.path}};
    if (!a.equals.is_null()) check["equals"] = a.equals;
    if (!a.at_most.is_null()) check["at_most"] = a.at_most;
    check["actual"] = actual;
    check["status"] = pass ? "pass" : "fail";
    checks.push_back(std::move(check));
  }
  return {{"result", std::move(result)}, {"assertions", std::move(checks)}};
}

}  // namespace sdlab::cli
