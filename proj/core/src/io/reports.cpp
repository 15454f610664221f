#include "sdlab/io/reports.hpp"

#include <gmpxx.h>

#include "sdlab/simplex/serialize.hpp"

namespace sdlab::io {

std::string fraction(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return "0";
  mpq_class q(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  q.canonicalize();
  return q.get_str();
}

namespace {

Json degree_json(poly::Degree d) {
  if (d.is_neg_inf()) return "-inf";
  return d.value();
}

}  // namespace

Json to_json(const relcheck::RelationInstance& r) {
  return {{"relation_id", r.relation_id}, {"n", r.n},           {"k", r.k},
          {"sigma", r.sigma},             {"face", r.face},     {"status", r.pass ? "pass" : "fail"},
          {"entry", r.entry},             {"lhs_minus_rhs", r.lhs_minus_rhs}};
}

Json to_json(const relcheck::RelationReport& r) {
  Json instances = Json::array();
  for (const auto& i : r.instances) instances.push_back(to_json(i));
  return {{"instances", r.instances.size()}, {"failures", r.failures()}, {"results", std::move(instances)}};
}

Json to_json(const relcheck::ChartRecord& r) {
  return {{"map", r.map},
          {"n", r.n},
          {"k", r.k},
          {"sigma", r.sigma},
          {"max_t_degree", degree_json(r.max_t_degree)},
          {"max_x_degree", degree_json(r.max_x_degree)},
          {"offset_zero", r.offset_zero},
          {"upper_triangular", r.upper_triangular},
          {"unit_column", r.unit_column},
          {"unit_at_origin", r.unit_at_origin},
          {"trailing_identity", r.trailing_identity},
          {"violations", r.violations}};
}

Json to_json(const relcheck::DegreeReport& r) {
  Json records = Json::array();
  for (const auto& c : r.records) records.push_back(to_json(c));
  return {{"n", r.n},
          {"N", r.degree_bound},
          {"charts", r.records.size()},
          {"violations", r.violations()},
          {"unit_at_origin", r.unit_at_origin_count()},
          {"records", std::move(records)}};
}

Json to_json(const shell::HomologyGroup& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.get_str());
  return {{"rank", h.free_rank}, {"torsion", std::move(torsion)}, {"group", h.to_string()}};
}

Json to_json(const shell::FormalMapSum& sum) {
  Json terms = Json::array();
  for (const auto& t : sum.terms()) terms.push_back({{"coeff", t.coeff}, {"map", simplex::to_json(t.map)}});
  return terms;
}

Json to_json(const shell::SignConvention& c) { return {{"epsilon", c.epsilon}, {"lambda", c.lambda}}; }

Json to_json(const shell::TelescopingReport& r) {
  return {{"s", r.s},
          {"n", r.n},
          {"convention", to_json(r.convention)},
          {"pre_reduction_terms", r.pre_reduction_terms},
          {"boundary_terms", r.boundary.size()},
          {"residual_terms", to_json(r.residual)},
          {"status", r.telescopes() ? "pass" : "fail"}};
}

Json to_json(const lab::DimensionEstimate& d) {
  return {{"counts", d.counts}, {"dim", degree_json(d.dim)}, {"stable", d.stable}};
}

Json to_json(const lab::FaceConditionReport& r) {
  Json faces = Json::array();
  for (const auto& f : r.faces) {
    faces.push_back({{"face", f.face},
                     {"estimate", to_json(f.estimate)},
                     {"bound", degree_json(f.bound)},
                     {"empty", f.empty},
                     {"status", lab::to_string(f.status)}});
  }
  return {{"total", to_json(r.total)}, {"faces", std::move(faces)}, {"status", lab::to_string(r.status)}};
}

Json to_json(const lab::EquidimReport& r) {
  return {{"fibers", r.fibers},
          {"empty_fibers", r.empty_fibers},
          {"bad_fibers", r.bad_fibers},
          {"unstable_fibers", r.unstable_fibers},
          {"max_fiber_dim", degree_json(r.max_fiber_dim)},
          {"status", lab::to_string(r.status)}};
}

Json to_json(const lab::BadCenterReport& r) {
  Json per_sigma = Json::array();
  for (const auto& s : r.per_sigma) {
    per_sigma.push_back({{"sigma", s.sigma.images()},
                         {"bad", s.bad},
                         {"unstable", s.unstable},
                         {"bad_fraction", fraction(s.bad, r.families)}});
  }
  return {{"families", r.families},
          {"plan", r.exhaustive ? "exhaustive" : "sampled"},
          {"parameters", r.parameter_count},
          {"per_sigma", std::move(per_sigma)},
          {"joint", {{"bad", r.joint_bad}, {"unstable", r.joint_unstable},
                     {"bad_fraction", fraction(r.joint_bad, r.families)}}},
          {"within_hypothesis", r.within_hypothesis},
          {"heuristic", !r.within_hypothesis},
          {"note", r.note}};
}

Json to_json(const lab::VanishingReport& r, std::uint32_t q, int N) {
  std::uint64_t scale = 1;
  for (int i = 0; i <= N; ++i) scale *= q;
  return {{"candidates", r.candidates},
          {"vanishing", r.vanishing},
          {"bound", fraction(r.candidates, scale)},
          {"within_bound", r.within_bound},
          {"points", r.points},
          {"projection_is_point", r.projection_is_point},
          {"empty_inverse_image", r.empty_inverse_image},
          {"w_empty", r.w_empty}};
}

Json to_json(const lab::HomotopyFaceReport& r) {
  return {{"families", r.families},
          {"passing", r.passing},
          {"unstable", r.unstable},
          {"maps_per_family", r.maps_per_family},
          {"pass_fraction", fraction(r.passing, r.families)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sdlab::io
