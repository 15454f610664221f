#include "sdlab/shell/telescoping.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdlab::shell {

using simplex::Permutation;

namespace {

long parity(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::string SignConvention::to_string() const {
  auto sign = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return "(" + sign(epsilon) + ", " + sign(lambda) + ")";
}

std::vector<SignConvention> all_conventions() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

HomotopySides homotopy_sides(int s, const CenterFamily& family) {
  if (s < 0 || s > family.n_max()) throw std::invalid_argument("homotopy degree out of range");
  const auto& mode = family.coefficients();
  HomotopySides sides;
  for (int k = 0; k <= s; ++k) {
    for (const auto& sigma : Permutation::all(k)) {
      const auto pr = simplex::first_projection(simplex::homotopy_map(s, k, sigma, family));
      for (int i = 0; i <= s + 1; ++i) {
        sides.d_of_h.add(pr * simplex::face_map(i, s + 1, mode), sigma.sign() * parity(k) * parity(i));
        ++sides.d_of_h_terms;
      }
    }
  }
  for (int j = 0; j <= s && s >= 1; ++j) {
    const auto face = simplex::face_map(j, s, mode);
    for (int k = 0; k <= s - 1; ++k) {
      for (const auto& sigma : Permutation::all(k)) {
        const auto pr = simplex::first_projection(simplex::homotopy_map(s - 1, k, sigma, family));
        sides.h_of_d.add(face * pr, parity(j) * sigma.sign() * parity(k));
        ++sides.h_of_d_terms;
      }
    }
  }
  return sides;
}

FormalMapSum canonical_minus_subdivision(int s, const CenterFamily& family) {
  FormalMapSum out;
  out.add(simplex::identity_map(s, family.coefficients()), 1);
  for (const auto& sigma : Permutation::all(s)) {
    out.add(simplex::subdivision_map(s, sigma, family), -sigma.sign());
  }
  return out;
}

namespace {

TelescopingReport assemble(int s, int n, const HomotopySides& sides, const FormalMapSum& target,
                           SignConvention convention) {
  TelescopingReport report;
  report.s = s;
  report.n = n;
  report.convention = convention;
  report.pre_reduction_terms = sides.d_of_h_terms + sides.h_of_d_terms;
  report.boundary = sides.d_of_h + sides.h_of_d.scaled(convention.epsilon);
  report.residual = report.boundary - target.scaled(convention.lambda);
  return report;
}

}  // namespace

TelescopingReport homotopy_boundary(int s, int n, const CenterFamily& family, SignConvention convention) {
  if (s > n) throw std::invalid_argument("homotopy degree exceeds ambient dimension");
  return assemble(s, n, homotopy_sides(s, family), canonical_minus_subdivision(s, family), convention);
}

ConventionSearch search_conventions(int max_s, const CenterFamily& family) {
  ConventionSearch search;
  search.common = all_conventions();
  for (int s = 0; s <= max_s; ++s) {
    const auto sides = homotopy_sides(s, family);
    const auto target = canonical_minus_subdivision(s, family);
    std::vector<SignConvention> ok;
    for (const auto& c : all_conventions()) {
      if (assemble(s, max_s, sides, target, c).telescopes()) ok.push_back(c);
    }
    std::vector<SignConvention> common;
    std::set_intersection(search.common.begin(), search.common.end(), ok.begin(), ok.end(),
                          std::back_inserter(common), std::greater<>());
    search.common = std::move(common);
    search.working.push_back(std::move(ok));
  }
  return search;
}

SpecializationCheck specialization_check(int s, SignConvention convention, const CenterFamily& symbolic,
                                         const CenterFamily& target) {
  SpecializationCheck check;
  check.s = s;
  const auto& mode = target.coefficients();
  const auto assignment = target.specialization();

  const auto sides = homotopy_sides(s, symbolic);
  const auto sym = assemble(s, s, sides, canonical_minus_subdivision(s, symbolic), convention);
  check.symbolic_telescopes = sym.telescopes();
  check.specialized_telescopes = sym.residual.converted(mode).substitute(assignment).empty();

  const auto direct = homotopy_boundary(s, s, target, convention);
  check.direct_telescopes = direct.telescopes();
  check.boundaries_agree = sym.boundary.converted(mode).substitute(assignment) == direct.boundary;
  return check;
}

}  // namespace sdlab::shell
