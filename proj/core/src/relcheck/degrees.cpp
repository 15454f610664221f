#include "sdlab/relcheck/degrees.hpp"

#include <algorithm>

namespace sdlab::relcheck {

using poly::Block;
using poly::Degree;
using poly::Polynomial;
using simplex::ChartMatrix;

std::size_t DegreeReport::violations() const {
  std::size_t v = 0;
  for (const auto& r : records) v += r.violations.size();
  return v;
}

std::size_t DegreeReport::unit_at_origin_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const ChartRecord& r) { return r.unit_at_origin; }));
}

namespace {

void fill_degrees(ChartRecord& rec, const ChartMatrix& chart, int degree_bound, const DegreeOptions& options) {
  auto forms = chart.affine_forms();
  if (options.inject_t_degree_fault && !forms.empty()) {
    forms.front() += Polynomial::variable(forms.front().mode(), poly::Variable::T(1)).pow(2);
  }
  for (const auto& z : forms) rec.max_t_degree = poly::max(rec.max_t_degree, z.block_degree(Block::T));
  for (std::size_t j = 0; j < chart.coefficients.rows(); ++j) {
    rec.max_x_degree = poly::max(rec.max_x_degree, chart.offset[j].block_degree(Block::X));
    for (std::size_t i = 0; i < chart.coefficients.cols(); ++i) {
      rec.max_x_degree = poly::max(rec.max_x_degree, chart.coefficients(j, i).block_degree(Block::X));
    }
  }
  rec.offset_zero = chart.offset_is_zero();
  if (!(rec.max_t_degree <= 1)) rec.violations.push_back("T-degree " + rec.max_t_degree.to_string() + " > 1");
  if (degree_bound >= 0 && !(rec.max_x_degree <= degree_bound)) {
    rec.violations.push_back("X-degree " + rec.max_x_degree.to_string() + " > " + std::to_string(degree_bound));
  }
  if (!rec.offset_zero) rec.violations.push_back("nonzero affine offset");
}

bool is_one(const Polynomial& p) { return p == Polynomial::constant(p.mode(), 1); }

}  // namespace

ChartRecord subdivision_chart_record(int n, const simplex::Permutation& sigma, const simplex::CenterFamily& family,
                                     int degree_bound, const DegreeOptions& options) {
  ChartRecord rec;
  rec.map = "sd";
  rec.n = n;
  rec.sigma = sigma.images();
  const auto map = simplex::subdivision_map(n, sigma, family);
  const auto chart = simplex::chart_matrix(map, simplex::subdivision_chart(n, sigma));
  fill_degrees(rec, chart, degree_bound, options);
  // Row j - 1 holds Z_j, column i - 1 holds C^i_j; zero whenever i < j.
  rec.upper_triangular = true;
  for (std::size_t j = 0; j < chart.coefficients.rows(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!chart.coefficients(j, i).is_zero()) rec.upper_triangular = false;
    }
  }
  if (!rec.upper_triangular) rec.violations.push_back("subdivision chart not upper triangular");
  return rec;
}

ChartRecord homotopy_chart_record(int n, int k, const simplex::Permutation& sigma, const simplex::CenterFamily& family,
                                  int degree_bound, const DegreeOptions& options) {
  ChartRecord rec;
  rec.map = "pr1_h";
  rec.n = n;
  rec.k = k;
  rec.sigma = sigma.images();
  const auto map = simplex::first_projection(simplex::homotopy_map(n, k, sigma, family));
  const auto chart = simplex::chart_matrix(map, simplex::homotopy_chart(n, k, sigma));
  fill_degrees(rec, chart, degree_bound, options);
  const auto& c = chart.coefficients;  // n x (n + 1)
  const auto kk = static_cast<std::size_t>(k);

  rec.upper_triangular = true;
  for (std::size_t i = 0; i < kk; ++i) {
    for (std::size_t j = i + 1; j < c.rows(); ++j) {
      if (!c(j, i).is_zero()) rec.upper_triangular = false;
    }
  }
  if (!rec.upper_triangular) rec.violations.push_back("center block not upper triangular");

  const int unit_row = sigma.inverse()(k);
  rec.unit_at_origin = unit_row == 0;
  for (std::size_t j = 0; j < c.rows(); ++j) {
    const bool expect_one = unit_row >= 1 && j + 1 == static_cast<std::size_t>(unit_row);
    if (expect_one ? !is_one(c(j, kk)) : !c(j, kk).is_zero()) rec.unit_column = false;
  }
  if (!rec.unit_column) rec.violations.push_back("column k+1 is not the unit vector at row sigma^-1(k)");

  for (std::size_t i = kk + 1; i < c.cols(); ++i) {
    for (std::size_t j = 0; j < c.rows(); ++j) {
      const bool expect_one = j + 1 == i;
      if (expect_one ? !is_one(c(j, i)) : !c(j, i).is_zero()) rec.trailing_identity = false;
    }
  }
  if (!rec.trailing_identity) rec.violations.push_back("trailing block is not the identity");
  return rec;
}

DegreeReport degree_report(int n, const simplex::CenterFamily& family, const DegreeOptions& options) {
  DegreeReport report;
  report.n = n;
  report.degree_bound = family.degree_bound();
  for (const auto& sigma : simplex::Permutation::all(n)) {
    report.records.push_back(subdivision_chart_record(n, sigma, family, family.degree_bound(), options));
  }
  for (int k = 0; k <= n; ++k) {
    for (const auto& sigma : simplex::Permutation::all(k)) {
      report.records.push_back(homotopy_chart_record(n, k, sigma, family, family.degree_bound(), options));
    }
  }
  return report;
}

}  // namespace sdlab::relcheck
