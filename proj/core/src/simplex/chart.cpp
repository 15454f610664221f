#include "sdlab/simplex/chart.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdlab::simplex {

namespace {

void check_frame(int origin, const std::vector<int>& axes, int dim, const char* side) {
  std::vector<int> all = axes;
  all.push_back(origin);
  std::sort(all.begin(), all.end());
  const bool complete = static_cast<int>(all.size()) == dim + 1 && all.front() == 0 && all.back() == dim &&
                        std::adjacent_find(all.begin(), all.end()) == all.end();
  if (!complete) throw std::invalid_argument(std::string("degenerate chart on the ") + side);
}

}  // namespace

bool ChartMatrix::offset_is_zero() const {
  return std::all_of(offset.begin(), offset.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Polynomial> ChartMatrix::affine_forms() const {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < coefficients.rows(); ++j) {
    Polynomial z = offset[j];
    for (std::size_t i = 0; i < coefficients.cols(); ++i) {
      z += coefficients(j, i) *
           Polynomial::variable(coefficients.mode(), poly::Variable::T(static_cast<std::uint32_t>(i + 1)));
    }
    out.push_back(std::move(z));
  }
  return out;
}

ChartMatrix chart_matrix(const AffineSimplexMap& map, const ChartSpec& spec) {
  check_frame(spec.source_origin, spec.source_axes, map.source_dim(), "source");
  check_frame(spec.target_origin, spec.target_axes, map.target_dim(), "target");
  const auto& m = map.matrix();
  const auto so = static_cast<std::size_t>(spec.source_origin);
  // In the target frame, the coordinate along v_a - v_origin of a barycentric
  // point is its a-th barycentric coordinate.
  PolyMatrix coeffs(spec.target_axes.size(), spec.source_axes.size(), map.mode());
  std::vector<Polynomial> offset;
  for (std::size_t j = 0; j < spec.target_axes.size(); ++j) {
    const auto row = static_cast<std::size_t>(spec.target_axes[j]);
    offset.push_back(m(row, so));
    for (std::size_t i = 0; i < spec.source_axes.size(); ++i) {
      coeffs(j, i) = m(row, static_cast<std::size_t>(spec.source_axes[i])) - m(row, so);
    }
  }
  return ChartMatrix{std::move(coeffs), std::move(offset)};
}

ChartSpec subdivision_chart(int n, const Permutation& sigma) {
  ChartSpec spec;
  spec.source_origin = 0;
  spec.target_origin = sigma(0);
  for (int i = 1; i <= n; ++i) {
    spec.source_axes.push_back(i);
    spec.target_axes.push_back(sigma(i));
  }
  return spec;
}

ChartSpec homotopy_chart(int n, int k, const Permutation& sigma) {
  ChartSpec spec;
  spec.source_origin = 0;
  spec.target_origin = sigma(0);
  for (int i = 1; i <= n + 1; ++i) spec.source_axes.push_back(i);
  for (int i = 1; i <= k; ++i) spec.target_axes.push_back(sigma(i));
  for (int i = k + 1; i <= n; ++i) spec.target_axes.push_back(i);
  return spec;
}

}  // namespace sdlab::simplex
