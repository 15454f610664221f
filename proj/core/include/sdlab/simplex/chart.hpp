#pragma once

#include <vector>

#include "sdlab/simplex/maps.hpp"

namespace sdlab::simplex {

/// Affine coordinates on source and target: an origin vertex and one axis
/// vertex per coordinate (Y_i along v_{axis_i} - v_origin).
struct ChartSpec {
  int source_origin = 0;
  std::vector<int> source_axes;
  int target_origin = 0;
  std::vector<int> target_axes;
};

/// Z = offset + coefficients * Y, with coefficients(j - 1, i - 1) = C^i_j.
struct ChartMatrix {
  PolyMatrix coefficients;
  std::vector<Polynomial> offset;

  bool offset_is_zero() const;
  /// Z_j as polynomials, with Y_i written as T_i (the chart t_0 = 1 - sum t_i).
  std::vector<Polynomial> affine_forms() const;
};

ChartMatrix chart_matrix(const AffineSimplexMap& map, const ChartSpec& spec);

/// Source origin v_0 with axes v_i; target origin v_{sigma(0)} with axes v_{sigma(i)}.
ChartSpec subdivision_chart(int n, const Permutation& sigma);
/// Source origin v_0 with axes v_1..v_{n+1}; target origin v_{sigma(0)} with
/// axes v_{sigma(1)}..v_{sigma(k)}, v_{k+1}..v_n.
ChartSpec homotopy_chart(int n, int k, const Permutation& sigma);

}  // namespace sdlab::simplex
