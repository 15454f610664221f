#pragma once

#include <string>
#include <vector>

#include "sdlab/poly/degree.hpp"
#include "sdlab/simplex/chart.hpp"

namespace sdlab::relcheck {

/// Degree and shape facts for one chart of sd_n^sigma or pr_1 o sd_{n,k}^sigma.
struct ChartRecord {
  std::string map;  // "sd" or "pr1_h"
  int n = 0;
  int k = -1;
  std::vector<int> sigma;
  poly::Degree max_t_degree;  // of the affine forms Z_j in Y (= T_1..T_p)
  poly::Degree max_x_degree;  // of the chart entries
  bool offset_zero = false;
  bool upper_triangular = false;
  /// Homotopy charts only: column k+1 is the unit vector at row sigma^{-1}(k),
  /// which is the zero column when sigma^{-1}(k) = 0 (the target origin).
  bool unit_column = true;
  bool unit_at_origin = false;
  bool trailing_identity = true;
  std::vector<std::string> violations;
};

struct DegreeReport {
  int n = 0;
  int degree_bound = 0;
  std::vector<ChartRecord> records;
  std::size_t violations() const;
  /// Charts whose unit column sits at the origin row (reported, not a violation).
  std::size_t unit_at_origin_count() const;
};

struct DegreeOptions {
  /// Negative control: adds T1^2 to the first affine form of every chart.
  bool inject_t_degree_fault = false;
};

ChartRecord subdivision_chart_record(int n, const simplex::Permutation& sigma, const simplex::CenterFamily& family,
                                     int degree_bound, const DegreeOptions& options = {});
ChartRecord homotopy_chart_record(int n, int k, const simplex::Permutation& sigma,
                                  const simplex::CenterFamily& family, int degree_bound,
                                  const DegreeOptions& options = {});

/// Every subdivision and homotopy chart at level n.
DegreeReport degree_report(int n, const simplex::CenterFamily& family, const DegreeOptions& options = {});

}  // namespace sdlab::relcheck
