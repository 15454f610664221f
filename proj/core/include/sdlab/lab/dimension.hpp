#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdlab/lab/variety.hpp"
#include "sdlab/poly/degree.hpp"

namespace sdlab::lab {

using poly::Degree;

struct DimensionEstimate {
  std::vector<std::uint64_t> counts;  // counts[e - 1] = N_e
  Degree dim;                         // -inf iff every count is 0
  bool stable = false;

  bool empty() const { return dim.is_neg_inf(); }
};

/// round(log N_e / (e log q)), or -inf for N_e = 0.
Degree dimension_from_count(std::uint64_t count, std::uint64_t q, int e);

/// Point counts for e = 1..E; the estimate uses the largest e with N_e > 0
/// and is stable when the estimates at e = E and e = E - 1 agree.
DimensionEstimate estimate_dimension(const PointSystem& system, const FieldTower& tower, int max_e,
                                     std::uint64_t cap = default_enumeration_cap);

enum class CheckStatus { pass, fail, unstable };
const char* to_string(CheckStatus s);

struct FaceResult {
  std::vector<int> face;
  DimensionEstimate estimate;
  Degree bound;        // dim(V) - (n - n')
  bool empty = false;  // empty intersections count as a pass
  CheckStatus status = CheckStatus::pass;
};

struct FaceConditionReport {
  DimensionEstimate total;
  std::vector<FaceResult> faces;  // proper faces, by size then lexicographically
  CheckStatus status = CheckStatus::pass;
};

FaceConditionReport face_condition_check(const VarietySpec& v, const FieldTower& tower, int max_e,
                                         std::uint64_t cap = default_enumeration_cap);

struct EquidimReport {
  std::size_t fibers = 0;
  std::size_t empty_fibers = 0;
  std::size_t bad_fibers = 0;       // stable estimate above t
  std::size_t unstable_fibers = 0;  // not stable, not counted as bad
  Degree max_fiber_dim;
  CheckStatus status = CheckStatus::pass;
};

/// Estimates the fiber over every y in Delta^n(F_p) and compares with t.
EquidimReport equidim_check(const VarietySpec& v, const FieldTower& tower, int max_e,
                            std::uint64_t cap = default_enumeration_cap);

/// Merges statuses: fail dominates unstable, which dominates pass.
CheckStatus combine(CheckStatus a, CheckStatus b);

}  // namespace sdlab::lab
