#include "sdlab/lab/dimension.hpp"

#include <cmath>
#include <stdexcept>

namespace sdlab::lab {

Degree dimension_from_count(std::uint64_t count, std::uint64_t q, int e) {
  if (count == 0) return Degree::neg_inf();
  const double d = std::log(static_cast<double>(count)) / (e * std::log(static_cast<double>(q)));
  return Degree(static_cast<int>(std::lround(d)));
}

DimensionEstimate estimate_dimension(const PointSystem& system, const FieldTower& tower, int max_e,
                                     std::uint64_t cap) {
  if (max_e < 2) throw std::invalid_argument("dimension estimation needs at least two extension degrees");
  const std::uint64_t q = tower.characteristic();
  DimensionEstimate est;
  for (int e = 1; e <= max_e; ++e) est.counts.push_back(count_points(system, tower, e, cap));
  for (int e = max_e; e >= 1; --e) {
    if (est.counts[static_cast<std::size_t>(e - 1)] > 0) {
      est.dim = dimension_from_count(est.counts[static_cast<std::size_t>(e - 1)], q, e);
      break;
    }
  }
  const auto top = dimension_from_count(est.counts[static_cast<std::size_t>(max_e - 1)], q, max_e);
  const auto next = dimension_from_count(est.counts[static_cast<std::size_t>(max_e - 2)], q, max_e - 1);
  est.stable = top == next;
  return est;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unstable: return "unstable";
  }
  return "?";
}

CheckStatus combine(CheckStatus a, CheckStatus b) {
  if (a == CheckStatus::fail || b == CheckStatus::fail) return CheckStatus::fail;
  if (a == CheckStatus::unstable || b == CheckStatus::unstable) return CheckStatus::unstable;
  return CheckStatus::pass;
}

namespace {

void faces_of_size(int n, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> face(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) face[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(face);
    int i = size - 1;
    while (i >= 0 && face[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
    if (i < 0) return;
    ++face[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) face[static_cast<std::size_t>(j)] = face[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

FaceConditionReport face_condition_check(const VarietySpec& v, const FieldTower& tower, int max_e,
                                         std::uint64_t cap) {
  FaceConditionReport report;
  report.total = estimate_dimension(v.chart(), tower, max_e, cap);
  if (!report.total.stable) report.status = CheckStatus::unstable;
  std::vector<std::vector<int>> faces;
  for (int size = 1; size <= v.n; ++size) faces_of_size(v.n, size, faces);
  for (auto& face : faces) {
    FaceResult r;
    const int codim = v.n - (static_cast<int>(face.size()) - 1);
    r.estimate = estimate_dimension(v.face_chart(face), tower, max_e, cap);
    r.bound = report.total.empty() ? Degree::neg_inf() : Degree(report.total.dim.value() - codim);
    r.empty = r.estimate.empty() && r.estimate.stable;
    if (r.empty) {
      r.status = CheckStatus::pass;
    } else if (!r.estimate.stable || !report.total.stable) {
      r.status = CheckStatus::unstable;
    } else {
      r.status = r.estimate.dim <= r.bound ? CheckStatus::pass : CheckStatus::fail;
    }
    r.face = std::move(face);
    report.status = combine(report.status, r.status);
    report.faces.push_back(std::move(r));
  }
  return report;
}

EquidimReport equidim_check(const VarietySpec& v, const FieldTower& tower, int max_e, std::uint64_t cap) {
  EquidimReport report;
  for (const auto& y : simplex_points(v.n, *tower.base())) {
    const auto est = estimate_dimension(v.fiber(y), tower, max_e, cap);
    ++report.fibers;
    if (est.empty() && est.stable) {
      ++report.empty_fibers;
      continue;
    }
    report.max_fiber_dim = poly::max(report.max_fiber_dim, est.dim);
    if (!est.stable) {
      ++report.unstable_fibers;
    } else if (est.dim > v.t) {
      ++report.bad_fibers;
    }
  }
  if (report.bad_fibers > 0) {
    report.status = CheckStatus::fail;
  } else if (report.unstable_fibers > 0) {
    report.status = CheckStatus::unstable;
  }
  return report;
}

}  // namespace sdlab::lab
