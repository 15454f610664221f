#pragma once

#include <cstdint>
#include <vector>

#include "sdlab/poly/polynomial.hpp"

namespace sdlab::simplex {

using poly::CoefficientMode;
using poly::Polynomial;

/// A point of the simplex over the coefficient ring: n + 1 coordinates.
struct BarycentricPoint {
  std::vector<Polynomial> coords;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  bool sums_to_one() const;
};

enum class CenterMode { symbolic, polynomial, sampled, explicit_points };

const char* to_string(CenterMode mode);

/// The centers c^0, ..., c^{n_max}. Coordinates j < i of c^i are free; the
/// last one is always stored as 1 - (sum of the others).
class CenterFamily {
 public:
  /// c^i_j = C<i>_<j> over Q.
  static CenterFamily symbolic(int n_max);
  /// Free coordinates are random polynomials in X1..Xm of degree <= bound.
  /// Over Q the coefficients are small integers in [-4, 4].
  static CenterFamily random_polynomial(int n_max, int m, int degree_bound, const CoefficientMode& mode,
                                        std::uint64_t seed);
  static CenterFamily sampled(int n_max, int m, int degree_bound, poly::FieldPtr field, std::uint64_t seed);
  /// free_coords[i - 1] lists the i free coordinates of c^i.
  static CenterFamily from_free_coordinates(const std::vector<std::vector<Polynomial>>& free_coords,
                                            const CoefficientMode& mode, CenterMode tag, int m = 0,
                                            int degree_bound = -1);
  /// Arbitrary points; validation can be skipped to build negative controls.
  static CenterFamily from_points(std::vector<BarycentricPoint> points, const CoefficientMode& mode,
                                  bool validate = true);

  int n_max() const { return static_cast<int>(centers_.size()) - 1; }
  CenterMode mode() const { return mode_; }
  const CoefficientMode& coefficients() const { return coeffs_; }
  int base_dim() const { return m_; }
  int degree_bound() const { return degree_bound_; }
  std::uint64_t seed() const { return seed_; }

  const BarycentricPoint& center(int i) const;
  bool is_barycentric() const;

  /// C<i>_<j> -> c^i_j of this family, for specializing symbolic identities.
  poly::Assignment specialization() const;

 private:
  CenterFamily() = default;

  std::vector<BarycentricPoint> centers_;
  CenterMode mode_ = CenterMode::symbolic;
  CoefficientMode coeffs_;
  int m_ = 0;
  int degree_bound_ = -1;
  std::uint64_t seed_ = 0;
};

}  // namespace sdlab::simplex
