#pragma once

#include <string>
#include <vector>

#include "sdlab/lab/point_count.hpp"
#include "sdlab/poly/parser.hpp"
#include "sdlab/simplex/maps.hpp"

namespace sdlab::lab {

using poly::CoefficientMode;

/// A closed subset of A^m x Delta^n over F_p, cut out by equations in
/// X1..Xm and T0..Tn (the relation sum T = 1 is implicit).
struct VarietySpec {
  int m = 0;
  int n = 0;
  int t = 0;
  std::vector<Polynomial> equations;
  FieldPtr field;

  CoefficientMode mode() const { return CoefficientMode::finite_field(field); }
  poly::VariableDeclaration declaration() const { return {m, n, 0}; }

  /// Validates the shape and that equations use only declared variables.
  void validate() const;

  /// Parses equation texts over F_p.
  static VarietySpec parse(int m, int n, int t, const std::vector<std::string>& equations, FieldPtr field);

  /// The whole variety in the chart T0 = 1 - (T1 + ... + Tn); slots X1..Xm, T1..Tn.
  PointSystem chart() const;
  /// Restriction to the face spanned by the vertices in `face` (increasing),
  /// with the other T set to 0 and the smallest face coordinate eliminated.
  PointSystem face_chart(const std::vector<int>& face) const;
  /// The fiber over y = (y_0, ..., y_n) in Delta^n(F_p); slots X1..Xm.
  PointSystem fiber(const std::vector<FiniteField::Element>& y) const;
};

/// Rational points of Delta^n over F_p, via the chart t_0 = 1 - sum t_i, in
/// lexicographic order of (t_1, ..., t_n).
std::vector<std::vector<FiniteField::Element>> simplex_points(int n, const FiniteField& field);

/// Pulls V back along an A^m-map Delta^p -> Delta^n: T_i -> sum_j M_ij T_j.
/// The map must be free of C variables; the result lives over Delta^p.
VarietySpec pullback_variety(const VarietySpec& v, const simplex::AffineSimplexMap& map);

}  // namespace sdlab::lab
