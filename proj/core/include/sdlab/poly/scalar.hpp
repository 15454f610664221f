#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

#include "sdlab/poly/finite_field.hpp"

namespace sdlab::poly {

using Rational = mpq_class;
using Integer = mpz_class;

class IncompatibleModes : public std::invalid_argument {
 public:
  IncompatibleModes() : std::invalid_argument("incompatible coefficient modes") {}
};

/// An exact rational (kept canonical) or an element of a finite field.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }
  Scalar(FieldPtr field, FiniteField::Element e) : value_(FieldValue{std::move(field), e}) {}

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const FieldPtr& field() const { return std::get<FieldValue>(value_).field; }
  FiniteField::Element element() const { return std::get<FieldValue>(value_).e; }

  bool is_zero() const;
  bool is_one() const;
  /// True for a negative rational; finite-field values are never negative.
  bool is_negative() const { return is_rational() && sgn(rational()) < 0; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar inverse() const;
  Scalar abs() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct FieldValue {
    FieldPtr field;
    FiniteField::Element e;
  };
  std::variant<Rational, FieldValue> value_;
};

/// Which ring the coefficients live in: Q, or a finite field.
class CoefficientMode {
 public:
  CoefficientMode() = default;
  static CoefficientMode rational() { return {}; }
  static CoefficientMode finite_field(FieldPtr field) { return CoefficientMode(std::move(field)); }

  bool is_rational() const { return field_ == nullptr; }
  const FieldPtr& field() const { return field_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  /// Reduces a rational into this mode; throws std::domain_error if the
  /// denominator vanishes in the field.
  Scalar from_rational(const Rational& q) const;
  /// Maps a scalar of another mode into this one (rationals reduce, fields must match).
  Scalar convert(const Scalar& s) const;
  bool holds(const Scalar& s) const;

  friend bool operator==(const CoefficientMode& a, const CoefficientMode& b);
  std::string to_string() const;

 private:
  explicit CoefficientMode(FieldPtr f) : field_(std::move(f)) {}
  FieldPtr field_;
};

}  // namespace sdlab::poly
