#include "sdlab/poly/scalar.hpp"

namespace sdlab::poly {

namespace {

const FiniteField& common_field(const Scalar& a, const Scalar& b) {
  if (a.is_rational() || b.is_rational()) throw IncompatibleModes();
  if (a.field() != b.field() && !a.field()->same_as(*b.field())) throw IncompatibleModes();
  return *a.field();
}

}  // namespace

bool Scalar::is_zero() const { return is_rational() ? sgn(rational()) == 0 : element() == 0; }

bool Scalar::is_one() const { return is_rational() ? rational() == 1 : element() == 1; }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  return Scalar(field(), field()->neg(element()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
  const auto& f = common_field(a, b);
  return Scalar(a.field(), f.add(a.element(), b.element()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() - b.rational()));
  const auto& f = common_field(a, b);
  return Scalar(a.field(), f.sub(a.element(), b.element()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
  const auto& f = common_field(a, b);
  return Scalar(a.field(), f.mul(a.element(), b.element()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(Rational(1 / rational()));
  return Scalar(field(), field()->inv(element()));
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return a.element() == b.element() && a.field()->same_as(*b.field());
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_rational()) {
    const int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.element() <=> b.element();
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return field()->to_string(element());
}

Scalar CoefficientMode::zero() const { return from_int(0); }
Scalar CoefficientMode::one() const { return from_int(1); }

Scalar CoefficientMode::from_int(long v) const {
  if (is_rational()) return Scalar(Rational(v));
  return Scalar(field_, field_->from_int(v));
}

Scalar CoefficientMode::from_rational(const Rational& q) const {
  if (is_rational()) return Scalar(q);
  const Integer p = field_->characteristic();
  const Integer num = q.get_num() % p;
  const Integer den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in F_" + p.get_str());
  const auto n = field_->from_int(num.get_si());
  const auto d = field_->from_int(den.get_si());
  return Scalar(field_, field_->mul(n, field_->inv(d)));
}

Scalar CoefficientMode::convert(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_rational()) throw IncompatibleModes();
  if (s.field()->same_as(*field_)) return Scalar(field_, s.element());
  // Prime-subfield values embed into any extension of the same characteristic.
  if (s.field()->characteristic() == field_->characteristic() && s.field()->in_prime_field(s.element())) {
    return Scalar(field_, s.element());
  }
  throw IncompatibleModes();
}

bool CoefficientMode::holds(const Scalar& s) const {
  if (is_rational()) return s.is_rational();
  return !s.is_rational() && s.field()->same_as(*field_);
}

bool operator==(const CoefficientMode& a, const CoefficientMode& b) {
  if (a.is_rational() || b.is_rational()) return a.is_rational() == b.is_rational();
  return a.field_ == b.field_ || a.field_->same_as(*b.field_);
}

std::string CoefficientMode::to_string() const {
  if (is_rational()) return "Q";
  return "F_" + std::to_string(field_->characteristic()) +
         (field_->degree() > 1 ? "^" + std::to_string(field_->degree()) : "");
}

}  // namespace sdlab::poly
