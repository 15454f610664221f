#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace sdlab::poly {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
/// Addition is absorbing at -infinity, so deg(a*b) = deg(a) + deg(b) holds
/// without special cases.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(int value) : value_(value) {}

  static constexpr Degree neg_inf() { return Degree{}; }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  constexpr int value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree{a.value_ + b.value_};
  }
  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr bool operator==(Degree a, int b) { return a.value_ == b && !a.is_neg_inf(); }
  friend constexpr bool operator<=(Degree a, int b) { return a.is_neg_inf() || a.value_ <= b; }
  friend constexpr bool operator>(Degree a, int b) { return !(a <= b); }

  std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(value_); }

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  int value_ = kNegInf;
};

inline constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

}  // namespace sdlab::poly
