#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/poly/degree.hpp"
#include "sdlab/poly/monomial.hpp"
#include "sdlab/poly/scalar.hpp"
#include "sdlab/poly/variable.hpp"

namespace sdlab::poly {

class Polynomial;

using Assignment = std::map<Variable, Polynomial>;
using Point = std::map<Variable, Scalar>;

/// Sparse multivariate polynomial over Q or F_q in the X, T and C variable
/// blocks. Terms are kept in descending grlex order with no zero coefficients,
/// so structural equality is equality of polynomials.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(CoefficientMode mode) : mode_(std::move(mode)) {}

  static Polynomial constant(const CoefficientMode& mode, long value);
  static Polynomial constant(const CoefficientMode& mode, const Scalar& value);
  static Polynomial variable(const CoefficientMode& mode, Variable v);
  static Polynomial term(const CoefficientMode& mode, const Scalar& coeff, Monomial m);

  const CoefficientMode& mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  Degree total_degree() const;
  Degree block_degree(Block b) const;
  std::vector<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& s) const;
  Polynomial pow(std::uint32_t k) const;

  /// Replaces assigned variables by polynomials; others pass through.
  Polynomial substitute(const Assignment& assignment) const;
  /// Exact value at a point assigning every variable of this polynomial.
  Scalar evaluate(const Point& point) const;
  /// Re-expresses the coefficients in another mode (Q -> F_p reduces).
  Polynomial converted(const CoefficientMode& mode) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const Scalar& c);
  void check_mode(const Polynomial& other) const;

  CoefficientMode mode_;
  Terms terms_;
};

enum class ArithOp { add, sub, mul };

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op);

}  // namespace sdlab::poly
