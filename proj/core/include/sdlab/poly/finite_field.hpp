#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sdlab::poly {

/// Dense univariate polynomial over F_p, coefficients from low to high degree.
using PrimePoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Rabin's test: f of degree e is irreducible over F_p iff x^(p^e) = x mod f
/// and gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
bool is_irreducible(std::uint32_t p, const PrimePoly& f);

/// The field F_p[x]/(modulus). Elements are encoded as integers
/// a_0 + a_1 p + ... + a_{e-1} p^{e-1}, so the prime subfield is {0..p-1}.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Lexicographically smallest monic irreducible modulus of degree e.
  static std::shared_ptr<const FiniteField> build(std::uint32_t p, std::uint32_t e);
  static std::shared_ptr<const FiniteField> with_modulus(std::uint32_t p, PrimePoly modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint64_t order() const { return order_; }
  const PrimePoly& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;
  /// The class of x in F_p[x]/(modulus).
  Element generator() const;
  bool in_prime_field(Element a) const { return a < p_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t k) const;
  Element frobenius(Element a) const { return pow(a, p_); }

  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;
  std::string to_string(Element a) const;
  std::string modulus_string() const;

  bool same_as(const FiniteField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField(std::uint32_t p, PrimePoly modulus);
  Element mul_slow(Element a, Element b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t order_;
  PrimePoly modulus_;
  std::vector<std::uint64_t> place_;  // p^i
  // Zech-style log tables; empty for fields too large to tabulate.
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace sdlab::poly
