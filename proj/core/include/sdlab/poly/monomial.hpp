#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/poly/degree.hpp"
#include "sdlab/poly/variable.hpp"

namespace sdlab::poly {

/// Sparse power product, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Variable v, std::uint32_t exponent = 1) { return Monomial({{v, exponent}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t block_degree(Block b) const;
  std::uint32_t exponent(Variable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic comparison; variables earlier in the order (X1 first)
/// carry more weight. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Descending grlex; used as the canonical term order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace sdlab::poly

namespace sdlab::poly {

/// All monomials in X1..Xm of total degree <= bound, ascending by degree
/// and then by ascending grlex within a degree. Contains C(bound+m, m) entries.
std::vector<Monomial> x_monomials_up_to(int m, int bound);

}  // namespace sdlab::poly
