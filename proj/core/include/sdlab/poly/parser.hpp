#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sdlab/poly/polynomial.hpp"

namespace sdlab::poly {

/// Declared variables: X1..Xm, T0..Tn and the free center coordinates
/// C<i>_<j> for 1 <= i <= c_max, 0 <= j < i.
struct VariableDeclaration {
  int m = 0;
  int n = -1;
  int c_max = 0;

  bool declares(Variable v) const;
  static VariableDeclaration permissive() { return {1 << 13, 1 << 13, 1 << 13}; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored, optional leading sign):
///   poly    := term (('+'|'-') term)*
///   term    := coeff ('*' var_pow)* | var_pow ('*' var_pow)*
///   var_pow := var ('^' uint)?
///   var     := 'X' uint | 'T' uint | 'C' uint '_' uint
///   coeff   := uint | uint '/' uint
Polynomial parse_poly(std::string_view text, const VariableDeclaration& decl,
                      const CoefficientMode& mode = CoefficientMode::rational());

}  // namespace sdlab::poly
