#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "sdlab/poly/polynomial.hpp"

namespace sdlab::simplex {

using poly::CoefficientMode;
using poly::Polynomial;

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const CoefficientMode& mode);
  static PolyMatrix identity(std::size_t n, const CoefficientMode& mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const CoefficientMode& mode() const { return mode_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Polynomial>& values);
  Polynomial column_sum(std::size_t c) const;

  /// Matrix-vector product.
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  PolyMatrix substitute(const poly::Assignment& assignment) const;
  PolyMatrix converted(const CoefficientMode& mode) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend std::strong_ordering operator<=>(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  CoefficientMode mode_;
  std::vector<Polynomial> data_;
};

}  // namespace sdlab::simplex
