#include "sdlab/simplex/poly_matrix.hpp"

#include <stdexcept>

namespace sdlab::simplex {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const CoefficientMode& mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, Polynomial(mode)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, const CoefficientMode& mode) {
  PolyMatrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(mode, 1);
  return m;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void PolyMatrix::set_column(std::size_t c, const std::vector<Polynomial>& values) {
  if (values.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Polynomial PolyMatrix::column_sum(std::size_t c) const {
  Polynomial s(mode_);
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(mode_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::substitute(const poly::Assignment& assignment) const {
  PolyMatrix out(rows_, cols_, mode_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(assignment);
  return out;
}

PolyMatrix PolyMatrix::converted(const CoefficientMode& mode) const {
  PolyMatrix out(rows_, cols_, mode);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].converted(mode);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.mode_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const PolyMatrix& a, const PolyMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (auto c = a.data_[i] <=> b.data_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace sdlab::simplex
