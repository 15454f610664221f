#include "sdlab/simplex/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdlab::simplex {

AffineSimplexMap::AffineSimplexMap(PolyMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) throw std::invalid_argument("empty map matrix");
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      if (matrix_(r, c).block_degree(poly::Block::T) > 0) {
        throw std::invalid_argument("map entries must not involve simplex variables");
      }
    }
  }
  if (!columns_sum_to_one()) throw std::invalid_argument("map columns must sum to 1");
}

AffineSimplexMap AffineSimplexMap::unchecked(PolyMatrix matrix) { return AffineSimplexMap(std::move(matrix), Unchecked{}); }

bool AffineSimplexMap::columns_sum_to_one() const {
  const auto one = Polynomial::constant(mode(), 1);
  for (std::size_t c = 0; c < matrix_.cols(); ++c) {
    if (matrix_.column_sum(c) != one) return false;
  }
  return true;
}

BarycentricPoint AffineSimplexMap::vertex_image(int j) const {
  return BarycentricPoint{matrix_.column(static_cast<std::size_t>(j))};
}

AffineSimplexMap AffineSimplexMap::perturbed(std::size_t r, std::size_t c, long delta) const {
  PolyMatrix m = matrix_;
  m(r, c) += Polynomial::constant(mode(), delta);
  return unchecked(std::move(m));
}

AffineSimplexMap AffineSimplexMap::substitute(const poly::Assignment& assignment) const {
  return unchecked(matrix_.substitute(assignment));
}

AffineSimplexMap AffineSimplexMap::converted(const CoefficientMode& mode) const {
  return unchecked(matrix_.converted(mode));
}

AffineSimplexMap operator*(const AffineSimplexMap& g, const AffineSimplexMap& f) {
  if (g.source_dim() != f.target_dim()) throw std::invalid_argument("dimension mismatch in composition");
  return AffineSimplexMap::unchecked(g.matrix() * f.matrix());
}

AffineSimplexMap compose(const AffineSimplexMap& f, const AffineSimplexMap& g) { return g * f; }

ProductTargetMap::ProductTargetMap(AffineSimplexMap first, AffineSimplexMap second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.source_dim() != second_.source_dim()) throw std::invalid_argument("factor sources differ");
  if (second_.target_dim() != 1) throw std::invalid_argument("second factor must land in Delta^1");
}

ProductTargetMap ProductTargetMap::precompose(const AffineSimplexMap& f) const {
  return ProductTargetMap(first_ * f, second_ * f);
}

ProductTargetMap ProductTargetMap::postcompose_first(const AffineSimplexMap& g) const {
  return ProductTargetMap(g * first_, second_);
}

BarycentricPoint vertex(int i, int n, const CoefficientMode& mode) {
  if (n < 0 || i < 0 || i > n) throw std::out_of_range("vertex index out of range");
  BarycentricPoint p{std::vector<Polynomial>(static_cast<std::size_t>(n + 1), Polynomial(mode))};
  p.coords[static_cast<std::size_t>(i)] = Polynomial::constant(mode, 1);
  return p;
}

AffineSimplexMap face_map(int i, int n, const CoefficientMode& mode) {
  if (n < 1 || i < 0 || i > n) throw std::out_of_range("face index out of range");
  PolyMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n), mode);
  for (int c = 0; c < n; ++c) {
    const int r = c < i ? c : c + 1;
    m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = Polynomial::constant(mode, 1);
  }
  return AffineSimplexMap(std::move(m));
}

AffineSimplexMap identity_map(int n, const CoefficientMode& mode) {
  return AffineSimplexMap(PolyMatrix::identity(static_cast<std::size_t>(n + 1), mode));
}

AffineSimplexMap constant_vertex_map(int b, int n, int p, const CoefficientMode& mode) {
  if (b < 0 || b > n) throw std::out_of_range("vertex index out of range");
  PolyMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(p + 1), mode);
  for (int c = 0; c <= p; ++c) m(static_cast<std::size_t>(b), static_cast<std::size_t>(c)) = Polynomial::constant(mode, 1);
  return AffineSimplexMap(std::move(m));
}

BarycentricPoint embed_center(std::vector<int> subset, int n, const CenterFamily& family) {
  if (subset.empty()) throw std::invalid_argument("empty subset has no center");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) throw std::invalid_argument("repeated vertex");
  if (subset.front() < 0 || subset.back() > n) throw std::out_of_range("subset not contained in [n]");
  const auto& mode = family.coefficients();
  if (subset.size() == 1) return vertex(subset.front(), n, mode);
  const auto& c = family.center(static_cast<int>(subset.size()) - 1);
  BarycentricPoint p{std::vector<Polynomial>(static_cast<std::size_t>(n + 1), Polynomial(mode))};
  for (std::size_t j = 0; j < subset.size(); ++j) p.coords[static_cast<std::size_t>(subset[j])] = c.coords[j];
  return p;
}

namespace {

std::vector<int> image_prefix(const Permutation& sigma, int k) {
  std::vector<int> s;
  for (int j = 0; j <= k; ++j) s.push_back(sigma(j));
  return s;
}

}  // namespace

AffineSimplexMap subdivision_map(int n, const Permutation& sigma, const CenterFamily& family) {
  if (sigma.size_param() != n) throw std::invalid_argument("permutation size does not match n");
  PolyMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), family.coefficients());
  for (int k = 0; k <= n; ++k) m.set_column(static_cast<std::size_t>(k), embed_center(image_prefix(sigma, k), n, family).coords);
  return AffineSimplexMap::unchecked(std::move(m));
}

ProductTargetMap homotopy_map(int n, int k, const Permutation& sigma, const CenterFamily& family) {
  if (k < 0 || k > n) throw std::out_of_range("homotopy index k out of range");
  if (sigma.size_param() != k) throw std::invalid_argument("permutation size does not match k");
  const auto& mode = family.coefficients();
  PolyMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 2), mode);
  PolyMatrix m1(2, static_cast<std::size_t>(n + 2), mode);
  for (int j = 0; j <= n + 1; ++j) {
    const auto col = static_cast<std::size_t>(j);
    if (j <= k) {
      m.set_column(col, embed_center(image_prefix(sigma, j), n, family).coords);
      m1(0, col) = Polynomial::constant(mode, 1);
    } else {
      m.set_column(col, vertex(j - 1, n, mode).coords);
      m1(1, col) = Polynomial::constant(mode, 1);
    }
  }
  return ProductTargetMap(AffineSimplexMap::unchecked(std::move(m)), AffineSimplexMap(std::move(m1)));
}

AffineSimplexMap first_projection(const ProductTargetMap& h) { return h.first(); }

std::vector<AffineSimplexMap> all_subdivision_maps(int n, const CenterFamily& family) {
  std::vector<AffineSimplexMap> out;
  for (const auto& sigma : Permutation::all(n)) out.push_back(subdivision_map(n, sigma, family));
  return out;
}

std::vector<ProductTargetMap> all_homotopy_maps(int n, const CenterFamily& family) {
  std::vector<ProductTargetMap> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& sigma : Permutation::all(k)) out.push_back(homotopy_map(n, k, sigma, family));
  }
  return out;
}

}  // namespace sdlab::simplex
