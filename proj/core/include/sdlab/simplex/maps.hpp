#pragma once

#include <compare>
#include <vector>

#include "sdlab/simplex/centers.hpp"
#include "sdlab/simplex/permutation.hpp"
#include "sdlab/simplex/poly_matrix.hpp"

namespace sdlab::simplex {

/// An affine-linear map Delta^p -> Delta^q over the base, stored as the
/// (q+1) x (p+1) matrix whose column j is the image of vertex v_j.
class AffineSimplexMap {
 public:
  /// Checks the shape, that entries are free of T, and that columns sum to 1.
  explicit AffineSimplexMap(PolyMatrix matrix);
  /// Skips the barycentric checks; used for negative controls.
  static AffineSimplexMap unchecked(PolyMatrix matrix);

  int source_dim() const { return static_cast<int>(matrix_.cols()) - 1; }
  int target_dim() const { return static_cast<int>(matrix_.rows()) - 1; }
  const PolyMatrix& matrix() const { return matrix_; }
  const CoefficientMode& mode() const { return matrix_.mode(); }

  bool columns_sum_to_one() const;
  BarycentricPoint vertex_image(int j) const;
  /// The map with entry (r, c) increased by delta, unchecked.
  AffineSimplexMap perturbed(std::size_t r, std::size_t c, long delta) const;
  AffineSimplexMap substitute(const poly::Assignment& assignment) const;
  AffineSimplexMap converted(const CoefficientMode& mode) const;

  friend bool operator==(const AffineSimplexMap&, const AffineSimplexMap&) = default;
  friend std::strong_ordering operator<=>(const AffineSimplexMap& a, const AffineSimplexMap& b) {
    return a.matrix_ <=> b.matrix_;
  }

 private:
  struct Unchecked {};
  AffineSimplexMap(PolyMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {}
  PolyMatrix matrix_;
};

/// g o f (matrix product).
AffineSimplexMap operator*(const AffineSimplexMap& g, const AffineSimplexMap& f);
/// f followed by g, i.e. g o f.
AffineSimplexMap compose(const AffineSimplexMap& f, const AffineSimplexMap& g);

/// A map Delta^p -> Delta^n x Delta^1, given by its two factors.
class ProductTargetMap {
 public:
  ProductTargetMap(AffineSimplexMap first, AffineSimplexMap second);

  const AffineSimplexMap& first() const { return first_; }
  const AffineSimplexMap& second() const { return second_; }
  int source_dim() const { return first_.source_dim(); }

  /// this o f.
  ProductTargetMap precompose(const AffineSimplexMap& f) const;
  /// (g x id) o this.
  ProductTargetMap postcompose_first(const AffineSimplexMap& g) const;

  friend bool operator==(const ProductTargetMap&, const ProductTargetMap&) = default;

 private:
  AffineSimplexMap first_;
  AffineSimplexMap second_;
};

BarycentricPoint vertex(int i, int n, const CoefficientMode& mode = CoefficientMode::rational());
/// The coface Delta^{n-1} -> Delta^n omitting vertex i.
AffineSimplexMap face_map(int i, int n, const CoefficientMode& mode = CoefficientMode::rational());
AffineSimplexMap identity_map(int n, const CoefficientMode& mode = CoefficientMode::rational());
/// Delta^p -> Delta^n, constant at vertex b.
AffineSimplexMap constant_vertex_map(int b, int n, int p, const CoefficientMode& mode = CoefficientMode::rational());

/// c^{|S|-1} placed on the rows of S (taken in increasing order).
BarycentricPoint embed_center(std::vector<int> subset, int n, const CenterFamily& family);

/// The self-map of Delta^n sending v_k to the embedded center of sigma({0..k}).
AffineSimplexMap subdivision_map(int n, const Permutation& sigma, const CenterFamily& family);

/// Delta^{n+1} -> Delta^n x Delta^1: v_j -> (c_{sigma({0..j})}, v_0) for j <= k and
/// v_j -> (v_{j-1}, v_1) for j > k. sigma permutes [k].
ProductTargetMap homotopy_map(int n, int k, const Permutation& sigma, const CenterFamily& family);

AffineSimplexMap first_projection(const ProductTargetMap& h);

/// Every sd_n^sigma, sigma in lexicographic order.
std::vector<AffineSimplexMap> all_subdivision_maps(int n, const CenterFamily& family);
/// Every sd_{n,k}^sigma for 0 <= k <= n.
std::vector<ProductTargetMap> all_homotopy_maps(int n, const CenterFamily& family);

}  // namespace sdlab::simplex
