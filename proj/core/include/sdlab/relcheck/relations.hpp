#pragma once

#include <string>
#include <vector>

#include "sdlab/simplex/maps.hpp"

namespace sdlab::relcheck {

using simplex::AffineSimplexMap;
using simplex::CenterFamily;
using simplex::Permutation;
using simplex::ProductTargetMap;

/// One checked instance of a map identity.
struct RelationInstance {
  std::string relation_id;
  int n = 0;
  int k = -1;  // -1 when the relation has no homotopy index
  std::vector<int> sigma;
  int face = -1;  // -1 when no face map is involved
  bool pass = false;
  std::string entry;  // location of the first differing entry, empty on pass
  std::string lhs_minus_rhs = "0";
};

struct RelationReport {
  std::vector<RelationInstance> instances;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  void append(const RelationReport& other);
};

/// The unique tau on [n-1] with d_{sigma(n)} o tau = sigma restricted to [n-1].
Permutation induced_permutation(const Permutation& sigma);

/// Supplies the maps under test. The default builds them from a center
/// family; subclasses substitute corrupted maps for negative controls.
class MapProvider {
 public:
  explicit MapProvider(CenterFamily family) : family_(std::move(family)) {}
  virtual ~MapProvider() = default;

  virtual AffineSimplexMap subdivision(int n, const Permutation& sigma) const;
  virtual ProductTargetMap homotopy(int n, int k, const Permutation& sigma) const;
  const CenterFamily& family() const { return family_; }

 private:
  CenterFamily family_;
};

/// Adds delta to one entry of one map.
class PerturbedProvider : public MapProvider {
 public:
  enum class Target { subdivision, homotopy_first, homotopy_second };
  struct Perturbation {
    Target target = Target::subdivision;
    int n = 0;
    int k = 0;
    std::vector<int> sigma;
    std::size_t row = 0;
    std::size_t col = 0;
    long delta = 1;
  };

  PerturbedProvider(CenterFamily family, Perturbation p) : MapProvider(std::move(family)), p_(std::move(p)) {}

  AffineSimplexMap subdivision(int n, const Permutation& sigma) const override;
  ProductTargetMap homotopy(int n, int k, const Permutation& sigma) const override;

 private:
  Perturbation p_;
};

/// sd_n^s o d_i = sd_n^{s o (i,i+1)} o d_i (i < n) and
/// sd_n^s o d_n = d_{s(n)} o sd_{n-1}^tau, plus column-sum integrity of each sd_n^s.
RelationReport check_subdivision_relations(int n, const MapProvider& maps);
RelationReport check_subdivision_relations(int n, const CenterFamily& family);

/// The six face relations of the homotopy maps sd_{n,k}^s, over every k, s and
/// admissible face. Relation 4 is also checked at the top face i = n + 1
/// (reported as "h4.top"), which the telescoping needs. Relation 6 only holds
/// when s(k) < k; when s fixes k the face d_k is interior and is checked
/// against sd_{n,k-1}^tau o d_k instead ("h6.interior").
RelationReport check_patience_relations(int n, const MapProvider& maps);
RelationReport check_patience_relations(int n, const CenterFamily& family);

/// Relation 6 as written, for every 1 <= k <= n and every s; fails exactly
/// on the instances with s(k) = k.
RelationReport literal_face_k_relation(int n, const MapProvider& maps);

/// Re-derives the subdivision relations from the homotopy maps through pr_1.
RelationReport cross_check_implication(int n, const MapProvider& maps);

}  // namespace sdlab::relcheck
