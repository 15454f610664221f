#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/lab/dimension.hpp"
#include "sdlab/simplex/permutation.hpp"

namespace sdlab::lab {

using simplex::Permutation;

enum class SamplePlan { exhaustive, sampled };

/// Parameter space for center families of X-degree <= N. Each free center
/// coordinate c^i_j (j < i) listed in lambda is a polynomial in X1..Xm;
/// the remaining free coordinates are fixed constants.
struct CensusConfig {
  int N = 1;
  SamplePlan plan = SamplePlan::exhaustive;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> lambda;  // (i, j); empty means every free coordinate
  std::vector<std::pair<std::pair<int, int>, long>> fixed;  // constants outside lambda, default 0
  std::uint64_t max_enumeration = 1'000'000;  // cap on the number of center families
  std::uint64_t max_points = default_enumeration_cap;
  int max_e = 3;
};

/// Enumerates center families of the parameter space in a fixed order.
class CenterSpace {
 public:
  CenterSpace(int n, int m, const CensusConfig& cfg, FieldPtr field);

  std::size_t parameter_count() const { return slots_.size() * monomials_.size(); }
  /// p^parameter_count, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;
  /// The family whose parameters are the base-p digits of index (lowest first).
  simplex::CenterFamily family(std::uint64_t index) const;
  /// The family with independent uniform parameters drawn from a stream
  /// seeded by (seed, sample).
  simplex::CenterFamily sample(std::uint64_t seed, std::uint64_t sample) const;
  const std::vector<std::pair<int, int>>& lambda() const { return slots_; }

 private:
  simplex::CenterFamily build(const std::vector<std::uint32_t>& params) const;

  int n_;
  int m_;
  int N_;
  FieldPtr field_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<std::pair<std::pair<int, int>, long>> fixed_;
  std::vector<poly::Monomial> monomials_;
};

/// 64-bit mixing step used to derive independent per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x);

struct SigmaTally {
  Permutation sigma;
  std::uint64_t bad = 0;
  std::uint64_t unstable = 0;
};

struct BadCenterReport {
  std::uint64_t families = 0;
  bool exhaustive = true;
  std::vector<SigmaTally> per_sigma;
  std::uint64_t joint_bad = 0;       // bad for at least one sigma
  std::uint64_t joint_unstable = 0;  // not bad, unstable for at least one sigma
  bool within_hypothesis = false;    // N >= n + 1
  std::size_t parameter_count = 0;
  std::string note;
};

BadCenterReport bad_center_census(const VarietySpec& v, const CensusConfig& cfg,
                                  const std::vector<Permutation>& sigma_set);

struct VanishingReport {
  std::uint64_t candidates = 0;  // |F_q[X]_{<=N}|
  std::uint64_t vanishing = 0;
  std::uint64_t points = 0;      // points of W used, over all e
  bool within_bound = false;     // vanishing * q^{N+1} <= candidates
  bool projection_is_point = false;
  bool empty_inverse_image = false;
  bool w_empty = false;
};

/// W lives in A^m x A^n with Z_j written as T_j; counts C(X) of degree <= N
/// such that Z_1 - C(X) vanishes on W(F_{q^e}) for all e <= max_e.
VanishingReport vanishing_census(const VarietySpec& w, int N, int max_e,
                                 std::uint64_t cap = default_enumeration_cap);

struct HomotopyFaceReport {
  std::uint64_t families = 0;
  std::uint64_t passing = 0;
  std::uint64_t unstable = 0;
  std::size_t maps_per_family = 0;
};

/// For sampled centers, checks the face condition and total dimension
/// n + t + 1 of every (pr_1 o sd_{n,k}^sigma)-pullback.
HomotopyFaceReport homotopy_face_condition_check(const VarietySpec& v, const CensusConfig& cfg);

}  // namespace sdlab::lab
