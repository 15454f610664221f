#pragma once

#include <map>
#include <span>
#include <vector>

#include "sdlab/simplex/maps.hpp"

namespace sdlab::shell {

using simplex::AffineSimplexMap;

struct MapTerm {
  long coeff = 0;
  AffineSimplexMap map;
};

/// Integer combination of maps; equal maps are merged and zero coefficients
/// dropped, so the stored form is canonical.
class FormalMapSum {
 public:
  FormalMapSum() = default;

  void add(const AffineSimplexMap& map, long coeff);
  FormalMapSum& operator+=(const FormalMapSum& other);
  FormalMapSum scaled(long factor) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<MapTerm> terms() const;
  long coefficient(const AffineSimplexMap& map) const;

  /// Specializes every map, then re-reduces (distinct maps may coincide).
  FormalMapSum substitute(const poly::Assignment& assignment) const;
  FormalMapSum converted(const poly::CoefficientMode& mode) const;

  friend FormalMapSum operator+(FormalMapSum a, const FormalMapSum& b) { return a += b; }
  friend FormalMapSum operator-(FormalMapSum a, const FormalMapSum& b) { return a += b.scaled(-1); }
  friend bool operator==(const FormalMapSum&, const FormalMapSum&) = default;

 private:
  std::map<AffineSimplexMap, long> terms_;
};

FormalMapSum formal_sum_reduce(std::span<const MapTerm> terms);

}  // namespace sdlab::shell
