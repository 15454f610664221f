#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sdlab/poly/polynomial.hpp"

namespace sdlab::lab {

using poly::FieldPtr;
using poly::FiniteField;
using poly::Polynomial;
using poly::Variable;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t default_enumeration_cap = 50'000'000;

/// F_p, F_{p^2}, ..., F_{p^E}, built once and shared by repeated counts.
class FieldTower {
 public:
  FieldTower(std::uint32_t p, int max_degree);
  std::uint32_t characteristic() const { return p_; }
  int max_degree() const { return static_cast<int>(fields_.size()); }
  const FieldPtr& base() const { return fields_.front(); }
  const FieldPtr& at(int e) const;

 private:
  std::uint32_t p_;
  std::vector<FieldPtr> fields_;
};

/// Equations over F_p in the listed slot variables. Every variable that
/// occurs in an equation must be a slot.
struct PointSystem {
  std::vector<Polynomial> equations;
  std::vector<Variable> slots;
};

/// Exact number of common zeros in F_{p^e}^{slots}, by enumeration.
/// Throws CapExceeded if (p^e)^{slots} exceeds cap.
std::uint64_t count_points(const PointSystem& system, const FieldTower& tower, int e,
                           std::uint64_t cap = default_enumeration_cap);

/// The solutions themselves, as field element indices in slot order.
std::vector<std::vector<FiniteField::Element>> enumerate_points(const PointSystem& system, const FieldTower& tower,
                                                                int e, std::uint64_t cap = default_enumeration_cap);

}  // namespace sdlab::lab
