#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace sdlab::poly {

/// Variable blocks, in monomial-order priority: X before T before C.
enum class Block : std::uint8_t { X = 0, T = 1, C = 2 };

/// X_i (base coordinates, i >= 1), T_i (barycentric, i >= 0), or C<i>_<j>
/// (coordinate j of the symbolic center of dimension i).
class Variable {
 public:
  static constexpr Variable X(std::uint32_t i) { return Variable(Block::X, i, 0); }
  static constexpr Variable T(std::uint32_t i) { return Variable(Block::T, i, 0); }
  static constexpr Variable C(std::uint32_t center, std::uint32_t coord) {
    return Variable(Block::C, center, coord);
  }

  constexpr Block block() const { return static_cast<Block>(id_ >> 28); }
  constexpr std::uint32_t index() const { return (id_ >> 14) & 0x3fff; }
  constexpr std::uint32_t sub_index() const { return id_ & 0x3fff; }
  constexpr std::uint32_t id() const { return id_; }

  std::string to_string() const {
    switch (block()) {
      case Block::X: return "X" + std::to_string(index());
      case Block::T: return "T" + std::to_string(index());
      case Block::C: return "C" + std::to_string(index()) + "_" + std::to_string(sub_index());
    }
    return "?";
  }

  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  constexpr Variable(Block b, std::uint32_t i, std::uint32_t j)
      : id_((static_cast<std::uint32_t>(b) << 28) | ((i & 0x3fff) << 14) | (j & 0x3fff)) {}
  std::uint32_t id_;
};

}  // namespace sdlab::poly

template <>
struct std::hash<sdlab::poly::Variable> {
  std::size_t operator()(sdlab::poly::Variable v) const noexcept { return v.id(); }
};
