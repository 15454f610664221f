#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sdlab::simplex {

/// A bijection of [n] = {0, ..., n}, stored by its images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// All permutations of [n] in lexicographic order of their image arrays.
  static std::vector<Permutation> all(int n);

  /// n, so that the permutation acts on n + 1 points.
  int size_param() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j)); }
  const std::vector<int>& images() const { return images_; }
  /// Parity: +1 for even, -1 for odd.
  int sign() const { return sign_; }

  Permutation inverse() const;
  /// this o other.
  Permutation after(const Permutation& other) const;
  /// this o (i, i+1).
  Permutation with_adjacent_swap(int i) const;
  /// The permutation of [n+1] acting as this on [n] and fixing n + 1.
  Permutation extended() const;

  std::string to_string() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
  int sign_ = 1;
};

}  // namespace sdlab::simplex
