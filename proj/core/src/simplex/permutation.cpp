#include "sdlab/simplex/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdlab::simplex {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation of an empty set");
  const auto size = images_.size();
  std::vector<bool> seen(size, false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= size || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  // Each cycle of length L contributes L - 1 transpositions.
  std::vector<bool> visited(size, false);
  int transpositions = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (visited[i]) continue;
    std::size_t j = i;
    int length = 0;
    while (!visited[j]) {
      visited[j] = true;
      j = static_cast<std::size_t>(images_[j]);
      ++length;
    }
    transpositions += length - 1;
  }
  sign_ = transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.images_.size() != images_.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Permutation(std::move(out));
}

Permutation Permutation::with_adjacent_swap(int i) const {
  if (i < 0 || i + 1 > size_param()) throw std::out_of_range("adjacent swap index out of range");
  std::vector<int> out = images_;
  std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i + 1)]);
  return Permutation(std::move(out));
}

Permutation Permutation::extended() const {
  std::vector<int> out = images_;
  out.push_back(static_cast<int>(images_.size()));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + "]";
}

}  // namespace sdlab::simplex
