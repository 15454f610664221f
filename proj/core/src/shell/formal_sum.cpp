#include "sdlab/shell/formal_sum.hpp"

namespace sdlab::shell {

void FormalMapSum::add(const AffineSimplexMap& map, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(map, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

FormalMapSum& FormalMapSum::operator+=(const FormalMapSum& other) {
  for (const auto& [map, coeff] : other.terms_) add(map, coeff);
  return *this;
}

FormalMapSum FormalMapSum::scaled(long factor) const {
  FormalMapSum out;
  if (factor == 0) return out;
  for (const auto& [map, coeff] : terms_) out.terms_.emplace(map, coeff * factor);
  return out;
}

std::vector<MapTerm> FormalMapSum::terms() const {
  std::vector<MapTerm> out;
  out.reserve(terms_.size());
  for (const auto& [map, coeff] : terms_) out.push_back({coeff, map});
  return out;
}

long FormalMapSum::coefficient(const AffineSimplexMap& map) const {
  auto it = terms_.find(map);
  return it == terms_.end() ? 0 : it->second;
}

FormalMapSum FormalMapSum::substitute(const poly::Assignment& assignment) const {
  FormalMapSum out;
  for (const auto& [map, coeff] : terms_) out.add(map.substitute(assignment), coeff);
  return out;
}

FormalMapSum FormalMapSum::converted(const poly::CoefficientMode& mode) const {
  FormalMapSum out;
  for (const auto& [map, coeff] : terms_) out.add(map.converted(mode), coeff);
  return out;
}

FormalMapSum formal_sum_reduce(std::span<const MapTerm> terms) {
  FormalMapSum out;
  for (const auto& t : terms) out.add(t.map, t.coeff);
  return out;
}

}  // namespace sdlab::shell
