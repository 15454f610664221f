#include "sdlab/poly/monomial.hpp"

#include <algorithm>

namespace sdlab::poly {

namespace {

std::vector<Monomial::Factor> normalize(std::vector<Monomial::Factor> f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Monomial::Factor> out;
  for (const auto& [v, e] : f) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == v) {
      out.back().second += e;
    } else {
      out.emplace_back(v, e);
    }
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Factor> factors)
    : factors_(normalize(std::vector<Factor>(factors))) {}

Monomial::Monomial(std::vector<Factor> factors) : factors_(normalize(std::move(factors))) {}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::block_degree(Block b) const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) {
    if (v.block() == b) d += e;
  }
  return d;
}

std::uint32_t Monomial::exponent(Variable v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      f.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
  }
  if (i < fa.size()) return 1;
  if (i < fb.size()) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sdlab::poly

namespace sdlab::poly {

std::vector<Monomial> x_monomials_up_to(int m, int bound) {
  std::vector<Monomial> out;
  if (bound < 0) return out;
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(m), 0);
  // Enumerate exponent vectors by odometer and keep those within the bound.
  while (true) {
    std::uint32_t total = 0;
    for (auto e : exps) total += e;
    if (total <= static_cast<std::uint32_t>(bound)) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < exps.size(); ++i) f.emplace_back(Variable::X(static_cast<std::uint32_t>(i + 1)), exps[i]);
      out.emplace_back(std::move(f));
    }
    std::size_t i = 0;
    while (i < exps.size() && ++exps[i] > static_cast<std::uint32_t>(bound)) exps[i++] = 0;
    if (i == exps.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) < 0; });
  return out;
}

}  // namespace sdlab::poly
