#include "sdlab/lab/point_count.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "sdlab/util/parallel.hpp"

namespace sdlab::lab {

using Element = FiniteField::Element;

FieldTower::FieldTower(std::uint32_t p, int max_degree) : p_(p) {
  if (max_degree < 1) throw std::invalid_argument("extension degree must be at least 1");
  for (int e = 1; e <= max_degree; ++e) fields_.push_back(FiniteField::build(p, static_cast<std::uint32_t>(e)));
}

const FieldPtr& FieldTower::at(int e) const {
  if (e < 1 || e > max_degree()) throw std::out_of_range("extension degree outside the tower");
  return fields_[static_cast<std::size_t>(e - 1)];
}

namespace {

struct CompiledTerm {
  Element coeff;
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

struct Compiled {
  std::vector<std::vector<CompiledTerm>> equations;
  bool inconsistent = false;  // some equation is a nonzero constant
};

Compiled compile(const PointSystem& system, const FieldTower& tower) {
  std::map<Variable, std::size_t> slot_of;
  for (std::size_t i = 0; i < system.slots.size(); ++i) slot_of.emplace(system.slots[i], i);
  const auto base_mode = poly::CoefficientMode::finite_field(tower.base());
  Compiled out;
  for (const auto& eq : system.equations) {
    if (eq.is_zero()) continue;
    if (!eq.mode().is_rational() && eq.mode().field()->characteristic() != tower.characteristic()) {
      throw poly::IncompatibleModes();
    }
    std::vector<CompiledTerm> terms;
    for (const auto& [mono, coeff] : eq.terms()) {
      const auto c = base_mode.convert(coeff);
      CompiledTerm term{c.element(), {}};
      for (const auto& [v, k] : mono.factors()) {
        auto it = slot_of.find(v);
        if (it == slot_of.end()) throw std::invalid_argument("variable " + v.to_string() + " is not a slot");
        term.factors.emplace_back(it->second, k);
      }
      terms.push_back(std::move(term));
    }
    if (eq.is_constant()) out.inconsistent = true;
    out.equations.push_back(std::move(terms));
  }
  return out;
}

bool satisfies(const Compiled& c, const FiniteField& f, const std::vector<Element>& point) {
  for (const auto& eq : c.equations) {
    Element sum = 0;
    for (const auto& term : eq) {
      Element v = term.coeff;
      for (const auto& [slot, k] : term.factors) {
        v = f.mul(v, k == 1 ? point[slot] : f.pow(point[slot], k));
        if (v == 0) break;
      }
      sum = f.add(sum, v);
    }
    if (sum != 0) return false;
  }
  return true;
}

std::uint64_t space_size(std::uint64_t q, std::size_t slots, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (total > cap / q) {
      throw CapExceeded("search space " + std::to_string(q) + "^" + std::to_string(slots) + " exceeds cap " +
                        std::to_string(cap));
    }
    total *= q;
  }
  return total;
}

/// Visits every point whose first coordinate is `first`; returns false to stop.
template <typename Visit>
void sweep(std::size_t slots, Element q, Element first, Visit&& visit) {
  std::vector<Element> point(slots, 0);
  point[0] = first;
  while (true) {
    visit(point);
    std::size_t i = 1;
    while (i < slots) {
      if (++point[i] < q) break;
      point[i] = 0;
      ++i;
    }
    if (i == slots) return;
  }
}

}  // namespace

std::uint64_t count_points(const PointSystem& system, const FieldTower& tower, int e, std::uint64_t cap) {
  const auto& field = *tower.at(e);
  const auto compiled = compile(system, tower);
  const auto q = static_cast<Element>(field.order());
  const std::size_t k = system.slots.size();
  space_size(q, k, cap);
  if (compiled.inconsistent) return 0;
  if (k == 0) return satisfies(compiled, field, {}) ? 1 : 0;

  std::vector<std::uint64_t> partial(q, 0);
  util::parallel_for(
      q,
      [&](std::size_t first) {
        std::uint64_t n = 0;
        sweep(k, q, static_cast<Element>(first), [&](const std::vector<Element>& pt) {
          if (satisfies(compiled, field, pt)) ++n;
        });
        partial[first] = n;
      },
      k >= 3 ? 2 : std::numeric_limits<std::size_t>::max());
  std::uint64_t total = 0;
  for (auto n : partial) total += n;
  return total;
}

std::vector<std::vector<Element>> enumerate_points(const PointSystem& system, const FieldTower& tower, int e,
                                                   std::uint64_t cap) {
  const auto& field = *tower.at(e);
  const auto compiled = compile(system, tower);
  const auto q = static_cast<Element>(field.order());
  const std::size_t k = system.slots.size();
  space_size(q, k, cap);
  std::vector<std::vector<Element>> out;
  if (compiled.inconsistent) return out;
  if (k == 0) {
    if (satisfies(compiled, field, {})) out.emplace_back();
    return out;
  }
  for (Element first = 0; first < q; ++first) {
    sweep(k, q, first, [&](const std::vector<Element>& pt) {
      if (satisfies(compiled, field, pt)) out.push_back(pt);
    });
  }
  return out;
}

}  // namespace sdlab::lab
