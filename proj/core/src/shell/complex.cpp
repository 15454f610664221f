#include "sdlab/shell/complex.hpp"

#include <algorithm>
#include <map>

namespace sdlab::shell {

std::string HomologyGroup::to_string() const {
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

std::vector<HomologyGroup> homology(const ChainComplex& complex) {
  const auto top = static_cast<std::size_t>(complex.top_degree() + 1);
  std::vector<std::size_t> ranks(top + 1, 0);
  std::vector<std::vector<Integer>> factors(top + 1);
  for (std::size_t s = 1; s < top; ++s) {
    const auto& d = complex.differentials[s];
    if (d.rows() == 0 || d.cols() == 0) continue;
    auto inv = smith_normal_form(d).invariant_factors();
    ranks[s] = inv.size();
    factors[s] = std::move(inv);
  }
  std::vector<HomologyGroup> out;
  for (std::size_t s = 0; s < top; ++s) {
    HomologyGroup h;
    const std::size_t outgoing = s >= 1 ? ranks[s] : 0;
    h.free_rank = complex.ranks[s] - outgoing - ranks[s + 1];
    for (const auto& f : factors[s + 1]) {
      if (f > 1) h.torsion.push_back(f);
    }
    out.push_back(std::move(h));
  }
  return out;
}

bool verify_d_squared(const ChainComplex& complex) {
  for (std::size_t s = 2; s < complex.differentials.size(); ++s) {
    const auto& a = complex.differentials[s - 1];
    const auto& b = complex.differentials[s];
    if (a.rows() == 0 || b.cols() == 0) continue;
    if (!(a * b).is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<bool> mask(static_cast<std::size_t>(n + 1), false);
  std::fill(mask.begin(), mask.begin() + size, true);
  do {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

ShellComplex build_shell(int n, SignRule rule) {
  ShellComplex shell;
  shell.n = n;
  for (int s = 0; s <= n; ++s) shell.generators.push_back(subsets_of_size(n, s + 1));
  auto& cx = shell.complex;
  for (const auto& g : shell.generators) cx.ranks.push_back(g.size());
  cx.differentials.emplace_back();
  for (int s = 1; s <= n; ++s) {
    const auto& src = shell.generators[static_cast<std::size_t>(s)];
    const auto& dst = shell.generators[static_cast<std::size_t>(s - 1)];
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
    IntMatrix d(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t k = 0; k < src[c].size(); ++k) {
        auto face = src[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        const long sign = rule == SignRule::alternating && k % 2 == 1 ? -1 : 1;
        d(index.at(face), c) += sign;
      }
    }
    cx.differentials.push_back(std::move(d));
  }
  return shell;
}

ChainComplex constant_target_complex(int top_degree) {
  ChainComplex cx;
  cx.differentials.emplace_back();
  for (int s = 0; s <= top_degree; ++s) {
    cx.ranks.push_back(1);
    if (s >= 1) {
      IntMatrix d(1, 1);
      d(0, 0) = s % 2 == 0 ? 1 : 0;
      cx.differentials.push_back(std::move(d));
    }
  }
  return cx;
}

CanonicalMapCheck canonical_map(int n) {
  const auto shell = build_shell(n);
  CanonicalMapCheck check;
  check.target = constant_target_complex(n + 1);
  for (int s = 0; s <= n; ++s) {
    IntMatrix can(1, shell.complex.ranks[static_cast<std::size_t>(s)]);
    for (std::size_t c = 0; c < can.cols(); ++c) can(0, c) = 1;
    check.components.push_back(std::move(can));
  }
  check.commutes = true;
  for (int s = 1; s <= n; ++s) {
    const auto us = static_cast<std::size_t>(s);
    const auto lhs = check.components[us - 1] * shell.complex.differentials[us];
    const auto rhs = check.target.differentials[us] * check.components[us];
    if (!(lhs == rhs)) check.commutes = false;
  }
  return check;
}

}  // namespace sdlab::shell
