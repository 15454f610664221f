#include "sdlab/relcheck/relations.hpp"

#include <algorithm>

namespace sdlab::relcheck {

using simplex::face_map;
using simplex::PolyMatrix;
using poly::Polynomial;

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const RelationInstance& r) { return !r.pass; }));
}

void RelationReport::append(const RelationReport& other) {
  instances.insert(instances.end(), other.instances.begin(), other.instances.end());
}

Permutation induced_permutation(const Permutation& sigma) {
  const int n = sigma.size_param();
  if (n < 1) throw std::invalid_argument("induced permutation needs n >= 1");
  const int omitted = sigma(n);
  std::vector<int> tau;
  for (int j = 0; j < n; ++j) tau.push_back(sigma(j) < omitted ? sigma(j) : sigma(j) - 1);
  return Permutation(std::move(tau));
}

AffineSimplexMap MapProvider::subdivision(int n, const Permutation& sigma) const {
  return simplex::subdivision_map(n, sigma, family_);
}

ProductTargetMap MapProvider::homotopy(int n, int k, const Permutation& sigma) const {
  return simplex::homotopy_map(n, k, sigma, family_);
}

AffineSimplexMap PerturbedProvider::subdivision(int n, const Permutation& sigma) const {
  auto map = MapProvider::subdivision(n, sigma);
  if (p_.target == Target::subdivision && p_.n == n && p_.sigma == sigma.images()) {
    return map.perturbed(p_.row, p_.col, p_.delta);
  }
  return map;
}

ProductTargetMap PerturbedProvider::homotopy(int n, int k, const Permutation& sigma) const {
  auto h = MapProvider::homotopy(n, k, sigma);
  if (p_.target == Target::subdivision || p_.n != n || p_.k != k || p_.sigma != sigma.images()) return h;
  if (p_.target == Target::homotopy_first) return ProductTargetMap(h.first().perturbed(p_.row, p_.col, p_.delta), h.second());
  return ProductTargetMap(h.first(), h.second().perturbed(p_.row, p_.col, p_.delta));
}

namespace {

struct Diff {
  std::string entry;
  std::string text = "0";
};

bool first_difference(const PolyMatrix& a, const PolyMatrix& b, const char* label, Diff& out) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    out.entry = std::string(label) + " shape";
    out.text = "shape mismatch";
    return true;
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) {
        out.entry = std::string(label) + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
        out.text = (a(r, c) - b(r, c)).to_string();
        return true;
      }
    }
  }
  return false;
}

RelationInstance make(std::string id, int n, int k, const Permutation* sigma, int face) {
  RelationInstance r;
  r.relation_id = std::move(id);
  r.n = n;
  r.k = k;
  if (sigma != nullptr) r.sigma = sigma->images();
  r.face = face;
  return r;
}

void settle(RelationInstance& inst, const AffineSimplexMap& lhs, const AffineSimplexMap& rhs) {
  Diff d;
  inst.pass = !first_difference(lhs.matrix(), rhs.matrix(), "map", d);
  inst.entry = d.entry;
  inst.lhs_minus_rhs = d.text;
}

void settle(RelationInstance& inst, const ProductTargetMap& lhs, const ProductTargetMap& rhs) {
  Diff d;
  inst.pass = !first_difference(lhs.first().matrix(), rhs.first().matrix(), "first", d) &&
              !first_difference(lhs.second().matrix(), rhs.second().matrix(), "second", d);
  inst.entry = d.entry;
  inst.lhs_minus_rhs = d.text;
}

void integrity(RelationInstance& inst, const AffineSimplexMap& map) {
  inst.pass = map.columns_sum_to_one();
  if (!inst.pass) {
    for (std::size_t c = 0; c < map.matrix().cols(); ++c) {
      auto s = map.matrix().column_sum(c) - Polynomial::constant(map.mode(), 1);
      if (!s.is_zero()) {
        inst.entry = "column " + std::to_string(c) + " sum - 1";
        inst.lhs_minus_rhs = s.to_string();
        break;
      }
    }
  }
}

using simplex::Polynomial;

}  // namespace

RelationReport check_subdivision_relations(int n, const MapProvider& maps) {
  RelationReport report;
  if (n < 1) return report;
  const auto& mode = maps.family().coefficients();
  for (const auto& sigma : Permutation::all(n)) {
    const auto sd = maps.subdivision(n, sigma);
    auto bary = make("sd.barycentric", n, -1, &sigma, -1);
    integrity(bary, sd);
    report.instances.push_back(std::move(bary));
    for (int i = 0; i < n; ++i) {
      const auto face = face_map(i, n, mode);
      auto inst = make("sd.swap", n, -1, &sigma, i);
      settle(inst, sd * face, maps.subdivision(n, sigma.with_adjacent_swap(i)) * face);
      report.instances.push_back(std::move(inst));
    }
    const auto tau = induced_permutation(sigma);
    auto inst = make("sd.last", n, -1, &sigma, n);
    settle(inst, sd * face_map(n, n, mode), face_map(sigma(n), n, mode) * maps.subdivision(n - 1, tau));
    report.instances.push_back(std::move(inst));
  }
  return report;
}

RelationReport check_subdivision_relations(int n, const CenterFamily& family) {
  return check_subdivision_relations(n, MapProvider(family));
}

RelationReport check_patience_relations(int n, const MapProvider& maps) {
  RelationReport report;
  const auto& mode = maps.family().coefficients();
  for (int k = 0; k <= n; ++k) {
    for (const auto& sigma : Permutation::all(k)) {
      const auto h = maps.homotopy(n, k, sigma);
      auto bary = make("h.barycentric", n, k, &sigma, -1);
      integrity(bary, h.first());
      if (bary.pass) integrity(bary, h.second());
      report.instances.push_back(std::move(bary));

      for (int i = 0; i <= n + 1; ++i) {
        const auto face = face_map(i, n + 1, mode);
        const auto lhs = h.precompose(face);
        if (k == 0 && i == 0) {
          auto inst = make("h1", n, k, &sigma, i);
          settle(inst, lhs,
                 ProductTargetMap(simplex::identity_map(n, mode), simplex::constant_vertex_map(1, 1, n, mode)));
          report.instances.push_back(std::move(inst));
        } else if (k == n && i == n + 1) {
          auto inst = make("h2", n, k, &sigma, i);
          settle(inst, lhs,
                 ProductTargetMap(maps.subdivision(n, sigma), simplex::constant_vertex_map(0, 1, n, mode)));
          report.instances.push_back(std::move(inst));
        } else if (i < k) {
          auto inst = make("h3", n, k, &sigma, i);
          settle(inst, lhs, maps.homotopy(n, k, sigma.with_adjacent_swap(i)).precompose(face));
          report.instances.push_back(std::move(inst));
        } else if (i > k + 1) {
          auto inst = make(i <= n ? "h4" : "h4.top", n, k, &sigma, i);
          settle(inst, lhs, maps.homotopy(n - 1, k, sigma).postcompose_first(face_map(i - 1, n, mode)));
          report.instances.push_back(std::move(inst));
        } else if (i == k + 1 && k < n) {
          auto inst = make("h5", n, k, &sigma, i);
          settle(inst, lhs, maps.homotopy(n, k + 1, sigma.extended()).precompose(face));
          report.instances.push_back(std::move(inst));
        } else if (i == k && k >= 1) {
          const auto tau = induced_permutation(sigma);
          if (sigma(k) < k) {
            auto inst = make("h6", n, k, &sigma, i);
            settle(inst, lhs, maps.homotopy(n - 1, k - 1, tau).postcompose_first(face_map(sigma(k), n, mode)));
            report.instances.push_back(std::move(inst));
          } else {
            // sigma fixes k: this face is shared with the cell of sd_{n,k-1}^tau.
            auto inst = make("h6.interior", n, k, &sigma, i);
            settle(inst, lhs, maps.homotopy(n, k - 1, tau).precompose(face));
            report.instances.push_back(std::move(inst));
          }
        }
      }
    }
  }
  return report;
}

RelationReport check_patience_relations(int n, const CenterFamily& family) {
  return check_patience_relations(n, MapProvider(family));
}

RelationReport literal_face_k_relation(int n, const MapProvider& maps) {
  RelationReport report;
  const auto& mode = maps.family().coefficients();
  for (int k = 1; k <= n; ++k) {
    const auto face = face_map(k, n + 1, mode);
    for (const auto& sigma : Permutation::all(k)) {
      auto inst = make("h6.literal", n, k, &sigma, k);
      const auto tau = induced_permutation(sigma);
      settle(inst, maps.homotopy(n, k, sigma).precompose(face),
             maps.homotopy(n - 1, k - 1, tau).postcompose_first(face_map(sigma(k), n, mode)));
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

RelationReport cross_check_implication(int n, const MapProvider& maps) {
  // sd_n^s = pr_1 o sd_{n,n}^s o d_{n+1}, and d_{n+1} o d_i = d_i o d_n for i <= n,
  // so both subdivision relations can be read off the homotopy maps.
  RelationReport report;
  if (n < 1) return report;
  const auto& mode = maps.family().coefficients();
  const auto dn = face_map(n, n, mode);
  for (const auto& sigma : Permutation::all(n)) {
    const auto top = simplex::first_projection(maps.homotopy(n, n, sigma));
    for (int i = 0; i <= n; ++i) {
      const auto face = face_map(i, n, mode);
      const auto via_homotopy = top * face_map(i, n + 1, mode) * dn;
      auto direct = make("implication.face", n, n, &sigma, i);
      settle(direct, maps.subdivision(n, sigma) * face, via_homotopy);
      report.instances.push_back(std::move(direct));
      if (i < n) {
        const auto swapped = simplex::first_projection(maps.homotopy(n, n, sigma.with_adjacent_swap(i)));
        auto inst = make("implication.swap", n, n, &sigma, i);
        settle(inst, via_homotopy, swapped * face_map(i, n + 1, mode) * dn);
        report.instances.push_back(std::move(inst));
      } else {
        const auto tau = induced_permutation(sigma);
        const auto lower = simplex::first_projection(maps.homotopy(n - 1, n - 1, tau));
        auto inst = make("implication.last", n, n, &sigma, i);
        settle(inst, via_homotopy, face_map(sigma(n), n, mode) * lower * face_map(n, n, mode));
        report.instances.push_back(std::move(inst));
      }
    }
  }
  return report;
}

}  // namespace sdlab::relcheck
