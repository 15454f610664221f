#include "sdlab/lab/census.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "sdlab/util/parallel.hpp"

namespace sdlab::lab {

using poly::Scalar;
using simplex::CenterFamily;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CenterSpace::CenterSpace(int n, int m, const CensusConfig& cfg, FieldPtr field)
    : n_(n), m_(m), N_(cfg.N), field_(std::move(field)), fixed_(cfg.fixed) {
  if (cfg.N < 0) throw std::invalid_argument("center degree bound must be non-negative");
  std::set<std::pair<int, int>> free;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) free.emplace(i, j);
  }
  if (cfg.lambda.empty()) {
    slots_.assign(free.begin(), free.end());
  } else {
    std::set<std::pair<int, int>> chosen;
    for (const auto& ij : cfg.lambda) {
      if (!free.count(ij)) {
        throw std::invalid_argument("lambda entry (" + std::to_string(ij.first) + ", " + std::to_string(ij.second) +
                                    ") is not a free center coordinate");
      }
      chosen.insert(ij);
    }
    slots_.assign(chosen.begin(), chosen.end());
  }
  for (const auto& [ij, value] : fixed_) {
    if (!free.count(ij)) throw std::invalid_argument("fixed entry is not a free center coordinate");
  }
  monomials_ = poly::x_monomials_up_to(m, cfg.N);
}

std::optional<std::uint64_t> CenterSpace::size() const {
  const std::uint64_t p = field_->characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < parameter_count(); ++i) {
    if (total > UINT64_MAX / p) return std::nullopt;
    total *= p;
  }
  return total;
}

CenterFamily CenterSpace::build(const std::vector<std::uint32_t>& params) const {
  const auto mode = poly::CoefficientMode::finite_field(field_);
  std::map<std::pair<int, int>, Polynomial> coords;
  for (const auto& [ij, value] : fixed_) coords[ij] = Polynomial::constant(mode, value);
  std::size_t at = 0;
  for (const auto& ij : slots_) {
    Polynomial p(mode);
    for (const auto& mono : monomials_) p += Polynomial::term(mode, Scalar(field_, params[at++]), mono);
    coords[ij] = std::move(p);
  }
  std::vector<std::vector<Polynomial>> free_coords;
  for (int i = 1; i <= n_; ++i) {
    std::vector<Polynomial> row;
    for (int j = 0; j < i; ++j) {
      auto it = coords.find({i, j});
      row.push_back(it == coords.end() ? Polynomial(mode) : it->second);
    }
    free_coords.push_back(std::move(row));
  }
  return CenterFamily::from_free_coordinates(free_coords, mode, simplex::CenterMode::polynomial, m_, N_);
}

CenterFamily CenterSpace::family(std::uint64_t index) const {
  const std::uint64_t p = field_->characteristic();
  std::vector<std::uint32_t> params(parameter_count());
  for (auto& d : params) {
    d = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return build(params);
}

CenterFamily CenterSpace::sample(std::uint64_t seed, std::uint64_t sample) const {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(sample)));
  std::uniform_int_distribution<std::uint32_t> digit(0, field_->characteristic() - 1);
  std::vector<std::uint32_t> params(parameter_count());
  for (auto& d : params) d = digit(rng);
  return build(params);
}

namespace {

/// Families to visit: all of them when exhaustive, otherwise seeded samples.
struct Plan {
  bool exhaustive = true;
  std::uint64_t count = 0;
};

Plan plan_for(const CenterSpace& space, const CensusConfig& cfg) {
  const auto size = space.size();
  if (cfg.plan == SamplePlan::exhaustive) {
    if (!size || *size > cfg.max_enumeration) {
      throw CapExceeded("center space of " + std::to_string(space.parameter_count()) +
                        " parameters exceeds the enumeration cap " + std::to_string(cfg.max_enumeration));
    }
    return {true, *size};
  }
  if (cfg.sample_size == 0) throw std::invalid_argument("sampled plan needs a positive sample size");
  return {false, cfg.sample_size};
}

CenterFamily family_at(const CenterSpace& space, const CensusConfig& cfg, const Plan& plan, std::uint64_t i) {
  return plan.exhaustive ? space.family(i) : space.sample(cfg.seed, i);
}

}  // namespace

BadCenterReport bad_center_census(const VarietySpec& v, const CensusConfig& cfg,
                                  const std::vector<Permutation>& sigma_set) {
  v.validate();
  for (const auto& s : sigma_set) {
    if (s.size_param() != v.n) throw std::invalid_argument("permutation " + s.to_string() + " does not act on [n]");
  }
  const CenterSpace space(v.n, v.m, cfg, v.field);
  const auto plan = plan_for(space, cfg);
  const FieldTower tower(v.field->characteristic(), cfg.max_e);

  // outcome[family][sigma]
  std::vector<std::vector<CheckStatus>> outcome(plan.count);
  util::parallel_for(plan.count, [&](std::size_t i) {
    const auto family = family_at(space, cfg, plan, i);
    for (const auto& sigma : sigma_set) {
      const auto pulled = pullback_variety(v, simplex::subdivision_map(v.n, sigma, family));
      outcome[i].push_back(equidim_check(pulled, tower, cfg.max_e, cfg.max_points).status);
    }
  });

  BadCenterReport report;
  report.families = plan.count;
  report.exhaustive = plan.exhaustive;
  report.parameter_count = space.parameter_count();
  report.within_hypothesis = cfg.N >= v.n + 1;
  for (const auto& s : sigma_set) report.per_sigma.push_back({s, 0, 0});
  for (const auto& row : outcome) {
    bool bad = false;
    bool unstable = false;
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (row[s] == CheckStatus::fail) {
        ++report.per_sigma[s].bad;
        bad = true;
      } else if (row[s] == CheckStatus::unstable) {
        ++report.per_sigma[s].unstable;
        unstable = true;
      }
    }
    if (bad) {
      ++report.joint_bad;
    } else if (unstable) {
      ++report.joint_unstable;
    }
  }
  report.note = "bad centers lie in a positive-codimension locus, so the bad fraction should shrink as q grows";
  if (!report.within_hypothesis) report.note += "; N < n + 1, so this result is heuristic";
  return report;
}

VanishingReport vanishing_census(const VarietySpec& w, int N, int max_e, std::uint64_t cap) {
  w.validate();
  if (w.n < 1) throw std::invalid_argument("vanishing census needs at least one Z coordinate");
  if (N < 0) throw std::invalid_argument("degree bound must be non-negative");
  const FieldTower tower(w.field->characteristic(), max_e);
  const auto sys = w.chart();
  const auto monos = poly::x_monomials_up_to(w.m, N);
  const std::uint64_t p = w.field->characteristic();

  VanishingReport report;
  report.candidates = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (report.candidates > cap / p) throw CapExceeded("candidate polynomial space exceeds cap");
    report.candidates *= p;
  }

  // Points of W per extension degree; slots are X1..Xm then T1..Tn.
  std::vector<std::vector<std::vector<FiniteField::Element>>> points;
  std::set<std::vector<FiniteField::Element>> x_images;
  for (int e = 1; e <= max_e; ++e) {
    auto pts = enumerate_points(sys, tower, e, cap);
    report.points += pts.size();
    for (const auto& pt : pts) {
      if (x_images.size() > 1) break;
      x_images.emplace(pt.begin(), pt.begin() + w.m);
    }
    points.push_back(std::move(pts));
  }
  report.w_empty = report.points == 0;
  report.projection_is_point = x_images.size() == 1;

  for (std::uint64_t idx = 0; idx < report.candidates; ++idx) {
    std::vector<FiniteField::Element> coeffs(monos.size());
    std::uint64_t rest = idx;
    for (auto& c : coeffs) {
      c = static_cast<FiniteField::Element>(rest % p);
      rest /= p;
    }
    bool vanishes = true;
    for (int e = 1; e <= max_e && vanishes; ++e) {
      const auto& f = *tower.at(e);
      for (const auto& pt : points[static_cast<std::size_t>(e - 1)]) {
        FiniteField::Element value = 0;
        for (std::size_t k = 0; k < monos.size(); ++k) {
          FiniteField::Element term = coeffs[k];
          for (const auto& [var, exp] : monos[k].factors()) {
            term = f.mul(term, f.pow(pt[var.index() - 1], exp));
          }
          value = f.add(value, term);
        }
        if (value != pt[static_cast<std::size_t>(w.m)]) {
          vanishes = false;
          break;
        }
      }
    }
    if (vanishes) ++report.vanishing;
  }
  std::uint64_t scale = 1;
  for (int i = 0; i <= N; ++i) scale *= p;
  report.within_bound = report.vanishing * scale <= report.candidates;
  report.empty_inverse_image = report.projection_is_point && report.vanishing == 0;
  return report;
}

HomotopyFaceReport homotopy_face_condition_check(const VarietySpec& v, const CensusConfig& cfg) {
  v.validate();
  const CenterSpace space(v.n, v.m, cfg, v.field);
  const auto plan = plan_for(space, cfg);
  const FieldTower tower(v.field->characteristic(), cfg.max_e);

  std::vector<CheckStatus> outcome(plan.count, CheckStatus::pass);
  std::size_t maps = 0;
  for (int k = 0; k <= v.n; ++k) maps += Permutation::all(k).size();
  util::parallel_for(plan.count, [&](std::size_t i) {
    const auto family = family_at(space, cfg, plan, i);
    for (int k = 0; k <= v.n; ++k) {
      for (const auto& sigma : Permutation::all(k)) {
        const auto pr = simplex::first_projection(simplex::homotopy_map(v.n, k, sigma, family));
        const auto pulled = pullback_variety(v, pr);
        const auto faces = face_condition_check(pulled, tower, cfg.max_e, cfg.max_points);
        auto status = faces.status;
        if (!faces.total.empty() && faces.total.stable && !(faces.total.dim == v.n + v.t + 1)) {
          status = CheckStatus::fail;
        }
        outcome[i] = combine(outcome[i], status);
      }
    }
  });

  HomotopyFaceReport report;
  report.families = plan.count;
  report.maps_per_family = maps;
  for (auto s : outcome) {
    if (s == CheckStatus::pass) ++report.passing;
    if (s == CheckStatus::unstable) ++report.unstable;
  }
  return report;
}

}  // namespace sdlab::lab
