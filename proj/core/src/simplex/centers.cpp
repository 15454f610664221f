#include "sdlab/simplex/centers.hpp"

#include <random>
#include <stdexcept>

namespace sdlab::simplex {

using poly::Variable;

bool BarycentricPoint::sums_to_one() const {
  if (coords.empty()) return false;
  Polynomial s(coords.front().mode());
  for (const auto& c : coords) s += c;
  return s == Polynomial::constant(s.mode(), 1);
}

const char* to_string(CenterMode mode) {
  switch (mode) {
    case CenterMode::symbolic: return "symbolic";
    case CenterMode::polynomial: return "polynomial";
    case CenterMode::sampled: return "sampled";
    case CenterMode::explicit_points: return "explicit";
  }
  return "?";
}

namespace {

BarycentricPoint complete(std::vector<Polynomial> free, const CoefficientMode& mode) {
  Polynomial last = Polynomial::constant(mode, 1);
  for (const auto& c : free) last -= c;
  free.push_back(std::move(last));
  return BarycentricPoint{std::move(free)};
}

BarycentricPoint apex(const CoefficientMode& mode) { return BarycentricPoint{{Polynomial::constant(mode, 1)}}; }

}  // namespace

CenterFamily CenterFamily::symbolic(int n_max) {
  const auto q = CoefficientMode::rational();
  CenterFamily f;
  f.mode_ = CenterMode::symbolic;
  f.coeffs_ = q;
  f.centers_.push_back(apex(q));
  for (int i = 1; i <= n_max; ++i) {
    std::vector<Polynomial> free;
    for (int j = 0; j < i; ++j) {
      free.push_back(Polynomial::variable(q, Variable::C(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))));
    }
    f.centers_.push_back(complete(std::move(free), q));
  }
  return f;
}

CenterFamily CenterFamily::random_polynomial(int n_max, int m, int degree_bound, const CoefficientMode& mode,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto monos = poly::x_monomials_up_to(m, degree_bound);
  auto draw = [&]() -> poly::Scalar {
    if (mode.is_rational()) return mode.from_int(static_cast<long>(rng() % 9) - 4);
    return mode.from_int(static_cast<long>(rng() % mode.field()->characteristic()));
  };
  std::vector<std::vector<Polynomial>> free_coords;
  for (int i = 1; i <= n_max; ++i) {
    std::vector<Polynomial> free;
    for (int j = 0; j < i; ++j) {
      Polynomial p(mode);
      for (const auto& mono : monos) p += Polynomial::term(mode, draw(), mono);
      free.push_back(std::move(p));
    }
    free_coords.push_back(std::move(free));
  }
  CenterFamily f = from_free_coordinates(free_coords, mode, CenterMode::polynomial, m, degree_bound);
  f.seed_ = seed;
  return f;
}

CenterFamily CenterFamily::sampled(int n_max, int m, int degree_bound, poly::FieldPtr field, std::uint64_t seed) {
  CenterFamily f = random_polynomial(n_max, m, degree_bound, CoefficientMode::finite_field(std::move(field)), seed);
  f.mode_ = CenterMode::sampled;
  return f;
}

CenterFamily CenterFamily::from_free_coordinates(const std::vector<std::vector<Polynomial>>& free_coords,
                                                 const CoefficientMode& mode, CenterMode tag, int m,
                                                 int degree_bound) {
  CenterFamily f;
  f.mode_ = tag;
  f.coeffs_ = mode;
  f.m_ = m;
  f.degree_bound_ = degree_bound;
  f.centers_.push_back(apex(mode));
  for (std::size_t i = 0; i < free_coords.size(); ++i) {
    if (free_coords[i].size() != i + 1) throw std::invalid_argument("center c^i needs exactly i free coordinates");
    for (const auto& c : free_coords[i]) {
      if (!(c.mode() == mode)) throw poly::IncompatibleModes();
      if (degree_bound >= 0 && c.block_degree(poly::Block::X) > degree_bound) {
        throw std::invalid_argument("center coordinate exceeds the degree bound");
      }
    }
    f.centers_.push_back(complete(free_coords[i], mode));
  }
  return f;
}

CenterFamily CenterFamily::from_points(std::vector<BarycentricPoint> points, const CoefficientMode& mode,
                                       bool validate) {
  CenterFamily f;
  f.mode_ = CenterMode::explicit_points;
  f.coeffs_ = mode;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coords.size() != i + 1) throw std::invalid_argument("center c^i must have i + 1 coordinates");
    if (validate && !points[i].sums_to_one()) throw std::invalid_argument("center is not barycentric");
  }
  f.centers_ = std::move(points);
  return f;
}

const BarycentricPoint& CenterFamily::center(int i) const {
  if (i < 0 || i > n_max()) throw std::out_of_range("no center of dimension " + std::to_string(i));
  return centers_[static_cast<std::size_t>(i)];
}

bool CenterFamily::is_barycentric() const {
  for (const auto& c : centers_) {
    if (!c.sums_to_one()) return false;
  }
  return true;
}

poly::Assignment CenterFamily::specialization() const {
  poly::Assignment out;
  for (int i = 1; i <= n_max(); ++i) {
    for (int j = 0; j < i; ++j) {
      out.emplace(Variable::C(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)),
                  centers_[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace sdlab::simplex
