#include "sdlab/lab/variety.hpp"

#include <stdexcept>

namespace sdlab::lab {

using poly::Block;

namespace {

Polynomial eliminated_coordinate(const CoefficientMode& mode, const std::vector<int>& others) {
  Polynomial p = Polynomial::constant(mode, 1);
  for (int i : others) p -= Polynomial::variable(mode, Variable::T(static_cast<std::uint32_t>(i)));
  return p;
}

}  // namespace

void VarietySpec::validate() const {
  if (m < 0 || n < 0) throw std::invalid_argument("variety dimensions must be non-negative");
  if (t < 0) throw std::invalid_argument("target fiber dimension must be non-negative");
  if (!field) throw std::invalid_argument("variety needs a field");
  const auto decl = declaration();
  for (const auto& eq : equations) {
    if (!(eq.mode() == mode())) throw poly::IncompatibleModes();
    for (const auto& v : eq.variables()) {
      if (!decl.declares(v)) throw std::invalid_argument("undeclared variable " + v.to_string());
    }
  }
}

VarietySpec VarietySpec::parse(int m, int n, int t, const std::vector<std::string>& equations, FieldPtr field) {
  VarietySpec v{m, n, t, {}, std::move(field)};
  const auto mode = v.mode();
  for (const auto& text : equations) v.equations.push_back(poly::parse_poly(text, v.declaration(), mode));
  v.validate();
  return v;
}

PointSystem VarietySpec::chart() const {
  std::vector<int> face;
  for (int i = 0; i <= n; ++i) face.push_back(i);
  return face_chart(face);
}

PointSystem VarietySpec::face_chart(const std::vector<int>& face) const {
  if (face.empty()) throw std::invalid_argument("empty face");
  const auto mode = this->mode();
  PointSystem sys;
  for (int i = 1; i <= m; ++i) sys.slots.push_back(Variable::X(static_cast<std::uint32_t>(i)));
  poly::Assignment a;
  for (int i = 0; i <= n; ++i) a.emplace(Variable::T(static_cast<std::uint32_t>(i)), Polynomial(mode));
  std::vector<int> rest(face.begin() + 1, face.end());
  for (int i : rest) {
    const auto v = Variable::T(static_cast<std::uint32_t>(i));
    sys.slots.push_back(v);
    a[v] = Polynomial::variable(mode, v);
  }
  a[Variable::T(static_cast<std::uint32_t>(face.front()))] = eliminated_coordinate(mode, rest);
  for (const auto& eq : equations) sys.equations.push_back(eq.substitute(a));
  return sys;
}

PointSystem VarietySpec::fiber(const std::vector<FiniteField::Element>& y) const {
  if (y.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("fiber point has wrong dimension");
  const auto mode = this->mode();
  PointSystem sys;
  for (int i = 1; i <= m; ++i) sys.slots.push_back(Variable::X(static_cast<std::uint32_t>(i)));
  poly::Assignment a;
  for (int i = 0; i <= n; ++i) {
    a.emplace(Variable::T(static_cast<std::uint32_t>(i)),
              Polynomial::constant(mode, poly::Scalar(field, y[static_cast<std::size_t>(i)])));
  }
  for (const auto& eq : equations) sys.equations.push_back(eq.substitute(a));
  return sys;
}

std::vector<std::vector<FiniteField::Element>> simplex_points(int n, const FiniteField& field) {
  const auto q = static_cast<FiniteField::Element>(field.order());
  std::vector<std::vector<FiniteField::Element>> out;
  std::vector<FiniteField::Element> free(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<FiniteField::Element> y;
    FiniteField::Element t0 = 1;
    for (auto v : free) t0 = field.sub(t0, v);
    y.push_back(t0);
    y.insert(y.end(), free.begin(), free.end());
    out.push_back(std::move(y));
    // odometer with the last coordinate fastest, giving lexicographic order
    int i = n - 1;
    while (i >= 0) {
      if (++free[static_cast<std::size_t>(i)] < q) break;
      free[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

VarietySpec pullback_variety(const VarietySpec& v, const simplex::AffineSimplexMap& map) {
  if (map.target_dim() != v.n) {
    throw std::invalid_argument("map target dimension " + std::to_string(map.target_dim()) +
                                " does not match the simplex dimension " + std::to_string(v.n));
  }
  const auto mode = v.mode();
  const auto m = map.converted(mode);
  for (std::size_t r = 0; r < m.matrix().rows(); ++r) {
    for (std::size_t c = 0; c < m.matrix().cols(); ++c) {
      if (m.matrix()(r, c).block_degree(Block::C) > 0) {
        throw std::invalid_argument("pullback needs specialized centers");
      }
    }
  }
  poly::Assignment a;
  for (int i = 0; i <= v.n; ++i) {
    Polynomial image(mode);
    for (int j = 0; j <= map.source_dim(); ++j) {
      image += m.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
               Polynomial::variable(mode, Variable::T(static_cast<std::uint32_t>(j)));
    }
    a.emplace(Variable::T(static_cast<std::uint32_t>(i)), std::move(image));
  }
  VarietySpec out{v.m, map.source_dim(), v.t, {}, v.field};
  for (const auto& eq : v.equations) out.equations.push_back(eq.substitute(a));
  return out;
}

}  // namespace sdlab::lab
