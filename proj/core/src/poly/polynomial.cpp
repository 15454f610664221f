#include "sdlab/poly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdlab::poly {

Polynomial Polynomial::constant(const CoefficientMode& mode, long value) {
  return constant(mode, mode.from_int(value));
}

Polynomial Polynomial::constant(const CoefficientMode& mode, const Scalar& value) {
  return term(mode, value, Monomial{});
}

Polynomial Polynomial::variable(const CoefficientMode& mode, Variable v) {
  return term(mode, mode.one(), Monomial::of(v));
}

Polynomial Polynomial::term(const CoefficientMode& mode, const Scalar& coeff, Monomial m) {
  Polynomial p(mode);
  p.add_term(m, mode.convert(coeff));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial{}); }

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mode_.zero() : it->second;
}

Degree Polynomial::total_degree() const {
  // Descending grlex: the first term has the largest total degree.
  if (terms_.empty()) return Degree::neg_inf();
  return Degree(static_cast<int>(terms_.begin()->first.total_degree()));
}

Degree Polynomial::block_degree(Block b) const {
  Degree d = Degree::neg_inf();
  for (const auto& [m, c] : terms_) d = max(d, Degree(static_cast<int>(m.block_degree(b))));
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_mode(const Polynomial& other) const {
  if (!(mode_ == other.mode_)) throw IncompatibleModes();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(mode_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_mode(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_mode(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_mode(b);
  Polynomial out(a.mode_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial out(mode_);
  const Scalar k = mode_.convert(s);
  if (k.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * k);
  return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(mode_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const Assignment& assignment) const {
  for (const auto& [v, value] : assignment) {
    if (!(value.mode() == mode_)) throw IncompatibleModes();
  }
  std::map<std::pair<Variable, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](Variable v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(v).pow(e)).first;
    return it->second;
  };
  Polynomial out(mode_);
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> kept;
    Polynomial product = term(mode_, c, Monomial{});
    for (const auto& [v, e] : m.factors()) {
      if (assignment.contains(v)) {
        product *= power_of(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (!kept.empty()) product *= term(mode_, mode_.one(), Monomial(std::move(kept)));
    out += product;
  }
  return out;
}

Scalar Polynomial::evaluate(const Point& point) const {
  if (point.empty()) {
    if (!is_constant()) throw std::invalid_argument("missing assignment");
    return constant_term();
  }
  const Scalar& sample = point.begin()->second;
  const CoefficientMode target =
      sample.is_rational() ? CoefficientMode::rational() : CoefficientMode::finite_field(sample.field());
  Scalar total = target.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = target.convert(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("missing assignment for " + v.to_string());
      const Scalar x = target.convert(it->second);
      if (x.is_rational()) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), x.rational().get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), x.rational().get_den_mpz_t(), e);
        t = t * Scalar(r);
      } else {
        t = t * Scalar(x.field(), x.field()->pow(x.element(), e));
      }
    }
    total = total + t;
  }
  return total;
}

Polynomial Polynomial::converted(const CoefficientMode& mode) const {
  Polynomial out(mode);
  for (const auto& [m, c] : terms_) out.add_term(m, mode.convert(c));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.is_negative();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar mag = c.abs();
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += m.to_string();
    } else {
      out += mag.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.mode_ == b.mode_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
    const int c = grlex_compare(i->first, j->first);
    if (c != 0) return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto s = i->second <=> j->second; s != 0) return s;
  }
  if (i != a.terms_.end()) return std::strong_ordering::greater;
  if (j != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown op");
}

}  // namespace sdlab::poly
