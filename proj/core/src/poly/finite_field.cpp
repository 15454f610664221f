#include "sdlab/poly/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdlab::poly {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 22;

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = mod_inv(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), m, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t k, const PrimePoly& m, std::uint32_t p) {
  PrimePoly result = poly_mod(PrimePoly{1}, m, p);
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// x^(p^d) mod f by d successive p-th powers.
PrimePoly frobenius_power_of_x(std::uint32_t d, const PrimePoly& f, std::uint32_t p) {
  PrimePoly h = poly_mod(PrimePoly{0, 1}, f, p);
  for (std::uint32_t i = 0; i < d; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const PrimePoly& f_in) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const auto e = static_cast<std::uint32_t>(f.size() - 1);
  if (e == 1) return true;
  const PrimePoly x = poly_mod(PrimePoly{0, 1}, f, p);
  if (poly_sub(frobenius_power_of_x(e, f, p), x, p).size() != 0) return false;
  for (std::uint32_t r : prime_factors(e)) {
    PrimePoly g = poly_gcd(f, poly_sub(frobenius_power_of_x(e / r, f, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, PrimePoly modulus)
    : p_(p), e_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  order_ = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    place_.push_back(order_);
    order_ *= p_;
    if (order_ > 0xffffffffull) throw std::invalid_argument("field order exceeds 2^32");
  }
  if (order_ <= kTableLimit) build_tables();
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(std::uint32_t p, PrimePoly modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is not irreducible");
  return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
}

std::shared_ptr<const FiniteField> FiniteField::build(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  // Candidates x^e + a_{e-1} x^{e-1} + ... + a_0 in increasing (a_{e-1}, ..., a_0).
  PrimePoly f(e + 1, 0);
  f[e] = 1;
  while (true) {
    if (is_irreducible(p, f)) return with_modulus(p, f);
    std::uint32_t i = 0;
    while (i < e && ++f[i] == p) f[i++] = 0;
    if (i == e) throw std::logic_error("no irreducible polynomial found");
  }
}

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::generator() const {
  if (e_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
  return p_;
}

std::vector<std::uint32_t> FiniteField::digits(Element a) const {
  std::vector<std::uint32_t> out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FiniteField::Element FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < d.size() && i < e_; ++i) v += std::uint64_t{d[i] % p_} * place_[i];
  return static_cast<Element>(v);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (e_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place_[i];
    a /= p_;
    b /= p_;
  }
  return static_cast<Element>(out);
}

FiniteField::Element FiniteField::neg(Element a) const {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place_[i];
    a /= p_;
  }
  return static_cast<Element>(out);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  if (e_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
  auto da = digits(a);
  auto db = digits(b);
  PrimePoly prod = poly_mulmod(da, db, modulus_, p_);
  return from_digits(prod);
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (log_.empty()) return mul_slow(a, b);
  std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
  if (k >= order_ - 1) k -= order_ - 1;
  return exp_[k];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) return exp_[(std::uint64_t{log_[a]} * (k % (order_ - 1))) % (order_ - 1)];
  Element result = 1;
  while (k > 0) {
    if (k & 1) result = mul_slow(result, a);
    a = mul_slow(a, a);
    k >>= 1;
  }
  return result;
}

void FiniteField::build_tables() {
  const std::uint64_t n = order_ - 1;
  if (n == 0) return;
  std::vector<Element> powers;
  powers.reserve(n);
  for (Element g = 1; g < order_; ++g) {
    powers.clear();
    Element x = 1;
    do {
      powers.push_back(x);
      x = mul_slow(x, g);
    } while (x != 1 && powers.size() <= n);
    if (powers.size() == n) break;
  }
  exp_ = powers;
  log_.assign(order_, 0);
  for (std::uint64_t k = 0; k < n; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
}

std::string FiniteField::to_string(Element a) const {
  if (in_prime_field(a)) return std::to_string(a);
  auto d = digits(a);
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << '}';
  return os.str();
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "x";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace sdlab::poly
