#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

int sign_by_inversions(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<Perm> permutations(int n) {
  Perm p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

Q small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Vec complete(Vec free) {
  Q last = 1;
  for (const auto& v : free) last -= v;
  free.push_back(last);
  return free;
}

}  // namespace

Centers random_centers(int n_max, std::mt19937_64& rng) {
  Centers c;
  for (int i = 0; i <= n_max; ++i) {
    Vec free;
    for (int j = 0; j < i; ++j) free.push_back(small_rational(rng));
    c.push_back(complete(std::move(free)));
  }
  return c;
}

Vec random_point(int n, std::mt19937_64& rng) {
  Vec free;
  for (int j = 0; j < n; ++j) free.push_back(small_rational(rng));
  return complete(std::move(free));
}

Vec embed(const std::vector<int>& subset, int n, const Centers& c) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  Vec out(static_cast<std::size_t>(n + 1), Q(0));
  const auto& center = c.at(s.size() - 1);
  for (std::size_t r = 0; r < s.size(); ++r) out[static_cast<std::size_t>(s[r])] = center[r];
  return out;
}

Vec sd(int n, const Perm& sigma, const Centers& c, const Vec& x) {
  Vec out(static_cast<std::size_t>(n + 1), Q(0));
  std::vector<int> prefix;
  for (int k = 0; k <= n; ++k) {
    prefix.push_back(sigma[static_cast<std::size_t>(k)]);
    const auto image = embed(prefix, n, c);
    for (int r = 0; r <= n; ++r) out[static_cast<std::size_t>(r)] += x[static_cast<std::size_t>(k)] * image[static_cast<std::size_t>(r)];
  }
  return out;
}

Vec face(int i, const Vec& x) {
  Vec out = x;
  out.insert(out.begin() + i, Q(0));
  return out;
}

Pair homotopy(int n, int k, const Perm& sigma, const Centers& c, const Vec& x) {
  Pair out{Vec(static_cast<std::size_t>(n + 1), Q(0)), Vec(2, Q(0))};
  std::vector<int> prefix;
  for (int j = 0; j <= n + 1; ++j) {
    const auto& w = x[static_cast<std::size_t>(j)];
    if (j <= k) {
      prefix.push_back(sigma[static_cast<std::size_t>(j)]);
      const auto image = embed(prefix, n, c);
      for (int r = 0; r <= n; ++r) out.first[static_cast<std::size_t>(r)] += w * image[static_cast<std::size_t>(r)];
      out.second[0] += w;
    } else {
      out.first[static_cast<std::size_t>(j - 1)] += w;
      out.second[1] += w;
    }
  }
  return out;
}

Perm induced_by_search(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size()) - 1;
  const int omit = sigma.back();
  for (const auto& tau : permutations(n - 1)) {
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      const int t = tau[static_cast<std::size_t>(j)];
      const int mapped = t < omit ? t : t + 1;
      ok = ok && mapped == sigma[static_cast<std::size_t>(j)];
    }
    if (ok) return tau;
  }
  throw std::logic_error("no induced permutation");
}

Perm swap_adjacent(const Perm& sigma, int i) {
  Perm out = sigma;
  std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i + 1)]);
  return out;
}

Perm extend(const Perm& sigma) {
  Perm out = sigma;
  out.push_back(static_cast<int>(sigma.size()));
  return out;
}

RelationTally check_homotopy_relations(int n, const Centers& c, std::mt19937_64& rng) {
  RelationTally tally;
  const auto x = random_point(n, rng);  // a point of Delta^n, the source of every face
  auto record = [&](bool ok) {
    ++tally.instances;
    if (!ok) ++tally.failures;
  };
  for (int k = 0; k <= n; ++k) {
    for (const auto& sigma : permutations(k)) {
      for (int i = 0; i <= n + 1; ++i) {
        const auto lhs = homotopy(n, k, sigma, c, face(i, x));
        if (k == 0 && i == 0) {
          record(lhs == Pair{x, Vec{Q(0), Q(1)}});
        } else if (k == n && i == n + 1) {
          record(lhs == Pair{sd(n, sigma, c, x), Vec{Q(1), Q(0)}});
        } else if (i < k) {
          record(lhs == homotopy(n, k, swap_adjacent(sigma, i), c, face(i, x)));
        } else if (i > k + 1) {
          const auto lower = homotopy(n - 1, k, sigma, c, x);
          record(lhs == Pair{face(i - 1, lower.first), lower.second});
        } else if (i == k + 1 && k < n) {
          record(lhs == homotopy(n, k + 1, extend(sigma), c, face(i, x)));
        } else if (i == k && k >= 1) {
          const auto tau = induced_by_search(sigma);
          if (sigma[static_cast<std::size_t>(k)] < k) {
            const auto lower = homotopy(n - 1, k - 1, tau, c, x);
            record(lhs == Pair{face(sigma[static_cast<std::size_t>(k)], lower.first), lower.second});
          } else {
            record(lhs == homotopy(n, k - 1, tau, c, face(i, x)));
          }
        }
      }
    }
  }
  return tally;
}

RelationTally check_literal_face_k(int n, const Centers& c, std::mt19937_64& rng, int* fixed_k_failures) {
  RelationTally tally;
  const auto x = random_point(n, rng);
  for (int k = 1; k <= n; ++k) {
    for (const auto& sigma : permutations(k)) {
      const auto lhs = homotopy(n, k, sigma, c, face(k, x));
      const auto lower = homotopy(n - 1, k - 1, induced_by_search(sigma), c, x);
      const bool ok = lhs == Pair{face(sigma[static_cast<std::size_t>(k)], lower.first), lower.second};
      ++tally.instances;
      if (!ok) {
        ++tally.failures;
        if (fixed_k_failures && sigma[static_cast<std::size_t>(k)] == k) ++*fixed_k_failures;
      }
    }
  }
  return tally;
}

mpz_class determinant_laplace(const IntMat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    IntMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const mpz_class term = a[0][c] * determinant_laplace(minor);
    det += c % 2 == 0 ? term : mpz_class(-term);
  }
  return det;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<mpz_class> invariant_factors_by_minors(const IntMat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<mpz_class> divisors{1};  // d_0 = 1
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        IntMat m;
        for (auto i : r) {
          std::vector<mpz_class> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(std::move(row));
        }
        mpz_class det = determinant_laplace(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

int rank_over_q(const IntMat& a) {
  std::vector<std::vector<Q>> m;
  for (const auto& row : a) {
    std::vector<Q> r;
    for (const auto& v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::uint32_t Fp::inv(std::uint32_t a) const {
  for (std::uint32_t b = 1; b < p; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw std::domain_error("zero has no inverse");
}

std::vector<F9> F9::all() {
  std::vector<F9> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) out.push_back({a, b});
  }
  return out;
}

std::uint64_t count_mod_p(std::uint32_t p, int k,
                          const std::function<std::uint32_t(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> x(static_cast<std::size_t>(k), 0);
  std::uint64_t count = 0;
  while (true) {
    if (f(x) % p == 0) ++count;
    int i = 0;
    while (i < k) {
      if (++x[static_cast<std::size_t>(i)] < p) break;
      x[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k) return count;
  }
}

bool diagonal_center_is_bad(std::uint32_t p, std::uint32_t c0, std::uint32_t c1, bool swapped) {
  // Pulled back along sd_1 and with t0 = 1 - t1, the equation T0 - T1 becomes
  // 1 + t1 (a - b - 1) up to sign, where (a, b) = (c, 1 - c) for the identity
  // and (1 - c, c) for the swap. A fiber is all of A^1 exactly when this
  // vanishes for every X.
  const Fp f{p};
  for (std::uint32_t t1 = 0; t1 < p; ++t1) {
    bool all_x = true;
    for (std::uint32_t x = 0; x < p && all_x; ++x) {
      const std::uint32_t c = f.add(c0, f.mul(c1, x));
      const std::uint32_t a = swapped ? f.sub(1, c) : c;
      const std::uint32_t b = swapped ? c : f.sub(1, c);
      const std::uint32_t value = f.add(1, f.mul(t1, f.sub(f.sub(a, b), 1)));
      all_x = value == 0;
    }
    if (all_x) return true;
  }
  return false;
}

std::uint64_t telescoping_term_count(int s) {
  std::uint64_t d_of_h = 0;
  for (int k = 0; k <= s; ++k) d_of_h += factorial(k + 1) * static_cast<std::uint64_t>(s + 2);
  std::uint64_t h_of_d = 0;
  for (int k = 0; k <= s - 1; ++k) h_of_d += factorial(k + 1);
  return d_of_h + static_cast<std::uint64_t>(s + 1) * h_of_d;
}

}  // namespace oracle
