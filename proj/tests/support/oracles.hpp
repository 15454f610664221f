#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's algebra: maps are evaluated pointwise from their vertex
// definitions, integer invariants come from minors, and finite fields are
// plain modular arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Perm = std::vector<int>;

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);
int sign_by_inversions(const Perm& p);
std::vector<Perm> permutations(int n);  // of {0..n}, lexicographic

/// Barycentric centers c[0..n_max], c[i] of length i + 1 summing to 1.
using Centers = std::vector<Vec>;
Centers random_centers(int n_max, std::mt19937_64& rng);
Vec random_point(int n, std::mt19937_64& rng);  // n + 1 coordinates summing to 1

Vec embed(const std::vector<int>& subset, int n, const Centers& c);
Vec sd(int n, const Perm& sigma, const Centers& c, const Vec& x);
Vec face(int i, const Vec& x);  // Delta^{n-1} -> Delta^n, inserts 0 at i
struct Pair {
  Vec first;
  Vec second;
  bool operator==(const Pair&) const = default;
};
Pair homotopy(int n, int k, const Perm& sigma, const Centers& c, const Vec& x);
/// tau with d_{sigma(n)} o tau = sigma on [n-1], found by search.
Perm induced_by_search(const Perm& sigma);
Perm swap_adjacent(const Perm& sigma, int i);  // sigma o (i, i+1)
Perm extend(const Perm& sigma);

/// Pointwise checks of the homotopy face relations at the point x of
/// Delta^n; returns the number of relation instances that disagree.
struct RelationTally {
  int instances = 0;
  int failures = 0;
};
RelationTally check_homotopy_relations(int n, const Centers& c, std::mt19937_64& rng);
RelationTally check_literal_face_k(int n, const Centers& c, std::mt19937_64& rng, int* fixed_k_failures);

using IntMat = std::vector<std::vector<mpz_class>>;
mpz_class determinant_laplace(const IntMat& a);
/// Invariant factors from gcds of k x k minors (small matrices only).
std::vector<mpz_class> invariant_factors_by_minors(const IntMat& a);
int rank_over_q(const IntMat& a);

/// Arithmetic in F_p and in F_9 = F_3[i]/(i^2 + 1).
struct Fp {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
};
struct F9 {
  int re = 0;
  int im = 0;
  F9 operator+(F9 o) const { return {(re + o.re) % 3, (im + o.im) % 3}; }
  F9 operator*(F9 o) const { return {((re * o.re - im * o.im) % 3 + 3) % 3, (re * o.im + im * o.re) % 3}; }
  bool operator==(const F9&) const = default;
  static std::vector<F9> all();
};

/// Number of x in F_p^k with f(x) = 0.
std::uint64_t count_mod_p(std::uint32_t p, int k, const std::function<std::uint32_t(const std::vector<std::uint32_t>&)>& f);

/// The diagonal instance {t0 = t1} over A^1 x Delta^1 with center
/// c(X) = c0 + c1 X: whether some rational point has a fiber of dimension 1.
bool diagonal_center_is_bad(std::uint32_t p, std::uint32_t c0, std::uint32_t c1, bool swapped);

/// Pre-reduction term count of the telescoping sums at degree s.
std::uint64_t telescoping_term_count(int s);

}  // namespace oracle
