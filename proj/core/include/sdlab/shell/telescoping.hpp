#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdlab/shell/formal_sum.hpp"

namespace sdlab::shell {

using simplex::CenterFamily;

struct SignConvention {
  int epsilon = 1;  // sign on the H o d side
  int lambda = 1;   // global unit on [id] - sum (-1)^sigma [sd^sigma]

  std::string to_string() const;
  friend auto operator<=>(const SignConvention&, const SignConvention&) = default;
};

/// The four conventions in the order (+,+), (+,-), (-,+), (-,-).
std::vector<SignConvention> all_conventions();

/// The two sides of the boundary of the homotopy, before any sign choice.
struct HomotopySides {
  FormalMapSum d_of_h;  // sum (-1)^sigma (-1)^k (-1)^i (pr_1 o sd^sigma_{s,k}) o d_i
  FormalMapSum h_of_d;  // sum (-1)^j (-1)^sigma (-1)^k d_j o (pr_1 o sd^sigma_{s-1,k})
  std::size_t d_of_h_terms = 0;  // counted before reduction
  std::size_t h_of_d_terms = 0;
};

HomotopySides homotopy_sides(int s, const CenterFamily& family);

/// [id] - sum_{sigma} (-1)^sigma [sd_s^sigma].
FormalMapSum canonical_minus_subdivision(int s, const CenterFamily& family);

struct TelescopingReport {
  int s = 0;
  int n = 0;
  SignConvention convention;
  std::size_t pre_reduction_terms = 0;
  FormalMapSum boundary;  // d_of_h + epsilon * h_of_d, reduced
  FormalMapSum residual;  // boundary - lambda * (canonical minus subdivision)
  bool telescopes() const { return residual.empty(); }
};

/// Requires s <= n <= family.n_max(); n only records the ambient simplex.
TelescopingReport homotopy_boundary(int s, int n, const CenterFamily& family, SignConvention convention);

struct ConventionSearch {
  /// working[s] lists the conventions that telescope at s.
  std::vector<std::vector<SignConvention>> working;
  /// Conventions that telescope at every s.
  std::vector<SignConvention> common;
  bool unique() const { return common.size() == 1; }
};

ConventionSearch search_conventions(int max_s, const CenterFamily& family);

/// Reduces symbolically, specializes the reduced sums to the target family,
/// and compares with reducing directly over the target family.
struct SpecializationCheck {
  int s = 0;
  bool symbolic_telescopes = false;
  bool specialized_telescopes = false;  // specialize(residual) is empty
  bool direct_telescopes = false;       // residual computed from the target centers
  bool boundaries_agree = false;        // specialize(reduce(x)) == reduce(specialize(x))
  bool pass() const {
    return symbolic_telescopes && specialized_telescopes && direct_telescopes && boundaries_agree;
  }
};

SpecializationCheck specialization_check(int s, SignConvention convention, const CenterFamily& symbolic,
                                         const CenterFamily& target);

}  // namespace sdlab::shell
