#pragma once

#include <string>
#include <vector>

#include "sdlab/shell/int_matrix.hpp"

namespace sdlab::shell {

/// A bounded chain complex of free abelian groups in degrees 0..top.
/// differentials[s] maps degree s to degree s - 1 (differentials[0] is empty).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_integers() const { return free_rank == 1 && torsion.empty(); }
  std::string to_string() const;
};

/// H_s for every degree, from Smith normal forms of the differentials.
std::vector<HomologyGroup> homology(const ChainComplex& complex);

bool verify_d_squared(const ChainComplex& complex);

enum class SignRule {
  alternating,  // (-1)^k on deleting the k-th smallest element
  unsigned_sum  // negative control: all signs +1
};

/// Generators are the subsets of [n] of size s + 1 in degree s, listed in
/// lexicographic order; each z(X, s) is modelled as Z.
struct ShellComplex {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> generators;
  ChainComplex complex;
};

ShellComplex build_shell(int n, SignRule rule = SignRule::alternating);

/// The canonical map from the shell to the constant-coefficient complex,
/// whose differential in degree s is sum_{i=0}^s (-1)^i.
struct CanonicalMapCheck {
  std::vector<IntMatrix> components;  // components[s]: 1 x C(n+1, s+1)
  ChainComplex target;                // degrees 0..n+1
  bool commutes = false;
};

/// The constant-coefficient complex truncated at the given top degree.
ChainComplex constant_target_complex(int top_degree);

CanonicalMapCheck canonical_map(int n);

}  // namespace sdlab::shell
