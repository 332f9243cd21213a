#pragma once

#include <string>
#include <vector>

#include "hilden/braid.hpp"
#include "hilden/perm.hpp"

namespace hilden {

// Parameters of the balanced superelliptic cover: a k-fold cyclic branched
// cover of genus g = n(k-1) over the sphere with 2n+2 branch points.
struct CoverConfig {
  int n;  // number of wickets is n+1
  int k;  // degree of the cover, k >= 2

  CoverConfig(int n_, int k_);

  int strands() const { return 2 * n + 2; }
  int genus() const { return n * (k - 1); }
};

// Position of a branch-point permutation relative to the odd/even classes
// {p1, p3, ...} and {p2, p4, ...}.
enum class ParityClass { Preserving, Reversing, Neither };

std::string parity_name(ParityClass c);

ParityClass parity_class(const Perm& p, const CoverConfig& cfg);

// Whether the mapping class of b lifts through the cover. For k = 2 every
// mapping class lifts; for k >= 3 exactly the parity-preserving or
// parity-reversing ones do, independent of the value of k.
bool is_liftable(const BraidWord& b, const CoverConfig& cfg);

// All parity-preserving or parity-reversing permutations of the branch
// points: a subgroup of order 2*((n+1)!)^2. Guarded to n <= 4.
std::vector<Perm> enumerate_parity_subgroup(const CoverConfig& cfg);

}  // namespace hilden
