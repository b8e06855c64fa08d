#pragma once

#include "curralg/numeric.hpp"

#include <set>
#include <vector>

namespace curralg {

// Exponent vector (i_0, ..., i_{N-1}) of a lowering monomial
// f_0^{i_0} ... f_{N-1}^{i_{N-1}}.
using PBWMonomial = std::vector<int>;

// Carry residues b_l attached to a monomial:
//   b_0 = i_0 - j (mod N),          0 <= b_0 < N,
//   b_l = i_l + (b_{l-1} mod N-l) (mod N-l),  0 <= b_l < N-l,
// for l = 1, ..., limit. The standard range is l <= N-4 (empty for N <= 3);
// `limit_offset` widens the range and exists only as a negative control for
// the verification suite.
struct CarryProfile {
  std::vector<int> b;
};

CarryProfile carry_profile(const PBWMonomial& m, int j, int limit_offset = 0);

// Membership in the cutoff set S(k^{N-j}, (k+1)^j):
//   sum_p N!/(N-p) i_p <= N! k - sum_l N!/(N-l)! (N-l-2)! b_l + j (N-1)!.
bool in_cutoff_set(const PBWMonomial& m, int k, int j, int limit_offset = 0);

// All monomials of the cutoff set in lexicographic order. The cardinality
// is expected to be (k+1)^{N-j} (k+2)^j; callers verify.
std::vector<PBWMonomial> enumerate_cutoff_set(int k, int j, int n, int limit_offset = 0);

// Recursive basis for a fusion product with sorted factor weights:
//   B(k) = { f_0^a : a <= k },
//   B(k_1..k_N) = shift(B(k_1..k_{N-1})) u f_0 B(sortedDecrementLast),
// where shift prepends a zero exponent and zero factor weights are dropped
// (their module is trivial). Throws std::domain_error on unsorted input.
std::set<PBWMonomial> recursive_basis(const std::vector<int>& ks);

// Expected dimension (k+1)^{N-j} (k+2)^j.
Int cutoff_expected_size(int k, int j, int n);

// Set equality of the recursive and the cutoff constructions for the
// tuple (k^{N-j}, (k+1)^j); lists the symmetric difference on failure.
struct EquivalenceReport {
  bool equal;
  std::vector<PBWMonomial> only_recursive;
  std::vector<PBWMonomial> only_cutoff;
};

EquivalenceReport verify_equivalence(int k, int j, int n, int limit_offset = 0);

}  // namespace curralg
