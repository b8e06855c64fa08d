#pragma once

#include "curralg/rootsys.hpp"

#include <vector>

namespace curralg {

// N-tuple of dominant weights with a fixed total.
struct WeightTuple {
  std::vector<DominantWeight> entries;

  int n() const { return static_cast<int>(entries.size()); }
  DominantWeight sum() const;
  // Entries sorted by lexicographic order on coefficient vectors.
  WeightTuple canonical() const;
  bool operator==(const WeightTuple&) const = default;
};

// min over k-subsets of the summed coroot pairings with beta; computed as
// the sum of the k smallest entry pairings.
Int min_subset_pairing(const WeightTuple& t, const RootSystem& rs, int root_index, int k);

enum class TupleOrder { LE, GE, EQ, INCOMPARABLE };

// Componentwise comparison of the full (beta, k) tables. Throws
// std::domain_error when the tuples have different length or total weight.
TupleOrder compare_tuples(const WeightTuple& a, const WeightTuple& b, const RootSystem& rs);

// Number of tuples in P+(lambda, N) (up to nothing: raw compositions count,
// permutations included).
Int tuple_space_size(const DominantWeight& total, int n);

// All tuples with the given total, canonicalized and deduplicated.
// Throws resource_error when the raw composition count exceeds cap.
std::vector<WeightTuple> enumerate_tuples(const DominantWeight& total, int n,
                                          long long cap);

// Maximal elements of the partial order on canonical tuples.
std::vector<WeightTuple> maximal_tuples(const DominantWeight& total, int n,
                                        const RootSystem& rs, long long cap);

// Number of covering pairs of the order restricted to canonical tuples
// with pairwise distinct comparison tables.
long long hasse_relation_count(const DominantWeight& total, int n, const RootSystem& rs,
                               long long cap);

}  // namespace curralg
