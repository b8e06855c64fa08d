#pragma once

#include "curralg/rootsys.hpp"

#include <vector>

namespace curralg {

// Unique decomposition lambda(beta^v) = (p - 1) d_beta level + m with
// 0 < m <= d_beta level. The zero pairing decomposes as (p, m) = (0, d l).
struct DemazureParams {
  Int p;
  Int m;
  int d_beta;
  int level;
};

DemazureParams demazure_params(int level, const Int& pairing_value, int d_beta);
DemazureParams demazure_params(int level, const RootSystem& rs, const DominantWeight& w,
                               int root_index);

// Symbolic relation set for the level-l module with highest weight lambda:
//   raising currents annihilate the generator,
//   diagonal currents act by delta_{s,0} lambda(h),
//   (x_{-beta} (x) t^a)^e annihilates the generator for the listed (a, e).
struct PowerRelation {
  int root_index;
  Int t_power;
  Int exponent;
};

struct RelationSet {
  int level;
  DominantWeight weight;
  std::vector<DemazureParams> params;        // per positive root
  std::vector<PowerRelation> lowering;       // all (beta, a, e) relations
};

RelationSet demazure_relations(int level, const RootSystem& rs, const DominantWeight& w);

// For lambda = level*N*lambda1 + lambda0 with lambda1 in the coweight
// lattice and lambda0(theta^v) <= level, every p_beta is bounded by
// N (lambda1(theta^v) + 1). Reports the margin per positive root.
struct TruncationRow {
  int root_index;
  Int p;
  Int bound;
  Int margin;  // bound - p, non-negative when the statement holds
};

struct TruncationReport {
  std::vector<TruncationRow> rows;
  bool all_within_bound;
};

// Throws std::domain_error naming the violated precondition when lambda1 is
// not in the coweight lattice or lambda0(theta^v) > level.
TruncationReport truncation_bound(int level, int n_trunc, const DominantWeight& lambda1,
                                  const DominantWeight& lambda0, const RootSystem& rs);

}  // namespace curralg
