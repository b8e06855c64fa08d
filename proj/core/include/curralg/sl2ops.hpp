#pragma once

#include "curralg/closure.hpp"
#include "curralg/demazure.hpp"

#include <string>
#include <vector>

namespace curralg {

// Graded dimensions of the cyclic span filtration, with the generation
// defect (dim M - dim of the cyclic span; zero iff the vector generates).
struct FusionGraded {
  GradedDims dims;
  CharTable table;
  long long defect;
};

FusionGraded fusion_graded(const ExplicitModule& m, long long dim_cap);

// Associated graded of the m-fold tensor of two-dimensional evaluation
// modules at the given parameters; the universal highest-weight object of
// its dimension 2^m. Throws std::domain_error on repeated parameters.
ExplicitModule local_weyl(int m, const std::vector<Rat>& params, long long dim_cap);
ExplicitModule local_weyl(int m, long long dim_cap);  // parameters 0, 1, ..., m-1

// Quotient of a graded cyclic module by the submodule generated by all
// x (x) t^r with r >= n_trunc.
ExplicitModule truncate_module(const ExplicitModule& m, int n_trunc);

// Sum over all exponent patterns (b_0, ..., b_s) with sum b_p = r and
// sum p b_p = s of the products (f (x) 1)^{b_0} ... (f (x) t^s)^{b_s}.
SparseMat lowering_operator(const ExplicitModule& m, int r, int s);

// Check report with a list of failing witnesses.
struct RelationCheck {
  bool ok = true;
  long long checked = 0;
  std::vector<std::string> failures;
};

// Annihilation relations of the fusion presentation on the quotient
// W(m, N): for every level l >= 1 and r + s >= 1 + r l + q + p with
// q = max(0, (N - l) k), p = max(0, j - l), the operator built by
// lowering_operator(r, s) kills the cyclic vector. Also checks the
// divided-power identity
//   (e (x) t)^s / s! (f (x) 1)^{s+r} / (s+r)! v = (-1)^s lowering(r,s) v
// on the highest-weight vector for all r + s <= m.
RelationCheck verify_fusion_relations(int k, int n_trunc, int j, long long dim_cap);

// Instantiate a symbolic relation set on an sl2 module and verify every
// relation on the cyclic vector.
RelationCheck check_relations_on_module(const ExplicitModule& m, const RelationSet& rels);

// Graded characters of V(k)^{(N-j)} * V(k+1)^{j} for several parameter
// sets; reports disagreement witnesses.
struct IndependenceReport {
  bool ok = true;
  std::vector<CharTable> tables;
  std::string detail;
};

IndependenceReport parameter_independence(int k, int n, int j,
                                          const std::vector<std::vector<Rat>>& param_sets,
                                          long long dim_cap);

}  // namespace curralg
