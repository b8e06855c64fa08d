#pragma once

#include "curralg/sl2ops.hpp"

#include <string>
#include <vector>

namespace curralg {

// Dimensions keyed by (residual t-degree s, filtration/u index j).
struct BiGradedDims {
  std::map<std::pair<int, int>, long long> cells;
  // weight-resolved refinement, keyed by (s, j, weight)
  std::map<std::tuple<int, int, long long>, long long> weighted;

  long long total() const;
  bool operator==(const BiGradedDims& o) const { return cells == o.cells; }
};

// Decreasing filtration of a graded module by repeated application of the
// generators x (x) t^r with r >= n; layer j quotients are collected by
// residual degree s with the consistency requirement that a layer-j vector
// of t-degree d satisfies d = j n + s, 0 <= s < n.
struct FiltrationResult {
  BiGradedDims dims;
  std::string structural_failure;  // empty when consistent
};

FiltrationResult t_power_filtration(const ExplicitModule& m, int n);

// Fusion of u-graded modules with respect to the t-variable: x (x) t^a u^b
// acts on factor i through z_i^a (x (x) u^b). Cells are (t-degree of the
// associated graded, u-degree).
struct BiGradedFusion {
  BiGradedDims dims;
  int max_t_stage;
  long long total;
};

BiGradedFusion bigraded_fusion(const std::vector<ExplicitModule>& factors,
                               const std::vector<Rat>& params, long long dim_cap);

// Evaluation factor weights for the level-l module with highest weight
// coefficient total: (p-1) copies of the level plus the remainder part.
std::vector<int> demazure_factor_weights(int level, long long total);

// Graded realization of the level-l module with the given highest-weight
// coefficient, built as a fusion of evaluation factors and certified by
// checking the presentation relations on the cyclic vector.
ExplicitModule demazure_fusion_module(int level, long long total,
                                      const std::vector<Rat>& params, long long dim_cap,
                                      RelationCheck* certificate = nullptr);

// Compares the bigraded table of the t^N-filtration of the level-l module
// with weight l*N*c + eps0 against the bigraded fusion of u-realized
// level-l factors. Desk-scale consistency check, not a proof.
struct ToroidalReport {
  bool ok = false;
  BiGradedDims left, right;
  RelationCheck left_certificate;
  std::vector<RelationCheck> factor_certificates;
  std::string detail;
};

ToroidalReport verify_bigraded_match(int level, int c, int eps0, int n_trunc,
                                     const std::vector<Rat>& params, long long dim_cap);

}  // namespace curralg
