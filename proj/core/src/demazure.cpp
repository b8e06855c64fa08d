#include "curralg/demazure.hpp"

#include <stdexcept>

namespace curralg {

DemazureParams demazure_params(int level, const Int& pairing_value, int d_beta) {
  if (level < 1) throw std::domain_error("level must be >= 1");
  if (pairing_value < 0) throw std::domain_error("pairing value must be >= 0");
  Int D = Int(d_beta) * level;
  DemazureParams out;
  out.d_beta = d_beta;
  out.level = level;
  if (pairing_value == 0) {
    out.p = 0;
    out.m = D;
  } else {
    out.p = (pairing_value - 1) / D + 1;
    out.m = pairing_value - (out.p - 1) * D;
  }
  return out;
}

DemazureParams demazure_params(int level, const RootSystem& rs, const DominantWeight& w,
                               int root_index) {
  Int v = coroot_pairing_at(rs, w, root_index);
  return demazure_params(level, v, rs.d_of_root(rs.positive_roots[root_index]));
}

RelationSet demazure_relations(int level, const RootSystem& rs, const DominantWeight& w) {
  if (level < 1) throw std::domain_error("level must be >= 1");
  RelationSet out;
  out.level = level;
  out.weight = w;
  for (int b = 0; b < rs.num_positive(); ++b) {
    DemazureParams dp = demazure_params(level, rs, w, b);
    Int pairing = coroot_pairing_at(rs, w, b);
    out.params.push_back(dp);
    out.lowering.push_back({b, Int(0), pairing + 1});
    out.lowering.push_back({b, dp.p, Int(1)});
    if (dp.m < Int(dp.d_beta) * level)
      out.lowering.push_back({b, dp.p - 1, dp.m + 1});
  }
  return out;
}

TruncationReport truncation_bound(int level, int n_trunc, const DominantWeight& lambda1,
                                  const DominantWeight& lambda0, const RootSystem& rs) {
  if (level < 1) throw std::domain_error("level must be >= 1");
  if (n_trunc < 1) throw std::domain_error("truncation order must be >= 1");
  for (int i = 0; i < rs.rank; ++i) {
    if (lambda1.coeffs[i] < 0 || lambda0.coeffs[i] < 0)
      throw std::domain_error("weights must be dominant");
    if (lambda1.coeffs[i] % rs.d_simple[i] != 0)
      throw std::domain_error(
          "lambda1 is not in the coweight lattice: coefficient " + std::to_string(i + 1) +
          " is not divisible by d_" + std::to_string(i + 1));
  }
  Int level0 = coroot_pairing_at(rs, lambda0, rs.theta_index);
  if (level0 > level)
    throw std::domain_error("lambda0(theta^v) exceeds the level");

  DominantWeight lambda = scaled(lambda1, static_cast<long long>(level) * n_trunc) + lambda0;
  Int bound = Int(n_trunc) * (coroot_pairing_at(rs, lambda1, rs.theta_index) + 1);

  TruncationReport rep;
  rep.all_within_bound = true;
  for (int b = 0; b < rs.num_positive(); ++b) {
    DemazureParams dp = demazure_params(level, rs, lambda, b);
    TruncationRow row{b, dp.p, bound, bound - dp.p};
    if (row.margin < 0) rep.all_within_bound = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace curralg
