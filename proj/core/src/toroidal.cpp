#include "curralg/toroidal.hpp"

#include <algorithm>
#include <stdexcept>

namespace curralg {

long long BiGradedDims::total() const {
  long long s = 0;
  for (const auto& [k, v] : cells) s += v;
  return s;
}

FiltrationResult t_power_filtration(const ExplicitModule& m, int n) {
  if (!m.graded()) throw std::domain_error("filtration needs a graded module");
  if (n < 1) throw std::domain_error("filtration order must be >= 1");

  // layer[j] = echelon per (grade, weight) slice of T_j
  using SliceMap = std::map<std::pair<int, long long>, Echelon>;
  auto rank_at = [](const SliceMap& sm, int d, long long w) {
    auto it = sm.find({d, w});
    return it == sm.end() ? 0 : it->second.rank();
  };

  std::vector<SliceMap> layers;
  {
    SliceMap t0;
    for (int b = 0; b < m.dim(); ++b)
      t0[{m.grade_of(b), m.weight_of(b)}].insert(IntRow{{b, Int(1)}}, 0);
    layers.push_back(std::move(t0));
  }
  std::vector<GenSym> high;
  for (const GenSym& s : m.symbols())
    if (s.t_pow >= n) high.push_back(s);

  while (true) {
    const SliceMap& prev = layers.back();
    SliceMap next;
    for (const auto& [key, ech] : prev) {
      for (int rid = 0; rid < ech.rank(); ++rid) {
        SparseVec v = to_sparse(ech.row(rid));
        for (const GenSym& s : high) {
          SparseVec img = m.apply(s, v);
          if (img.empty()) continue;
          int d = key.first + s.t_pow + s.u_pow;
          int shift = s.x == GenSym::E ? 2 : (s.x == GenSym::F ? -2 : 0);
          next[{d, key.second + shift}].insert(to_primitive(img), 0);
        }
      }
    }
    bool empty = true;
    for (const auto& [k, e] : next) empty = empty && e.rank() == 0;
    if (empty) break;
    layers.push_back(std::move(next));
  }

  FiltrationResult out;
  std::set<std::pair<int, long long>> all_slices;
  for (const auto& layer : layers)
    for (const auto& [k, e] : layer) all_slices.insert(k);
  for (size_t j = 0; j < layers.size(); ++j) {
    for (const auto& key : all_slices) {
      long long here = rank_at(layers[j], key.first, key.second);
      long long below = j + 1 < layers.size() ? rank_at(layers[j + 1], key.first, key.second) : 0;
      long long dim = here - below;
      if (dim == 0) continue;
      if (dim < 0) {
        out.structural_failure = "layer ranks are not nested";
        return out;
      }
      int d = key.first;
      int jj = static_cast<int>(j);
      if (d < jj * n) {
        out.structural_failure =
            "layer " + std::to_string(j) + " carries t-degree " + std::to_string(d) +
            " below " + std::to_string(jj * n);
        return out;
      }
      // residual t-degree of the layer-j class of a degree-d vector
      int s = d - jj * n;
      out.dims.cells[{s, jj}] += dim;
      out.dims.weighted[{s, jj, key.second}] += dim;
    }
  }
  return out;
}

BiGradedFusion bigraded_fusion(const std::vector<ExplicitModule>& factors,
                               const std::vector<Rat>& params, long long dim_cap) {
  for (const auto& f : factors) {
    if (!f.graded()) throw std::domain_error("bigraded fusion needs u-graded factors");
    if (f.t_trunc() != 1)
      throw std::domain_error("bigraded fusion factors must carry only u-generators");
  }
  auto space = std::make_shared<FactorSpace>(factors, params);
  GradedClosure cl(space, GradedClosure::Options{dim_cap, false});
  BiGradedFusion out;
  out.max_t_stage = cl.max_stage();
  out.total = cl.rank();
  for (const auto& [k, v] : cl.char_table().cells) {
    out.dims.cells[{std::get<0>(k), std::get<2>(k)}] += v;
    out.dims.weighted[{std::get<0>(k), std::get<2>(k), std::get<1>(k)}] += v;
  }
  return out;
}

std::vector<int> demazure_factor_weights(int level, long long total) {
  if (level < 1) throw std::domain_error("level must be >= 1");
  if (total < 0) throw std::domain_error("weight must be dominant");
  if (total == 0) return {};
  DemazureParams dp = demazure_params(level, Int(total), 1);
  long long p = dp.p.convert_to<long long>();
  long long rem = dp.m.convert_to<long long>();
  std::vector<int> out(static_cast<size_t>(p - 1), level);
  out.push_back(static_cast<int>(rem));
  std::sort(out.begin(), out.end());
  return out;
}

ExplicitModule demazure_fusion_module(int level, long long total,
                                      const std::vector<Rat>& params, long long dim_cap,
                                      RelationCheck* certificate) {
  std::vector<int> ks = demazure_factor_weights(level, total);
  ExplicitModule out;
  if (ks.empty()) {
    out = ExplicitModule(1, 1, 1);
    out.set_cyclic(0);
    out.set_grades({0});
  } else {
    if (params.size() != ks.size())
      throw std::domain_error("demazure fusion: need " + std::to_string(ks.size()) +
                              " parameters");
    out = fusion_closure(ks, params, dim_cap)->materialize();
  }
  if (certificate) {
    RootSystem a1 = build_root_system(LieType::A, 1);
    RelationSet rels = demazure_relations(level, a1, DominantWeight{{total}});
    *certificate = check_relations_on_module(out, rels);
  }
  return out;
}

ToroidalReport verify_bigraded_match(int level, int c, int eps0, int n_trunc,
                                     const std::vector<Rat>& params, long long dim_cap) {
  if (eps0 < 0 || eps0 > level)
    throw std::domain_error("the extra weight coefficient must satisfy 0 <= eps0 <= level");
  if (c < 1) throw std::domain_error("need c >= 1");
  if (n_trunc < 1) throw std::domain_error("need N >= 1");

  ToroidalReport rep;
  long long total = static_cast<long long>(level) * n_trunc * c + eps0;

  // left side: graded fusion realization, then the t^N filtration
  std::vector<int> lks = demazure_factor_weights(level, total);
  std::vector<Rat> lparams = default_params(static_cast<int>(lks.size()));
  ExplicitModule left = demazure_fusion_module(level, total, lparams, dim_cap,
                                               &rep.left_certificate);
  if (!rep.left_certificate.ok) {
    rep.detail = "left realization fails its presentation relations";
    return rep;
  }
  FiltrationResult filt = t_power_filtration(left, n_trunc);
  if (!filt.structural_failure.empty()) {
    rep.detail = "filtration: " + filt.structural_failure;
    return rep;
  }
  rep.left = filt.dims;

  // right side: u-realized factors, fused in t
  auto u_factor = [&](long long tot) {
    std::vector<int> ks = demazure_factor_weights(level, tot);
    RelationCheck cert;
    ExplicitModule f = demazure_fusion_module(level, tot, default_params(static_cast<int>(ks.size())),
                                              dim_cap, &cert);
    rep.factor_certificates.push_back(cert);
    return swap_variables(f);
  };
  std::vector<ExplicitModule> factors;
  for (int i = 0; i < n_trunc - 1; ++i)
    factors.push_back(u_factor(static_cast<long long>(level) * c));
  factors.push_back(u_factor(static_cast<long long>(level) * c + eps0));
  for (const auto& cert : rep.factor_certificates) {
    if (!cert.ok) {
      rep.detail = "a u-factor fails its presentation relations";
      return rep;
    }
  }
  std::vector<Rat> tparams = params;
  if (tparams.empty()) tparams = default_params(n_trunc);
  if (static_cast<int>(tparams.size()) != n_trunc)
    throw std::domain_error("need one fusion parameter per tensor slot");
  BiGradedFusion right = bigraded_fusion(factors, tparams, dim_cap);
  rep.right = right.dims;

  if (!(rep.left == rep.right)) {
    rep.detail = "bigraded tables differ";
    return rep;
  }
  if (rep.left.weighted != rep.right.weighted) {
    rep.detail = "weight-resolved bigraded tables differ";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace curralg
