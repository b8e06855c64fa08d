#include "curralg/sl2ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curralg {

FusionGraded fusion_graded(const ExplicitModule& m, long long dim_cap) {
  auto space = std::make_shared<ModuleSpace>(m);
  GradedClosure cl(space, GradedClosure::Options{dim_cap, false});
  return {cl.char_table().by_stage(), cl.char_table(), cl.defect()};
}

ExplicitModule local_weyl(int m, const std::vector<Rat>& params, long long dim_cap) {
  if (m < 0) throw std::domain_error("local Weyl module needs m >= 0");
  if (static_cast<int>(params.size()) != m)
    throw std::domain_error("local Weyl module needs m parameters");
  if (m == 0) {
    ExplicitModule out(1, 1, 1);
    out.set_cyclic(0);
    out.set_grades({0});
    out.set_labels({"v"});
    return out;
  }
  std::vector<int> ks(m, 1);
  auto cl = fusion_closure(ks, params, dim_cap);
  return cl->materialize();
}

ExplicitModule local_weyl(int m, long long dim_cap) {
  return local_weyl(m, default_params(m), dim_cap);
}

ExplicitModule truncate_module(const ExplicitModule& m, int n_trunc) {
  if (!m.graded()) throw std::domain_error("truncation needs a graded module");
  if (!m.cyclic_index()) throw std::domain_error("truncation needs a cyclic module");
  if (n_trunc < 1) throw std::domain_error("truncation order must be >= 1");

  // Submodule spanned by the columns of every x (x) t^r with r >= n; the
  // span is already a submodule because g (x) t^n C[t] is an ideal.
  std::map<std::pair<int, long long>, Echelon> cells;  // (grade, weight)
  auto slice_key = [&](int b) { return std::make_pair(m.grade_of(b), m.weight_of(b)); };
  for (const GenSym& s : m.symbols()) {
    if (s.t_pow < n_trunc) continue;
    const SparseMat& mat = m.act(s);
    for (int j = 0; j < m.dim(); ++j) {
      const SparseVec& col = mat.col(j);
      if (col.empty()) continue;
      cells[slice_key(col.front().first)].insert(to_primitive(col), 0);
    }
  }

  // Complement basis: coordinates that are not pivots in their slice.
  std::vector<int> new_id(m.dim(), -1);
  std::vector<int> keep;
  for (int b = 0; b < m.dim(); ++b) {
    auto it = cells.find(slice_key(b));
    bool pivot = false;
    if (it != cells.end()) {
      for (int r = 0; r < it->second.rank() && !pivot; ++r)
        if (it->second.row(r).front().first == b) pivot = true;
    }
    if (!pivot) {
      new_id[b] = static_cast<int>(keep.size());
      keep.push_back(b);
    }
  }

  int qdim = static_cast<int>(keep.size());
  ExplicitModule out(qdim, std::min(m.t_trunc(), n_trunc), m.u_trunc());
  std::vector<long long> w(qdim);
  std::vector<int> g(qdim);
  std::vector<std::string> labels(qdim);
  for (int i = 0; i < qdim; ++i) {
    w[i] = m.weight_of(keep[i]);
    g[i] = m.grade_of(keep[i]);
    labels[i] = m.basis_labels()[keep[i]];
  }
  out.set_weights(std::move(w));
  out.set_grades(std::move(g));
  out.set_labels(std::move(labels));

  auto project = [&](SparseVec v) {
    // reduce modulo the submodule slice, then rename coordinates
    if (v.empty()) return v;
    auto it = cells.find(slice_key(v.front().first));
    if (it != cells.end()) v = it->second.reduce(v);
    SparseVec out_v;
    out_v.reserve(v.size());
    for (const auto& [b, q] : v) {
      if (new_id[b] < 0) throw std::logic_error("projection left a pivot coordinate");
      out_v.emplace_back(new_id[b], q);
    }
    std::sort(out_v.begin(), out_v.end());
    return out_v;
  };

  for (const GenSym& s : m.symbols()) {
    if (s.t_pow >= n_trunc) continue;
    SparseMat mat(qdim, qdim);
    bool any = false;
    for (int i = 0; i < qdim; ++i) {
      SparseVec col = project(m.act(s).col(keep[i]));
      if (!col.empty()) any = true;
      mat.set_col(i, std::move(col));
    }
    if (any) out.set_action(s, std::move(mat));
  }

  SparseVec cyc = project(m.cyclic_vec());
  if (cyc.size() != 1 || cyc.front().second != 1 || m.grade_of(*m.cyclic_index()) != 0)
    throw std::logic_error("cyclic vector did not survive truncation cleanly");
  out.set_cyclic(cyc.front().first);
  return out;
}

SparseMat lowering_operator(const ExplicitModule& m, int r, int s) {
  if (r < 0 || s < 0) throw std::domain_error("lowering operator needs r, s >= 0");
  SparseMat total(m.dim(), m.dim());
  // enumerate (b_0, ..., b_s) with sum b_p = r and sum p b_p = s; the
  // free slot b_0 absorbs whatever count remains
  std::vector<int> b(static_cast<size_t>(s) + 1, 0);
  auto emit = [&]() {
    SparseMat prod = SparseMat::identity(m.dim());
    for (int p = 0; p <= s; ++p) {
      if (b[p] == 0) continue;
      SparseMat fp(m.dim(), m.dim());
      if (p < m.t_trunc()) fp = m.act({GenSym::F, p, 0});
      prod = prod.mul(fp.pow(static_cast<unsigned>(b[p])));
    }
    total = total.plus(prod);
  };
  auto rec = [&](auto&& self, int p, int rem_r, int rem_s) -> void {
    if (p > s) {
      if (rem_s == 0) {
        b[0] = rem_r;
        emit();
        b[0] = 0;
      }
      return;
    }
    for (int v = 0; v <= std::min(rem_r, rem_s / p); ++v) {
      b[p] = v;
      self(self, p + 1, rem_r - v, rem_s - p * v);
      b[p] = 0;
    }
  };
  rec(rec, 1, r, s);
  return total;
}

namespace {
// exact factorial scalar for divided powers
Rat inv_factorial(int n) { return Rat(1) / Rat(factorial(static_cast<unsigned>(n))); }

std::string mono_str(int r, int s, int l) {
  return "(r=" + std::to_string(r) + ", s=" + std::to_string(s) + ", l=" + std::to_string(l) + ")";
}
}  // namespace

RelationCheck verify_fusion_relations(int k, int n_trunc, int j, long long dim_cap) {
  int m = k * n_trunc + j;
  ExplicitModule wmod = truncate_module(local_weyl(m, dim_cap), n_trunc);
  SparseVec v = wmod.cyclic_vec();
  RelationCheck out;

  int lmax = std::max(n_trunc, m) + 1;
  for (int l = 1; l <= lmax; ++l) {
    long long q = std::max(0LL, static_cast<long long>(n_trunc - l) * k);
    long long p = std::max(0LL, static_cast<long long>(j - l));
    for (int r = 0; r <= m; ++r) {
      for (int s = 0; r + s <= m; ++s) {
        if (r + s < 1 + r * static_cast<long long>(l) + q + p) continue;
        ++out.checked;
        SparseMat op = lowering_operator(wmod, r, s);
        if (!op.apply(v).empty()) {
          out.ok = false;
          out.failures.push_back("annihilation fails at " + mono_str(r, s, l));
        }
      }
    }
  }

  // divided-power identity on the highest-weight vector
  for (int r = 0; r <= m; ++r) {
    for (int s = 0; r + s <= m; ++s) {
      ++out.checked;
      SparseMat e1(wmod.dim(), wmod.dim());
      if (wmod.t_trunc() > 1) e1 = wmod.act({GenSym::E, 1, 0});
      SparseVec lhs = e1.pow(static_cast<unsigned>(s))
                          .mul(wmod.act({GenSym::F, 0, 0}).pow(static_cast<unsigned>(s + r)))
                          .apply(v);
      Rat scale = inv_factorial(s) * inv_factorial(s + r);
      for (auto& [i, qv] : lhs) qv *= scale;
      SparseVec rhs = lowering_operator(wmod, r, s).apply(v);
      if (s % 2 == 1)
        for (auto& [i, qv] : rhs) qv = -qv;
      if (lhs != rhs) {
        out.ok = false;
        out.failures.push_back("divided-power identity fails at " + mono_str(r, s, 0));
      }
    }
  }
  return out;
}

RelationCheck check_relations_on_module(const ExplicitModule& m, const RelationSet& rels) {
  RelationCheck out;
  SparseVec v = m.cyclic_vec();
  long long lam = m.weight_of(*m.cyclic_index());

  for (int a = 0; a < m.t_trunc(); ++a) {
    ++out.checked;
    if (!m.apply({GenSym::E, a, 0}, v).empty()) {
      out.ok = false;
      out.failures.push_back("raising current t^" + std::to_string(a) + " does not annihilate");
    }
    ++out.checked;
    SparseVec hv = m.apply({GenSym::H, a, 0}, v);
    SparseVec expect;
    if (a == 0 && lam != 0) expect = {{*m.cyclic_index(), Rat(lam)}};
    if (hv != expect) {
      out.ok = false;
      out.failures.push_back("diagonal current t^" + std::to_string(a) + " acts wrongly");
    }
  }

  for (const PowerRelation& pr : rels.lowering) {
    ++out.checked;
    if (pr.t_power >= m.t_trunc()) continue;  // acts as zero by construction
    int a = static_cast<int>(pr.t_power);
    unsigned e = pr.exponent.convert_to<unsigned>();
    if (!m.act({GenSym::F, a, 0}).pow(e).apply(v).empty()) {
      out.ok = false;
      out.failures.push_back("power relation (t^" + std::to_string(a) + ")^" +
                             std::to_string(e) + " fails");
    }
  }
  return out;
}

IndependenceReport parameter_independence(int k, int n, int j,
                                          const std::vector<std::vector<Rat>>& param_sets,
                                          long long dim_cap) {
  if (param_sets.size() < 2)
    throw std::domain_error("parameter independence needs at least two parameter sets");
  std::vector<int> ks;
  for (int i = 0; i < n - j; ++i) ks.push_back(k);
  for (int i = 0; i < j; ++i) ks.push_back(k + 1);
  IndependenceReport rep;
  for (const auto& z : param_sets) {
    if (static_cast<int>(z.size()) != n)
      throw std::domain_error("each parameter set needs one entry per factor");
    auto cl = fusion_closure(ks, z, dim_cap);
    rep.tables.push_back(cl->char_table());
  }
  for (size_t i = 1; i < rep.tables.size(); ++i) {
    if (!(rep.tables[i] == rep.tables[0])) {
      rep.ok = false;
      rep.detail = "character tables differ between parameter sets 0 and " + std::to_string(i);
    }
  }
  return rep;
}

}  // namespace curralg
