#include "curralg/closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace curralg {

long long CharTable::total() const {
  long long s = 0;
  for (const auto& [k, v] : cells) s += v;
  return s;
}

GradedDims CharTable::by_stage() const {
  GradedDims out;
  for (const auto& [k, v] : cells) {
    int s = std::get<0>(k);
    if (static_cast<int>(out.size()) <= s) out.resize(s + 1, 0);
    out[s] += v;
  }
  return out;
}

std::map<std::pair<int, long long>, long long> CharTable::by_stage_weight() const {
  std::map<std::pair<int, long long>, long long> out;
  for (const auto& [k, v] : cells) out[{std::get<0>(k), std::get<1>(k)}] += v;
  return out;
}

std::map<std::pair<int, int>, long long> CharTable::by_stage_u() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : cells) out[{std::get<0>(k), std::get<2>(k)}] += v;
  return out;
}

FactorSpace::FactorSpace(std::vector<ExplicitModule> factors, std::vector<Rat> params)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::domain_error("tensor space needs at least one factor");
  if (params.size() != factors_.size())
    throw std::domain_error("one evaluation parameter per factor required");
  for (size_t i = 0; i < params.size(); ++i)
    for (size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j])
        throw std::domain_error("evaluation parameters must be pairwise distinct");

  int n = static_cast<int>(factors_.size());
  zpow_.resize(n);
  for (int i = 0; i < n; ++i) {
    zpow_[i].resize(n);
    zpow_[i][0] = 1;
    for (int a = 1; a < n; ++a) zpow_[i][a] = zpow_[i][a - 1] * params[i];
  }
  stride_.resize(n);
  stride_[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * factors_[i + 1].dim();
  dim_ = stride_[0] * factors_[0].dim();

  u_letters_ = 1;
  for (const auto& f : factors_) u_letters_ = std::max(u_letters_, f.u_trunc());

  weight_.resize(dim_);
  u_.resize(dim_);
  long long cyc = 0;
  for (int i = 0; i < n; ++i) {
    if (!factors_[i].cyclic_index())
      throw std::domain_error("every tensor factor needs a cyclic vector");
    cyc += *factors_[i].cyclic_index() * stride_[i];
  }
  cyclic_ = static_cast<int32_t>(cyc);
  for (long long idx = 0; idx < dim_; ++idx) {
    long long rest = idx, w = 0;
    int uu = 0;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rest / stride_[i]);
      rest %= stride_[i];
      w += factors_[i].weight_of(d);
      if (factors_[i].graded()) uu += factors_[i].grade_of(d);
    }
    weight_[idx] = w;
    u_[idx] = uu;
  }
}

SparseVec FactorSpace::apply(const GenSym& s, const SparseVec& v) const {
  int n = static_cast<int>(factors_.size());
  if (s.t_pow < 0 || s.t_pow >= n)
    throw std::logic_error("t-power outside the generating range");
  GenSym local{s.x, 0, s.u_pow};
  std::map<int32_t, Rat> acc;
  std::vector<int> digit(n);
  for (const auto& [idx, val] : v) {
    long long rest = idx;
    for (int i = 0; i < n; ++i) {
      digit[i] = static_cast<int>(rest / stride_[i]);
      rest %= stride_[i];
    }
    for (int i = 0; i < n; ++i) {
      const Rat& z = zpow_[i][s.t_pow];
      if (z == 0) continue;
      if (s.u_pow >= factors_[i].u_trunc()) continue;
      for (const auto& [r, mv] : factors_[i].act(local).col(digit[i])) {
        long long target = idx + (static_cast<long long>(r) - digit[i]) * stride_[i];
        Rat& slot = acc[static_cast<int32_t>(target)];
        slot += val * z * mv;
      }
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, q] : acc)
    if (q != 0) out.emplace_back(i, std::move(q));
  return out;
}

ModuleSpace::ModuleSpace(ExplicitModule m) : mod_(std::move(m)) {}

int32_t ModuleSpace::cyclic() const {
  if (!mod_.cyclic_index()) throw std::domain_error("module has no cyclic vector");
  return *mod_.cyclic_index();
}

SparseVec ModuleSpace::apply(const GenSym& s, const SparseVec& v) const {
  if (s.t_pow >= mod_.t_trunc() || s.u_pow >= mod_.u_trunc()) return {};
  return mod_.apply(s, v);
}

struct GradedClosure::Slice {
  long long weight;
  int u;
  long long full_dim = 0;
  std::unordered_map<int32_t, int32_t> local_of;
  std::vector<int32_t> global_of;
  Echelon ech;
  std::vector<int> gid_of_row;
  std::map<int, long long> accepted_per_stage;

  int32_t local_id(int32_t global) {
    auto it = local_of.find(global);
    if (it != local_of.end()) return it->second;
    int32_t id = static_cast<int32_t>(global_of.size());
    local_of.emplace(global, id);
    global_of.push_back(global);
    return id;
  }
};

int GradedClosure::slice_of(long long weight, int u) const {
  auto it = slice_index_.find({weight, u});
  return it == slice_index_.end() ? -1 : it->second;
}

int GradedClosure::slice_of_create(long long weight, int u) {
  auto it = slice_index_.find({weight, u});
  if (it != slice_index_.end()) return it->second;
  int id = static_cast<int>(slices_.size());
  auto s = std::make_unique<Slice>();
  s->weight = weight;
  s->u = u;
  slices_.push_back(std::move(s));
  slice_index_.emplace(std::make_pair(weight, u), id);
  return id;
}

GradedClosure::GradedClosure(std::shared_ptr<const ActionSpace> space, Options opt)
    : space_(std::move(space)), opt_(opt) {
  const ActionSpace& sp = *space_;
  if (sp.dim() > opt_.dim_cap)
    throw resource_error("module dimension exceeds cap",
                         static_cast<unsigned long long>(sp.dim()));

  // slice dimensions of the ambient space
  std::map<std::pair<long long, int>, long long> ambient;
  for (long long i = 0; i < sp.dim(); ++i)
    ambient[{sp.weight_of(static_cast<int32_t>(i)), sp.u_of(static_cast<int32_t>(i))}]++;

  int tl = sp.t_letters(), ul = sp.u_letters();
  SparseVec seed{{sp.cyclic(), Rat(1)}};

  // Lowering generators suffice when the cyclic vector is killed by the
  // raising currents and diagonal for the Cartan currents.
  lowering_only_ = !opt_.force_all_symbols;
  if (lowering_only_) {
    for (int a = 0; a < tl && lowering_only_; ++a) {
      for (int b = 0; b < ul && lowering_only_; ++b) {
        if (!sp.apply({GenSym::E, a, b}, seed).empty()) lowering_only_ = false;
        SparseVec hv = sp.apply({GenSym::H, a, b}, seed);
        if (!(hv.empty() || (hv.size() == 1 && hv.front().first == sp.cyclic())))
          lowering_only_ = false;
      }
    }
  }
  if (lowering_only_) {
    for (int a = 0; a < tl; ++a)
      for (int b = 0; b < ul; ++b) letters_.push_back({GenSym::F, a, b});
  } else {
    for (auto x : {GenSym::E, GenSym::F, GenSym::H})
      for (int a = 0; a < tl; ++a)
        for (int b = 0; b < ul; ++b) letters_.push_back({x, a, b});
  }

  struct Pending {
    int parent;  // -1 for the seed
    GenSym sym;
  };
  std::map<int, std::vector<Pending>> pending;
  pending[0].push_back({-1, {GenSym::F, 0, 0}});

  while (!pending.empty()) {
    auto it = pending.begin();
    int stage = it->first;
    std::vector<Pending> batch = std::move(it->second);
    pending.erase(it);
    for (const Pending& pd : batch) {
      SparseVec vec;
      long long w;
      int uu;
      if (pd.parent < 0) {
        vec = seed;
        w = sp.weight_of(sp.cyclic());
        uu = sp.u_of(sp.cyclic());
      } else {
        vec = sp.apply(pd.sym, row_vector(pd.parent));
        if (vec.empty()) continue;
        const RowInfo& pi = rows_[pd.parent];
        int shift = pd.sym.x == GenSym::E ? 2 : (pd.sym.x == GenSym::F ? -2 : 0);
        w = pi.weight + shift;
        uu = pi.u + pd.sym.u_pow;
      }
      int sid = slice_of_create(w, uu);
      Slice& sl = *slices_[sid];
      if (sl.full_dim == 0) {
        auto am = ambient.find({w, uu});
        sl.full_dim = am == ambient.end() ? 0 : am->second;
      }
      if (sl.ech.rank() >= sl.full_dim) continue;  // slice complete

      SparseVec local;
      local.reserve(vec.size());
      for (const auto& [g, q] : vec) local.emplace_back(sl.local_id(g), q);
      std::sort(local.begin(), local.end());
      Echelon::Insert ins = sl.ech.insert(to_primitive(local), stage);
      if (!ins.accepted) continue;

      int gid = static_cast<int>(rows_.size());
      rows_.push_back({sid, ins.row_id, stage, w, uu});
      sl.gid_of_row.push_back(gid);
      sl.accepted_per_stage[stage]++;
      char_.cells[{stage, w, uu}]++;
      max_stage_ = std::max(max_stage_, stage);
      for (const GenSym& L : letters_) pending[stage + L.t_pow].push_back({gid, L});
    }
  }
}

SparseVec GradedClosure::row_vector(int gid) const {
  const RowInfo& ri = rows_[gid];
  const Slice& sl = *slices_[ri.slice];
  const IntRow& r = sl.ech.row(ri.local_id);
  SparseVec out;
  out.reserve(r.size());
  for (const auto& [loc, x] : r) out.emplace_back(sl.global_of[loc], Rat(x));
  std::sort(out.begin(), out.end());
  return out;
}

SparseVec GradedClosure::coords(const SparseVec& v) const {
  if (v.empty()) return {};
  long long w = space_->weight_of(v.front().first);
  int uu = space_->u_of(v.front().first);
  int sid = slice_of(w, uu);
  if (sid < 0) throw std::logic_error("vector outside the traversed slices");
  const Slice& sl = *slices_[sid];
  SparseVec local;
  local.reserve(v.size());
  for (const auto& [g, q] : v) {
    auto it = sl.local_of.find(g);
    if (it == sl.local_of.end())
      throw std::logic_error("vector outside the cyclic span");
    local.emplace_back(it->second, q);
  }
  std::sort(local.begin(), local.end());
  auto sol = sl.ech.solve(local);
  if (!sol) throw std::logic_error("vector outside the cyclic span");
  SparseVec out;
  out.reserve(sol->size());
  for (const auto& [rid, q] : *sol) out.emplace_back(sl.gid_of_row[rid], q);
  std::sort(out.begin(), out.end());
  return out;
}

SparseVec GradedClosure::class_at(const SparseVec& v, int stage) const {
  SparseVec c = coords(v);
  SparseVec out;
  for (const auto& [gid, q] : c) {
    int s = rows_[gid].stage;
    if (s > stage) throw std::logic_error("coordinate above the requested degree");
    if (s == stage) out.emplace_back(gid, q);
  }
  return out;
}

const SparseVec& GradedClosure::graded_column(int gid, const GenSym& sym) const {
  std::scoped_lock lk(cache_mu_);
  auto key = std::make_pair(gid, sym);
  auto it = column_cache_.find(key);
  if (it != column_cache_.end()) return it->second;
  SparseVec vec = space_->apply(sym, row_vector(gid));
  SparseVec cls;
  if (!vec.empty()) cls = class_at(vec, rows_[gid].stage + sym.t_pow);
  return column_cache_.emplace(key, std::move(cls)).first->second;
}

long long GradedClosure::cell_dim(int stage, long long weight, int u) const {
  auto it = char_.cells.find({stage, weight, u});
  return it == char_.cells.end() ? 0 : it->second;
}

ExplicitModule GradedClosure::materialize() const {
  int n = static_cast<int>(rows_.size());
  int tl = space_->t_letters(), ul = space_->u_letters();
  ExplicitModule out(n, tl, ul);
  std::vector<long long> w(n);
  std::vector<int> grades(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    w[i] = rows_[i].weight;
    grades[i] = rows_[i].stage;
    labels[i] = "g" + std::to_string(i) + ".s" + std::to_string(rows_[i].stage) + ".w" +
                std::to_string(rows_[i].weight);
  }
  out.set_weights(std::move(w));
  out.set_grades(std::move(grades));
  out.set_labels(std::move(labels));
  for (auto x : {GenSym::E, GenSym::F, GenSym::H}) {
    for (int a = 0; a < tl; ++a) {
      for (int b = 0; b < ul; ++b) {
        GenSym s{x, a, b};
        SparseMat m(n, n);
        bool any = false;
        for (int gid = 0; gid < n; ++gid) {
          SparseVec col = graded_column(gid, s);
          if (!col.empty()) any = true;
          m.set_col(gid, std::move(col));
        }
        if (any) out.set_action(s, std::move(m));
      }
    }
  }
  if (rows_.empty() || rows_[0].stage != 0)
    throw std::logic_error("closure basis does not start at the cyclic vector");
  out.set_cyclic(0);
  return out;
}

Truncation::Truncation(std::shared_ptr<const GradedClosure> closure, int n_trunc)
    : cl_(std::move(closure)), n_(n_trunc) {
  if (n_ < 1) throw std::domain_error("truncation order must be >= 1");
  const GradedClosure& cl = *cl_;
  // The image of every generator with t-power >= n already spans the
  // submodule: for lowering-only closures the lowering images alone do,
  // since the remaining generators reach them through commutators that
  // stay inside the span.
  for (int gid = 0; gid < static_cast<int>(cl.rows_.size()); ++gid) {
    const auto& ri = cl.rows_[gid];
    for (const GenSym& L : cl.letters_) {
      if (L.t_pow < n_) continue;
      int shift = L.x == GenSym::E ? 2 : (L.x == GenSym::F ? -2 : 0);
      long long w = ri.weight + shift;
      int uu = ri.u + L.u_pow;
      int stage = ri.stage + L.t_pow;
      long long full = cl.cell_dim(stage, w, uu);
      if (full == 0) continue;
      auto key = std::make_pair(cl.slice_of(w, uu), stage);
      Echelon& cell = cells_[key];
      if (cell.rank() >= full) continue;
      const SparseVec& col = cl.graded_column(gid, L);
      if (col.empty()) continue;
      cell.insert(to_primitive(col), stage);
    }
  }
  for (const auto& [key, cell] : cells_) {
    if (cell.rank() == 0) continue;
    const auto& sl = *cl.slices_[key.first];
    sub_.cells[{key.second, sl.weight, sl.u}] = cell.rank();
  }
  for (const auto& [k, v] : cl.char_.cells) {
    long long s = v;
    auto it = sub_.cells.find(k);
    if (it != sub_.cells.end()) s -= it->second;
    if (s < 0) throw std::logic_error("submodule exceeds the module in a cell");
    if (s > 0) quotient_.cells[k] = s;
  }
}

Truncation::BasisCheck Truncation::basis_check(
    const std::vector<std::vector<int>>& monomials) const {
  const GradedClosure& cl = *cl_;
  const ActionSpace& sp = cl.space();
  BasisCheck out;
  std::map<std::pair<int, int>, Echelon> work;  // copies of submodule cells
  std::map<std::tuple<int, long long, int>, long long> inserted;

  SparseVec seed{{sp.cyclic(), Rat(1)}};
  long long w0 = sp.weight_of(sp.cyclic());
  int u0 = sp.u_of(sp.cyclic());

  for (const auto& mono : monomials) {
    ++out.checked;
    int stage = 0, count = 0;
    bool dead = false;
    SparseVec vec = seed;
    for (size_t p = 0; p < mono.size() && !dead; ++p) {
      for (int rep = 0; rep < mono[p] && !dead; ++rep) {
        stage += static_cast<int>(p);
        ++count;
        if (static_cast<int>(p) >= sp.t_letters()) {
          // Beyond the generating range the graded action vanishes.
          dead = true;
          break;
        }
        vec = sp.apply({GenSym::F, static_cast<int>(p), 0}, vec);
        if (vec.empty()) dead = true;
      }
    }
    long long w = w0 - 2LL * count;
    SparseVec cls;
    if (!dead) cls = cl.class_at(vec, stage);
    if (dead || cls.empty()) {
      out.independent = false;
      out.dependent_witnesses.push_back(mono);
      continue;
    }
    auto key = std::make_pair(cl.slice_of(w, u0), stage);
    auto it = work.find(key);
    if (it == work.end()) {
      auto base = cells_.find(key);
      it = work.emplace(key, base == cells_.end() ? Echelon() : base->second).first;
    }
    Echelon::Insert ins = it->second.insert(to_primitive(cls), stage);
    if (!ins.accepted) {
      out.independent = false;
      out.dependent_witnesses.push_back(mono);
      continue;
    }
    inserted[{stage, w, u0}]++;
  }

  for (const auto& [k, v] : quotient_.cells) {
    auto it = inserted.find(k);
    long long got = it == inserted.end() ? 0 : it->second;
    if (got != v) {
      out.spanning = false;
      out.detail += "cell (deg " + std::to_string(std::get<0>(k)) + ", wt " +
                    std::to_string(std::get<1>(k)) + ") has " + std::to_string(got) +
                    " of " + std::to_string(v) + " basis classes; ";
    }
  }
  for (const auto& [k, v] : inserted) {
    if (!quotient_.cells.count(k) && v > 0) {
      out.spanning = false;
      out.detail += "unexpected classes in an empty cell; ";
    }
  }
  return out;
}

std::shared_ptr<const GradedClosure> fusion_closure(const std::vector<int>& factor_weights,
                                                    const std::vector<Rat>& params,
                                                    long long dim_cap) {
  long long dim = 1;
  for (int k : factor_weights) {
    dim *= k + 1;
    if (dim > dim_cap)
      throw resource_error("fusion dimension exceeds cap",
                           static_cast<unsigned long long>(dim));
  }
  std::vector<ExplicitModule> factors;
  factors.reserve(factor_weights.size());
  for (int k : factor_weights) factors.push_back(irrep(k));
  auto space = std::make_shared<FactorSpace>(std::move(factors), params);
  return std::make_shared<GradedClosure>(std::move(space),
                                         GradedClosure::Options{dim_cap, false});
}

std::vector<Rat> default_params(int n) {
  std::vector<Rat> z(n);
  for (int i = 0; i < n; ++i) z[i] = i;
  return z;
}

}  // namespace curralg
