#include "curralg/module.hpp"

#include <stdexcept>

namespace curralg {

std::string GenSym::str() const {
  static const char* base = "efh";
  std::string s(1, base[x]);
  if (t_pow) s += ".t" + std::to_string(t_pow);
  if (u_pow) s += ".u" + std::to_string(u_pow);
  return s;
}

ExplicitModule::ExplicitModule(int dim, int t_trunc, int u_trunc)
    : dim_(dim), t_trunc_(t_trunc), u_trunc_(u_trunc), zero_(dim, dim) {
  weight_.assign(dim, 0);
  labels_.resize(dim);
  for (int i = 0; i < dim; ++i) labels_[i] = "b" + std::to_string(i);
}

const SparseMat& ExplicitModule::act(const GenSym& s) const {
  auto it = action_.find(s);
  if (it != action_.end()) return it->second;
  return zero_;
}

void ExplicitModule::set_action(const GenSym& s, SparseMat m) {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw std::invalid_argument("action matrix shape mismatch");
  action_[s] = std::move(m);
}

SparseVec ExplicitModule::cyclic_vec() const {
  if (!cyclic_) throw std::logic_error("module has no cyclic vector");
  return {{*cyclic_, Rat(1)}};
}

std::vector<GenSym> ExplicitModule::symbols() const {
  std::vector<GenSym> out;
  out.reserve(action_.size());
  for (const auto& [s, m] : action_) out.push_back(s);
  return out;
}

namespace {
// [x, y] = coeff * z in sl2 with basis e, f, h.
struct BracketRule {
  Rat coeff;
  GenSym::Base z;
  bool zero;
};

BracketRule sl2_bracket(GenSym::Base x, GenSym::Base y) {
  using B = GenSym::Base;
  if (x == y) return {Rat(0), B::E, true};
  if (x == B::E && y == B::F) return {Rat(1), B::H, false};
  if (x == B::F && y == B::E) return {Rat(-1), B::H, false};
  if (x == B::H && y == B::E) return {Rat(2), B::E, false};
  if (x == B::E && y == B::H) return {Rat(-2), B::E, false};
  if (x == B::H && y == B::F) return {Rat(-2), B::F, false};
  return {Rat(2), B::F, false};  // [f, h]
}
}  // namespace

std::string ExplicitModule::check_brackets() const {
  std::vector<GenSym> syms = symbols();
  for (const auto& a : syms) {
    for (const auto& b : syms) {
      SparseMat lhs = act(a).mul(act(b)).plus(act(b).mul(act(a)), Rat(-1));
      BracketRule rule = sl2_bracket(a.x, b.x);
      SparseMat rhs(dim_, dim_);
      int t = a.t_pow + b.t_pow, u = a.u_pow + b.u_pow;
      if (!rule.zero && t < t_trunc_ && u < u_trunc_)
        rhs = act({rule.z, t, u}).scaled(rule.coeff);
      if (!(lhs == rhs))
        return "bracket mismatch for [" + a.str() + ", " + b.str() + "]";
    }
  }
  return {};
}

std::string ExplicitModule::check_weight_diagonal() const {
  const SparseMat& h0 = act({GenSym::H, 0, 0});
  for (int j = 0; j < dim_; ++j) {
    SparseVec col = h0.col(j);
    SparseVec expect;
    if (weight_[j] != 0) expect = {{j, Rat(weight_[j])}};
    if (col != expect) return "h action not diagonal with stored weight at basis " + std::to_string(j);
  }
  // weight shift of e and f columns
  for (const auto& [s, m] : action_) {
    int shift = s.x == GenSym::E ? 2 : (s.x == GenSym::F ? -2 : 0);
    for (int j = 0; j < dim_; ++j)
      for (const auto& [i, v] : m.col(j))
        if (weight_[i] != weight_[j] + shift)
          return "weight shift violated by " + s.str() + " at column " + std::to_string(j);
  }
  return {};
}

std::string ExplicitModule::check_grading() const {
  if (!grade_) return {};
  for (const auto& [s, m] : action_) {
    for (int j = 0; j < dim_; ++j)
      for (const auto& [i, v] : m.col(j))
        if ((*grade_)[i] != (*grade_)[j] + s.t_pow + s.u_pow)
          return "grade shift violated by " + s.str() + " at column " + std::to_string(j);
  }
  return {};
}

bool ExplicitModule::cyclic_is_highest_weight() const {
  if (!cyclic_) return false;
  SparseVec v = cyclic_vec();
  for (const auto& [s, m] : action_) {
    if (s.x == GenSym::E) {
      if (!m.apply(v).empty()) return false;
    } else if (s.x == GenSym::H) {
      SparseVec w = m.apply(v);
      if (w.empty()) continue;
      if (w.size() != 1 || w.front().first != *cyclic_) return false;
    }
  }
  return true;
}

ExplicitModule irrep(int k) {
  if (k < 0) throw std::domain_error("irrep: highest weight must be non-negative");
  ExplicitModule m(k + 1, 1, 1);
  SparseMat e(k + 1, k + 1), f(k + 1, k + 1), h(k + 1, k + 1);
  std::vector<long long> w(k + 1);
  std::vector<std::string> labels(k + 1);
  for (int i = 0; i <= k; ++i) {
    w[i] = k - 2 * i;
    labels[i] = i == 0 ? "v" : "f^" + std::to_string(i) + ".v";
    if (w[i] != 0) h.set(i, i, Rat(w[i]));
    if (i < k) f.set(i + 1, i, Rat(1));
    if (i > 0) e.set(i - 1, i, Rat(i) * Rat(k - i + 1));
  }
  m.set_action({GenSym::E, 0, 0}, std::move(e));
  m.set_action({GenSym::F, 0, 0}, std::move(f));
  m.set_action({GenSym::H, 0, 0}, std::move(h));
  m.set_weights(std::move(w));
  m.set_labels(std::move(labels));
  m.set_grades(std::vector<int>(k + 1, 0));
  m.set_cyclic(0);
  return m;
}

ExplicitModule evaluation(const ExplicitModule& m, const Rat& z, int trunc) {
  if (m.t_trunc() != 1 || m.u_trunc() != 1)
    throw std::domain_error("evaluation: expected a plain sl2 module");
  if (trunc < 1) throw std::domain_error("evaluation: trunc must be >= 1");
  ExplicitModule out(m.dim(), trunc, 1);
  Rat zr = 1;
  for (int r = 0; r < trunc; ++r) {
    if (r > 0) zr *= z;
    if (zr == 0) break;
    for (auto base : {GenSym::E, GenSym::F, GenSym::H})
      out.set_action({base, r, 0}, m.act({base, 0, 0}).scaled(zr));
  }
  out.set_weights(m.weights());
  out.set_labels(m.basis_labels());
  if (z == 0 && m.graded()) out.set_grades(m.grades());
  if (m.cyclic_index()) out.set_cyclic(*m.cyclic_index());
  return out;
}

ExplicitModule tensor(const std::vector<ExplicitModule>& factors, long long dim_cap) {
  if (factors.empty()) {
    ExplicitModule out(1, 1, 1);
    out.set_cyclic(0);
    out.set_grades({0});
    return out;
  }
  if (factors.size() == 1) return factors.front();
  int tt = factors.front().t_trunc(), ut = factors.front().u_trunc();
  long long dim = 1;
  for (const auto& f : factors) {
    if (f.t_trunc() != tt || f.u_trunc() != ut)
      throw std::domain_error("tensor: factors over different truncated algebras");
    dim *= f.dim();
    if (dim > dim_cap)
      throw resource_error("tensor: dimension exceeds cap", static_cast<unsigned long long>(dim));
  }
  int n = static_cast<int>(factors.size());
  ExplicitModule out(static_cast<int>(dim), tt, ut);

  // index = sum_i digit_i * stride_i, strides from the right
  std::vector<long long> stride(n);
  stride[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].dim();

  std::vector<long long> w(dim, 0);
  std::vector<int> grades(dim, 0);
  bool all_graded = true;
  std::vector<std::string> labels(dim);
  for (long long idx = 0; idx < dim; ++idx) {
    long long rest = idx;
    std::string lab;
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(rest / stride[i]);
      rest %= stride[i];
      w[idx] += factors[i].weight_of(d);
      if (factors[i].graded())
        grades[idx] += factors[i].grade_of(d);
      else
        all_graded = false;
      if (i) lab += "|";
      lab += factors[i].basis_labels()[d];
    }
    labels[idx] = lab;
  }
  out.set_weights(std::move(w));
  out.set_labels(std::move(labels));
  if (all_graded) out.set_grades(std::move(grades));

  for (auto base : {GenSym::E, GenSym::F, GenSym::H}) {
    for (int t = 0; t < tt; ++t) {
      for (int u = 0; u < ut; ++u) {
        GenSym s{base, t, u};
        bool any = false;
        for (const auto& f : factors) any = any || f.has_action(s);
        if (!any) continue;
        SparseMat big(static_cast<int>(dim), static_cast<int>(dim));
        for (long long idx = 0; idx < dim; ++idx) {
          SparseVec col;
          long long rest = idx;
          for (int i = 0; i < n; ++i) {
            int d = static_cast<int>(rest / stride[i]);
            rest %= stride[i];
            for (const auto& [r, v] : factors[i].act(s).col(d)) {
              long long target = idx + (static_cast<long long>(r) - d) * stride[i];
              col = add_scaled(col, Rat(1), {{static_cast<int32_t>(target), v}});
            }
          }
          big.set_col(static_cast<int>(idx), std::move(col));
        }
        out.set_action(s, std::move(big));
      }
    }
  }

  bool all_cyclic = true;
  long long cyc = 0;
  for (int i = 0; i < n; ++i) {
    if (!factors[i].cyclic_index()) {
      all_cyclic = false;
      break;
    }
    cyc += *factors[i].cyclic_index() * stride[i];
  }
  if (all_cyclic) out.set_cyclic(static_cast<int>(cyc));
  return out;
}

ExplicitModule swap_variables(const ExplicitModule& m) {
  ExplicitModule out(m.dim(), m.u_trunc(), m.t_trunc());
  for (const auto& s : m.symbols())
    out.set_action({s.x, s.u_pow, s.t_pow}, m.act(s));
  out.set_weights(m.weights());
  out.set_labels(m.basis_labels());
  if (m.graded()) out.set_grades(m.grades());
  if (m.cyclic_index()) out.set_cyclic(*m.cyclic_index());
  return out;
}

}  // namespace curralg
