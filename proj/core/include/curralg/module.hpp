#pragma once

#include "curralg/linalg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curralg {

// Generator symbol x ⊗ t^t_pow u^u_pow with x in {e, f, h}.
struct GenSym {
  enum Base : uint8_t { E = 0, F = 1, H = 2 };
  Base x;
  int t_pow = 0;
  int u_pow = 0;
  auto operator<=>(const GenSym&) const = default;
  std::string str() const;
};

// A finite-dimensional module over a truncated (toroidal) sl2 current
// algebra, given by exact rational action matrices for every generator
// x ⊗ t^a u^b with a < t_trunc, b < u_trunc. Missing symbols act as zero.
class ExplicitModule {
 public:
  ExplicitModule() = default;
  ExplicitModule(int dim, int t_trunc, int u_trunc = 1);

  int dim() const { return dim_; }
  int t_trunc() const { return t_trunc_; }
  int u_trunc() const { return u_trunc_; }

  const SparseMat& act(const GenSym& s) const;
  void set_action(const GenSym& s, SparseMat m);
  bool has_action(const GenSym& s) const { return action_.count(s) > 0; }
  SparseVec apply(const GenSym& s, const SparseVec& v) const { return act(s).apply(v); }

  const std::vector<long long>& weights() const { return weight_; }
  long long weight_of(int i) const { return weight_[i]; }
  void set_weights(std::vector<long long> w) { weight_ = std::move(w); }

  bool graded() const { return grade_.has_value(); }
  const std::vector<int>& grades() const { return *grade_; }
  int grade_of(int i) const { return (*grade_)[i]; }
  void set_grades(std::vector<int> g) { grade_ = std::move(g); }

  std::optional<int> cyclic_index() const { return cyclic_; }
  void set_cyclic(int i) { cyclic_ = i; }
  SparseVec cyclic_vec() const;

  const std::vector<std::string>& basis_labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  // All symbols with a stored (possibly zero) action matrix.
  std::vector<GenSym> symbols() const;

  // Structural checks. Each returns a human-readable description of the
  // first violation, or an empty string when the check passes.
  std::string check_brackets() const;
  std::string check_weight_diagonal() const;
  std::string check_grading() const;

  // True when the cyclic vector is annihilated by every raising generator
  // and is an eigenvector of every diagonal generator. Modules with this
  // property are spanned by lowering monomials applied to the generator.
  bool cyclic_is_highest_weight() const;

 private:
  int dim_ = 0;
  int t_trunc_ = 0, u_trunc_ = 1;
  std::map<GenSym, SparseMat> action_;
  std::vector<long long> weight_;
  std::optional<std::vector<int>> grade_;
  std::optional<int> cyclic_;
  std::vector<std::string> labels_;
  mutable SparseMat zero_;  // scratch for missing symbols
};

// The (k+1)-dimensional simple sl2 module on basis f^i.v, i = 0..k.
ExplicitModule irrep(int k);

// Pullback of an sl2 module along evaluation at z: x ⊗ t^r acts as z^r x.
// M must be plain sl2 (t_trunc == 1, u_trunc == 1).
ExplicitModule evaluation(const ExplicitModule& m, const Rat& z, int trunc);

// Tensor product with Leibniz action; factors must share (t_trunc, u_trunc).
// Throws resource_error when the product dimension exceeds dim_cap.
ExplicitModule tensor(const std::vector<ExplicitModule>& factors, long long dim_cap);

// Swap the roles of t and u in every generator symbol.
ExplicitModule swap_variables(const ExplicitModule& m);

}  // namespace curralg
