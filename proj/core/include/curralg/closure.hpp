#pragma once

#include "curralg/module.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace curralg {

// Dimension of the t-degree-s component, entry s of the vector.
using GradedDims = std::vector<long long>;

// Dimensions keyed by (t-degree, weight, u-degree).
struct CharTable {
  std::map<std::tuple<int, long long, int>, long long> cells;

  long long total() const;
  GradedDims by_stage() const;
  std::map<std::pair<int, long long>, long long> by_stage_weight() const;
  std::map<std::pair<int, int>, long long> by_stage_u() const;
  bool operator==(const CharTable&) const = default;
};

// Vector space carrying a truncated current-algebra action, abstracted so
// the closure can run over tensor products of factors without forming the
// product matrices, or over an ExplicitModule directly.
class ActionSpace {
 public:
  virtual ~ActionSpace() = default;
  virtual long long dim() const = 0;
  virtual long long weight_of(int32_t idx) const = 0;
  virtual int u_of(int32_t idx) const { return 0; }
  virtual int32_t cyclic() const = 0;
  virtual SparseVec apply(const GenSym& s, const SparseVec& v) const = 0;
  virtual int t_letters() const = 0;  // t-powers 0..t_letters-1 generate
  virtual int u_letters() const { return 1; }
};

// Tensor product of explicit modules with the t-variable evaluated at
// pairwise distinct parameters: x (x) t^a u^b acts on factor i through
// z_i^a (x (x) u^b).
class FactorSpace : public ActionSpace {
 public:
  FactorSpace(std::vector<ExplicitModule> factors, std::vector<Rat> params);
  long long dim() const override { return dim_; }
  long long weight_of(int32_t idx) const override { return weight_[idx]; }
  int u_of(int32_t idx) const override { return u_[idx]; }
  int32_t cyclic() const override { return cyclic_; }
  SparseVec apply(const GenSym& s, const SparseVec& v) const override;
  int t_letters() const override { return static_cast<int>(factors_.size()); }
  int u_letters() const override { return u_letters_; }

 private:
  std::vector<ExplicitModule> factors_;
  std::vector<std::vector<Rat>> zpow_;  // zpow_[i][a] = z_i^a
  std::vector<long long> stride_;
  std::vector<long long> weight_;
  std::vector<int> u_;
  long long dim_;
  int32_t cyclic_;
  int u_letters_;
};

// An ExplicitModule viewed as an ActionSpace.
class ModuleSpace : public ActionSpace {
 public:
  explicit ModuleSpace(ExplicitModule m);
  long long dim() const override { return mod_.dim(); }
  long long weight_of(int32_t idx) const override { return mod_.weight_of(idx); }
  int32_t cyclic() const override;
  SparseVec apply(const GenSym& s, const SparseVec& v) const override;
  int t_letters() const override { return mod_.t_trunc(); }
  int u_letters() const override { return mod_.u_trunc(); }
  const ExplicitModule& module() const { return mod_; }

 private:
  ExplicitModule mod_;
};

// Filtration closure of the cyclic span by total t-degree. Generators are
// applied breadth first in ascending degree; accepted residual rows form a
// basis adapted to the filtration, tagged by the degree where each new
// direction appears. When the cyclic vector is annihilated by the raising
// currents and diagonal for the Cartan currents, lowering generators alone
// span and the closure restricts to them.
class GradedClosure {
 public:
  struct Options {
    long long dim_cap = 4096;
    bool force_all_symbols = false;  // skip the highest-weight fast path
  };

  GradedClosure(std::shared_ptr<const ActionSpace> space, Options opt);

  const CharTable& char_table() const { return char_; }
  long long rank() const { return static_cast<long long>(rows_.size()); }
  long long defect() const { return space_->dim() - rank(); }
  int max_stage() const { return max_stage_; }
  bool used_lowering_only() const { return lowering_only_; }
  const ActionSpace& space() const { return *space_; }

  struct RowInfo {
    int slice;
    int local_id;  // row id within the slice echelon
    int stage;
    long long weight;
    int u;
  };
  const std::vector<RowInfo>& rows() const { return rows_; }

  // Coordinates of v over the adapted basis (global row ids); v must lie
  // in the cyclic span.
  SparseVec coords(const SparseVec& v) const;
  // Associated-graded class of v in degree `stage`: the stage-s part of
  // the coordinates. Callers must pass v in V^stage.
  SparseVec class_at(const SparseVec& v, int stage) const;

  // Column of the graded action of `sym` at basis row gid, as a class in
  // degree stage(gid) + t(sym); cached.
  const SparseVec& graded_column(int gid, const GenSym& sym) const;

  // The tensor-space vector of a basis row.
  SparseVec row_vector(int gid) const;

  // Slice bookkeeping (weight, u) -> cell dims, for span checks.
  long long cell_dim(int stage, long long weight, int u) const;

  // Materialize the associated graded module with its full action.
  ExplicitModule materialize() const;

 private:
  struct Slice;
  int slice_of(long long weight, int u) const;  // -1 when absent
  int slice_of_create(long long weight, int u);

  std::shared_ptr<const ActionSpace> space_;
  Options opt_;
  bool lowering_only_ = false;
  std::vector<GenSym> letters_;
  std::vector<std::unique_ptr<Slice>> slices_;
  std::map<std::pair<long long, int>, int> slice_index_;
  std::vector<RowInfo> rows_;
  CharTable char_;
  int max_stage_ = 0;

  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<int, GenSym>, SparseVec> column_cache_;

  friend class Truncation;
};

// The quotient data of a closure by the submodule generated by all
// x (x) t^r with r >= n_trunc: cell dimensions and a per-cell echelon of
// the submodule classes, enough to run basis checks in the quotient.
class Truncation {
 public:
  Truncation(std::shared_ptr<const GradedClosure> closure, int n_trunc);

  const CharTable& quotient_table() const { return quotient_; }
  const CharTable& submodule_table() const { return sub_; }
  int n_trunc() const { return n_; }

  struct BasisCheck {
    bool independent = true;
    bool spanning = true;
    long long checked = 0;
    std::vector<std::vector<int>> dependent_witnesses;
    std::string detail;
  };

  // Applies each monomial (exponents over f (x) t^p, p < n_trunc) to the
  // cyclic vector and checks that the images form a basis of the quotient.
  BasisCheck basis_check(const std::vector<std::vector<int>>& monomials) const;

 private:
  std::shared_ptr<const GradedClosure> cl_;
  int n_;
  CharTable sub_, quotient_;
  // key: (slice, stage) -> echelon of submodule classes over row gids
  std::map<std::pair<int, int>, Echelon> cells_;
};

// Closure of the fusion product V(k_1)^{z_1} (x) ... with the given
// parameters; factors are evaluation pullbacks of irreps.
std::shared_ptr<const GradedClosure> fusion_closure(const std::vector<int>& factor_weights,
                                                    const std::vector<Rat>& params,
                                                    long long dim_cap);

// Default fusion parameters 0, 1, 2, ...
std::vector<Rat> default_params(int n);

}  // namespace curralg
