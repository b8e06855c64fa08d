#pragma once

#include "curralg/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace curralg {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int32_t, Rat>>;
// Integer row, same layout. Stored rows are primitive (content 1, positive lead).
using IntRow = std::vector<std::pair<int32_t, Int>>;

// out = a + c*b
SparseVec add_scaled(const SparseVec& a, const Rat& c, const SparseVec& b);
Rat entry_of(const SparseVec& v, int32_t idx);
// Clears denominators and strips content; returns primitive integer row.
IntRow to_primitive(const SparseVec& v);
SparseVec to_sparse(const IntRow& r);

// Column-major sparse matrix over exact rationals.
class SparseMat {
 public:
  SparseMat() : rows_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) { data_.resize(cols); }
  static SparseMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, const Rat& v);
  void set_col(int c, SparseVec col) { data_[c] = std::move(col); }
  const SparseVec& col(int c) const { return data_[c]; }
  Rat at(int r, int c) const { return entry_of(data_[c], r); }

  SparseVec apply(const SparseVec& v) const;
  SparseMat mul(const SparseMat& o) const;
  SparseMat plus(const SparseMat& o, const Rat& scale = 1) const;
  SparseMat scaled(const Rat& c) const;
  SparseMat pow(unsigned e) const;
  bool is_zero() const;
  bool operator==(const SparseMat& o) const;
  size_t nnz() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

// Incremental row echelon over the integers with exact rational solves.
//
// Rows are kept primitive; elimination uses cross multiplication so the
// insert path never leaves the integers. Inserted candidates must arrive
// with non-decreasing stage tags: the rank profile per stage is then the
// dimension profile of the filtration the candidates were drawn from.
class Echelon {
 public:
  struct Insert {
    bool accepted;
    int row_id;  // valid when accepted
  };

  Insert insert(IntRow cand, int stage = 0);

  int rank() const { return static_cast<int>(rows_.size()); }
  const IntRow& row(int id) const { return rows_[id]; }
  int stage_of(int id) const { return stage_[id]; }
  const std::vector<int>& stages() const { return stage_; }

  // Exact coordinates of v over the stored rows; nullopt if v is outside
  // the span. Coordinates are indexed by row id.
  std::optional<SparseVec> solve(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return solve(v).has_value(); }

  // Residual of v after eliminating every pivot hit; zero iff v in span.
  SparseVec reduce(const SparseVec& v) const;

 private:
  std::map<int32_t, int> by_pivot_;
  std::vector<IntRow> rows_;
  std::vector<int> stage_;
};

}  // namespace curralg
