#include "curralg/linalg.hpp"

#include <algorithm>

namespace curralg {

SparseVec add_scaled(const SparseVec& a, const Rat& c, const SparseVec& b) {
  if (c == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat v = c * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rat entry_of(const SparseVec& v, int32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& p, int32_t x) { return p.first < x; });
  if (it != v.end() && it->first == idx) return it->second;
  return Rat(0);
}

IntRow to_primitive(const SparseVec& v) {
  if (v.empty()) return {};
  Int l = 1;
  for (const auto& [i, q] : v) l = boost::multiprecision::lcm(l, den(q));
  IntRow r;
  r.reserve(v.size());
  for (const auto& [i, q] : v) r.emplace_back(i, num(q) * (l / den(q)));
  Int g = 0;
  for (const auto& [i, x] : r) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [i, x] : r) x /= g;
  return r;
}

SparseVec to_sparse(const IntRow& r) {
  SparseVec v;
  v.reserve(r.size());
  for (const auto& [i, x] : r) v.emplace_back(i, Rat(x));
  return v;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i] = {{i, Rat(1)}};
  return m;
}

void SparseMat::set(int r, int c, const Rat& v) {
  auto& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& p, int32_t x) { return p.first < x; });
  if (it != col.end() && it->first == r) {
    if (v == 0)
      col.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  std::map<int32_t, Rat> acc;
  for (const auto& [j, c] : v) {
    for (const auto& [i, a] : data_[j]) {
      acc[i] += a * c;
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, q] : acc)
    if (q != 0) out.emplace_back(i, std::move(q));
  return out;
}

SparseMat SparseMat::mul(const SparseMat& o) const {
  SparseMat out(rows_, o.cols_);
  for (int c = 0; c < o.cols_; ++c) out.data_[c] = apply(o.data_[c]);
  return out;
}

SparseMat SparseMat::plus(const SparseMat& o, const Rat& scale) const {
  SparseMat out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) out.data_[c] = add_scaled(data_[c], scale, o.data_[c]);
  return out;
}

SparseMat SparseMat::scaled(const Rat& c) const {
  SparseMat out(rows_, cols_);
  if (c == 0) return out;
  for (int j = 0; j < cols_; ++j) {
    out.data_[j] = data_[j];
    for (auto& [i, v] : out.data_[j]) v *= c;
  }
  return out;
}

SparseMat SparseMat::pow(unsigned e) const {
  SparseMat r = identity(rows_);
  SparseMat b = *this;
  while (e) {
    if (e & 1) r = r.mul(b);
    b = b.mul(b);
    e >>= 1;
  }
  return r;
}

bool SparseMat::is_zero() const {
  for (const auto& c : data_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

size_t SparseMat::nnz() const {
  size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

namespace {

// c <- p*c - cv*r, then content-stripped. Entries of c before r's pivot are gone.
IntRow cross_eliminate(const IntRow& c, const Int& cv, const IntRow& r, const Int& p) {
  IntRow out;
  out.reserve(c.size() + r.size());
  size_t i = 0, j = 0;
  while (i < c.size() || j < r.size()) {
    if (j == r.size() || (i < c.size() && c[i].first < r[j].first)) {
      out.emplace_back(c[i].first, p * c[i].second);
      ++i;
    } else if (i == c.size() || r[j].first < c[i].first) {
      out.emplace_back(r[j].first, -cv * r[j].second);
      ++j;
    } else {
      Int v = p * c[i].second - cv * r[j].second;
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  if (out.empty()) return out;
  Int g = 0;
  for (const auto& [idx, x] : out) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  if (out.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [idx, x] : out) x /= g;
  return out;
}

}  // namespace

Echelon::Insert Echelon::insert(IntRow cand, int stage) {
  while (!cand.empty()) {
    auto it = by_pivot_.find(cand.front().first);
    if (it == by_pivot_.end()) {
      int id = static_cast<int>(rows_.size());
      if (cand.front().second < 0)
        for (auto& [i, x] : cand) x = -x;
      by_pivot_.emplace(cand.front().first, id);
      rows_.push_back(std::move(cand));
      stage_.push_back(stage);
      return {true, id};
    }
    const IntRow& r = rows_[it->second];
    cand = cross_eliminate(cand, cand.front().second, r, r.front().second);
  }
  return {false, -1};
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
  SparseVec w = v;
  std::map<int32_t, Rat> coeff;  // row id -> coefficient
  while (!w.empty()) {
    auto it = by_pivot_.find(w.front().first);
    if (it == by_pivot_.end()) return std::nullopt;
    const IntRow& r = rows_[it->second];
    Rat g = w.front().second / Rat(r.front().second);
    coeff[it->second] += g;
    w = add_scaled(w, -g, to_sparse(r));
  }
  SparseVec out;
  out.reserve(coeff.size());
  for (auto& [id, q] : coeff)
    if (q != 0) out.emplace_back(id, std::move(q));
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec w = v;
  SparseVec rest;
  size_t pos = 0;
  while (pos < w.size()) {
    auto it = by_pivot_.find(w[pos].first);
    if (it == by_pivot_.end()) {
      rest.push_back(w[pos]);
      ++pos;
      continue;
    }
    const IntRow& r = rows_[it->second];
    Rat g = w[pos].second / Rat(r.front().second);
    SparseVec tail(w.begin() + pos, w.end());
    tail = add_scaled(tail, -g, to_sparse(r));
    w.resize(pos);
    w.insert(w.end(), tail.begin(), tail.end());
  }
  return rest;
}

}  // namespace curralg
