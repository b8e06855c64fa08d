#include "curralg/weightorder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace curralg {

DominantWeight WeightTuple::sum() const {
  DominantWeight s;
  if (entries.empty()) return s;
  s.coeffs.assign(entries.front().coeffs.size(), 0);
  for (const auto& e : entries)
    for (size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] += e.coeffs[i];
  return s;
}

WeightTuple WeightTuple::canonical() const {
  WeightTuple out = *this;
  std::sort(out.entries.begin(), out.entries.end(),
            [](const DominantWeight& a, const DominantWeight& b) { return a.coeffs < b.coeffs; });
  return out;
}

Int min_subset_pairing(const WeightTuple& t, const RootSystem& rs, int root_index, int k) {
  if (k < 1 || k > t.n()) throw std::domain_error("subset size out of range");
  std::vector<Int> vals;
  vals.reserve(t.entries.size());
  for (const auto& e : t.entries) vals.push_back(coroot_pairing_at(rs, e, root_index));
  std::sort(vals.begin(), vals.end());
  Int s = 0;
  for (int i = 0; i < k; ++i) s += vals[i];
  return s;
}

namespace {
std::vector<Int> order_table(const WeightTuple& t, const RootSystem& rs) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(rs.num_positive()) * t.n());
  for (int b = 0; b < rs.num_positive(); ++b) {
    std::vector<Int> vals;
    vals.reserve(t.entries.size());
    for (const auto& e : t.entries) vals.push_back(coroot_pairing_at(rs, e, b));
    std::sort(vals.begin(), vals.end());
    Int s = 0;
    for (int k = 0; k < t.n(); ++k) {
      s += vals[k];
      out.push_back(s);
    }
  }
  return out;
}

TupleOrder compare_tables(const std::vector<Int>& ta, const std::vector<Int>& tb) {
  bool le = true, ge = true;
  for (size_t i = 0; i < ta.size(); ++i) {
    if (ta[i] > tb[i]) le = false;
    if (ta[i] < tb[i]) ge = false;
  }
  if (le && ge) return TupleOrder::EQ;
  if (le) return TupleOrder::LE;
  if (ge) return TupleOrder::GE;
  return TupleOrder::INCOMPARABLE;
}
}  // namespace

TupleOrder compare_tuples(const WeightTuple& a, const WeightTuple& b, const RootSystem& rs) {
  if (a.n() != b.n()) throw std::domain_error("tuples have different length");
  if (!(a.sum() == b.sum())) throw std::domain_error("tuples have different total weight");
  return compare_tables(order_table(a, rs), order_table(b, rs));
}

Int tuple_space_size(const DominantWeight& total, int n) {
  // product over coordinates of C(c_i + n - 1, n - 1)
  Int prod = 1;
  for (long long c : total.coeffs) {
    Int binom = 1;
    for (long long i = 1; i <= n - 1; ++i) binom = binom * (c + i) / i;
    prod *= binom;
  }
  return prod;
}

std::vector<WeightTuple> enumerate_tuples(const DominantWeight& total, int n, long long cap) {
  if (n < 1) throw std::domain_error("tuple length must be >= 1");
  Int size = tuple_space_size(total, n);
  if (size > cap) {
    unsigned long long count = size <= Int(~0ULL) ? size.convert_to<unsigned long long>() : ~0ULL;
    throw resource_error("tuple space larger than cap: " + size.str(), count);
  }

  int rank = static_cast<int>(total.coeffs.size());
  std::set<std::vector<std::vector<long long>>> seen;
  std::vector<WeightTuple> out;
  WeightTuple cur;
  cur.entries.assign(n, DominantWeight{std::vector<long long>(rank, 0)});
  DominantWeight rem = total;

  // Fill entries 0..n-2 coordinatewise; the last entry takes the remainder.
  auto rec = [&](auto&& self, int slot, int coord) -> void {
    if (slot == n - 1) {
      cur.entries[slot] = rem;
      WeightTuple canon = cur.canonical();
      std::vector<std::vector<long long>> key;
      for (const auto& e : canon.entries) key.push_back(e.coeffs);
      if (seen.insert(std::move(key)).second) out.push_back(std::move(canon));
      return;
    }
    if (coord == rank) {
      self(self, slot + 1, 0);
      return;
    }
    for (long long v = 0; v <= rem.coeffs[coord]; ++v) {
      cur.entries[slot].coeffs[coord] = v;
      rem.coeffs[coord] -= v;
      self(self, slot, coord + 1);
      rem.coeffs[coord] += v;
    }
    cur.entries[slot].coeffs[coord] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<WeightTuple> maximal_tuples(const DominantWeight& total, int n,
                                        const RootSystem& rs, long long cap) {
  std::vector<WeightTuple> all = enumerate_tuples(total, n, cap);
  std::vector<std::vector<Int>> tables;
  tables.reserve(all.size());
  for (const auto& t : all) tables.push_back(order_table(t, rs));
  std::vector<WeightTuple> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j) continue;
      TupleOrder o = compare_tables(tables[i], tables[j]);
      if (o == TupleOrder::LE) dominated = true;
    }
    if (!dominated) out.push_back(all[i]);
  }
  return out;
}

long long hasse_relation_count(const DominantWeight& total, int n, const RootSystem& rs,
                               long long cap) {
  std::vector<WeightTuple> all = enumerate_tuples(total, n, cap);
  std::vector<std::vector<Int>> tables;
  tables.reserve(all.size());
  for (const auto& t : all) tables.push_back(order_table(t, rs));
  auto strictly_less = [&](size_t i, size_t j) {
    return compare_tables(tables[i], tables[j]) == TupleOrder::LE;
  };
  long long covers = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j || !strictly_less(i, j)) continue;
      bool cover = true;
      for (size_t w = 0; w < all.size() && cover; ++w) {
        if (w == i || w == j) continue;
        if (strictly_less(i, w) && strictly_less(w, j)) cover = false;
      }
      if (cover) ++covers;
    }
  }
  return covers;
}

}  // namespace curralg
