#include "curralg/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace curralg {

namespace {
int positive_mod(long long v, int m) {
  int r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}
}  // namespace

CarryProfile carry_profile(const PBWMonomial& m, int j, int limit_offset) {
  int n = static_cast<int>(m.size());
  if (j < 0 || j >= n) throw std::domain_error("carry profile: need 0 <= j < N");
  CarryProfile out;
  int limit = n - 4 + limit_offset;
  if (limit > n - 2) limit = n - 2;  // b_l needs modulus N-l >= 2
  if (limit < 0) return out;
  out.b.resize(limit + 1);
  out.b[0] = positive_mod(static_cast<long long>(m[0]) - j, n);
  for (int l = 1; l <= limit; ++l)
    out.b[l] = positive_mod(static_cast<long long>(m[l]) + out.b[l - 1] % (n - l), n - l);
  return out;
}

bool in_cutoff_set(const PBWMonomial& m, int k, int j, int limit_offset) {
  int n = static_cast<int>(m.size());
  CarryProfile cp = carry_profile(m, j, limit_offset);
  Int nfac = factorial(n);
  Int lhs = 0;
  for (int p = 0; p < n; ++p) lhs += nfac / (n - p) * m[p];
  Int rhs = nfac * k + factorial(n - 1) * j;
  for (size_t l = 0; l < cp.b.size(); ++l) {
    int li = static_cast<int>(l);
    rhs -= nfac / factorial(n - li) * factorial(n - li - 2) * cp.b[l];
  }
  return lhs <= rhs;
}

std::vector<PBWMonomial> enumerate_cutoff_set(int k, int j, int n, int limit_offset) {
  if (n < 1) throw std::domain_error("need N >= 1");
  if (j < 0 || j >= n) throw std::domain_error("need 0 <= j < N");
  if (k < 0) throw std::domain_error("need k >= 0");
  Int nfac = factorial(n);
  Int budget = nfac * k + factorial(n - 1) * j;  // carries only shrink the bound
  std::vector<PBWMonomial> out;
  PBWMonomial cur(n, 0);
  auto rec = [&](auto&& self, int p, Int used) -> void {
    if (p == n) {
      if (in_cutoff_set(cur, k, j, limit_offset)) out.push_back(cur);
      return;
    }
    Int coeff = nfac / (n - p);
    for (int v = 0;; ++v) {
      Int next = used + coeff * v;
      if (next > budget) break;
      cur[p] = v;
      self(self, p + 1, next);
    }
    cur[p] = 0;
  };
  rec(rec, 0, Int(0));
  return out;
}

Int cutoff_expected_size(int k, int j, int n) {
  return int_pow(Int(k + 1), n - j) * int_pow(Int(k + 2), j);
}

namespace {

std::set<PBWMonomial> recursive_basis_clean(std::vector<int> ks) {
  // ks sorted ascending, all entries positive
  std::set<PBWMonomial> out;
  int n = static_cast<int>(ks.size());
  if (n == 0) {
    out.insert(PBWMonomial{});
    return out;
  }
  if (n == 1) {
    for (int a = 0; a <= ks[0]; ++a) out.insert(PBWMonomial{a});
    return out;
  }
  // shift part from the first n-1 entries
  {
    std::vector<int> head(ks.begin(), ks.end() - 1);
    for (const auto& m : recursive_basis_clean(head)) {
      PBWMonomial s(n, 0);
      std::copy(m.begin(), m.end(), s.begin() + 1);
      out.insert(std::move(s));
    }
  }
  // f_0 part from the tuple with the last entry decremented
  {
    std::vector<int> dec = ks;
    dec.back() -= 1;
    std::sort(dec.begin(), dec.end());
    dec.erase(std::remove(dec.begin(), dec.end(), 0), dec.end());
    for (const auto& m : recursive_basis_clean(dec)) {
      PBWMonomial s(n, 0);
      std::copy(m.begin(), m.end(), s.begin());
      s[0] += 1;
      out.insert(std::move(s));
    }
  }
  return out;
}

}  // namespace

std::set<PBWMonomial> recursive_basis(const std::vector<int>& ks) {
  if (!std::is_sorted(ks.begin(), ks.end()))
    throw std::domain_error("recursive basis: factor weights must be sorted ascending");
  for (int k : ks)
    if (k < 0) throw std::domain_error("recursive basis: factor weights must be >= 0");
  std::vector<int> clean = ks;
  clean.erase(std::remove(clean.begin(), clean.end(), 0), clean.end());
  int n = static_cast<int>(ks.size());
  std::set<PBWMonomial> out;
  for (const auto& m : recursive_basis_clean(clean)) {
    PBWMonomial s(n, 0);
    std::copy(m.begin(), m.end(), s.begin());
    out.insert(std::move(s));
  }
  return out;
}

EquivalenceReport verify_equivalence(int k, int j, int n, int limit_offset) {
  std::vector<int> ks;
  for (int i = 0; i < n - j; ++i) ks.push_back(k);
  for (int i = 0; i < j; ++i) ks.push_back(k + 1);
  std::set<PBWMonomial> rec = recursive_basis(ks);
  std::vector<PBWMonomial> cut = enumerate_cutoff_set(k, j, n, limit_offset);
  std::set<PBWMonomial> cutset(cut.begin(), cut.end());
  EquivalenceReport rep;
  std::set_difference(rec.begin(), rec.end(), cutset.begin(), cutset.end(),
                      std::back_inserter(rep.only_recursive));
  std::set_difference(cutset.begin(), cutset.end(), rec.begin(), rec.end(),
                      std::back_inserter(rep.only_cutoff));
  rep.equal = rep.only_recursive.empty() && rep.only_cutoff.empty();
  return rep;
}

}  // namespace curralg
