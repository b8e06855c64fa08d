#include "curralg/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace curralg {

LieType lie_type_from_string(const std::string& s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  if (s == "G" || s == "g") return LieType::G;
  throw std::invalid_argument("unknown Lie type '" + s + "' (expected A, B, C, D or G)");
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G: return "G";
  }
  return "?";
}

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b) {
  DominantWeight out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DominantWeight scaled(const DominantWeight& a, long long c) {
  DominantWeight out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

Rat RootSystem::form(const std::vector<int>& a, const std::vector<int>& b) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      // (alpha_i, alpha_j) = cartan[i][j] * (alpha_i, alpha_i) / 2
      s += Rat(cartan[i][j]) * simple_len2[i] / 2 * a[i] * b[j];
    }
  }
  return s;
}

int RootSystem::d_of_root(const std::vector<int>& beta) const {
  Rat d = 2 / len2(beta);
  Int v = to_integer(d, "d_beta");
  return static_cast<int>(v);
}

namespace {

struct CartanData {
  std::vector<std::vector<int>> cartan;
  std::vector<Rat> len2;
};

CartanData cartan_data(LieType type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      a[i][i + 1] = -1;
      a[i + 1][i] = -1;
    }
  };
  std::vector<Rat> len2(n, Rat(2));
  switch (type) {
    case LieType::A:
      chain(n);
      break;
    case LieType::B:  // alpha_n short
      chain(n);
      a[n - 1][n - 2] = -2;
      len2[n - 1] = Rat(1);
      break;
    case LieType::C:  // alpha_n long, the others short
      chain(n);
      a[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) len2[i] = Rat(1);
      break;
    case LieType::D:
      chain(n - 1);
      a[n - 3][n - 1] = -1;
      a[n - 1][n - 3] = -1;
      break;
    case LieType::G:  // alpha_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      len2[0] = Rat(2) / 3;
      break;
  }
  return {std::move(a), std::move(len2)};
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 3; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported type/rank: " + to_string(type) + std::to_string(rank));

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  auto cd = cartan_data(type, rank);
  rs.cartan = std::move(cd.cartan);
  rs.simple_len2 = std::move(cd.len2);
  rs.d_simple.resize(rank);
  for (int i = 0; i < rank; ++i) {
    rs.d_simple[i] = static_cast<int>(to_integer(2 / rs.simple_len2[i], "d_i"));
  }

  // Close the simple roots under the simple reflections
  //   s_i(beta) = beta - <beta, alpha_i^v> alpha_i.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long long pair = 0;
      for (int j = 0; j < rank; ++j) pair += static_cast<long long>(rs.cartan[i][j]) * beta[j];
      std::vector<int> refl = beta;
      refl[i] -= static_cast<int>(pair);
      if (all.insert(refl).second) queue.push_back(refl);
    }
  }

  for (const auto& beta : all) {
    bool nonneg = std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(beta.begin(), beta.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("root closure produced a mixed-sign root");
    if (nonneg) rs.positive_roots.push_back(beta);
  }
  auto height = [](const std::vector<int>& b) {
    long long h = 0;
    for (int x : b) h += x;
    return h;
  };
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const auto& x, const auto& y) {
              long long hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });

  rs.theta_index = rs.num_positive() - 1;
  rs.theta = rs.positive_roots.back();
  for (const auto& beta : rs.positive_roots) {
    for (int i = 0; i < rank; ++i)
      if (beta[i] > rs.theta[i])
        throw std::logic_error("highest root is not componentwise maximal");
  }
  if (rs.len2(rs.theta) != 2) throw std::logic_error("highest root is not long");
  return rs;
}

namespace {
Int pairing_nocheck(const RootSystem& rs, const DominantWeight& w,
                    const std::vector<int>& beta) {
  // (lambda, beta) = sum_j beta_j lambda(alpha_j^v) (alpha_j, alpha_j)/2
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j)
    if (beta[j] != 0) s += Rat(beta[j]) * w.coeffs[j] * rs.simple_len2[j] / 2;
  return to_integer(2 * s / rs.len2(beta), "coroot pairing");
}
}  // namespace

Int coroot_pairing(const RootSystem& rs, const DominantWeight& w,
                   const std::vector<int>& beta) {
  if (static_cast<int>(w.coeffs.size()) != rs.rank)
    throw std::domain_error("weight rank mismatch");
  bool is_root = false;
  for (const auto& r : rs.positive_roots) {
    if (r == beta) {
      is_root = true;
      break;
    }
  }
  if (!is_root) throw std::domain_error("beta is not a positive root");
  return pairing_nocheck(rs, w, beta);
}

Int coroot_pairing_at(const RootSystem& rs, const DominantWeight& w, int root_index) {
  return pairing_nocheck(rs, w, rs.positive_roots.at(root_index));
}

std::vector<DominanceRow> dominance_report(const RootSystem& rs, const DominantWeight& w) {
  std::vector<DominanceRow> out;
  Rat rhs = Rat(coroot_pairing(rs, w, rs.theta)) * rs.len2(rs.theta);
  for (const auto& beta : rs.positive_roots) {
    DominanceRow row;
    row.beta = beta;
    row.lhs = Rat(coroot_pairing(rs, w, beta)) * rs.len2(beta);
    row.rhs = rhs;
    row.equality = row.lhs == rhs;
    row.vanishes_on_support = true;
    for (int i = 0; i < rs.rank; ++i) {
      int diff = rs.theta[i] - beta[i];
      if (diff < 0) throw std::logic_error("theta - beta has a negative coefficient");
      if (diff > 0) {
        row.support.push_back(i);
        if (w.coeffs[i] != 0) row.vanishes_on_support = false;
      }
    }
    row.consistent = row.equality == row.vanishes_on_support;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace curralg
