#pragma once

#include "curralg/numeric.hpp"

#include <string>
#include <vector>

namespace curralg {

enum class LieType { A, B, C, D, G };

LieType lie_type_from_string(const std::string& s);
std::string to_string(LieType t);

// Dominant integral weight, stored as the pairings with the simple coroots.
struct DominantWeight {
  std::vector<long long> coeffs;

  long long norm1() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
  }
  bool operator==(const DominantWeight&) const = default;
};

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b);
DominantWeight scaled(const DominantWeight& a, long long c);

// Finite root system with the bilinear form normalized so that long roots
// have squared length 2. Positive roots are stored in simple-root
// coordinates. Simple roots follow the Bourbaki numbering; for G2 this
// means alpha_1 is short and theta = 3 alpha_1 + 2 alpha_2.
struct RootSystem {
  LieType type;
  int rank;
  std::vector<std::vector<int>> cartan;       // cartan[i][j] = <alpha_j, alpha_i^v>
  std::vector<Rat> simple_len2;               // (alpha_i, alpha_i)
  std::vector<int> d_simple;                  // 2 / (alpha_i, alpha_i)
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> theta;                     // highest root
  int theta_index;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  Rat form(const std::vector<int>& a, const std::vector<int>& b) const;
  Rat len2(const std::vector<int>& beta) const { return form(beta, beta); }
  int d_of_root(const std::vector<int>& beta) const;  // 2/(beta,beta)
};

// Throws std::invalid_argument for unsupported type/rank combinations.
RootSystem build_root_system(LieType type, int rank);

// lambda(beta^v) = 2 (lambda, beta) / (beta, beta); integral for any root.
Int coroot_pairing(const RootSystem& rs, const DominantWeight& w,
                   const std::vector<int>& beta);

// Same, addressed by index into rs.positive_roots and without the
// membership scan; for enumeration loops.
Int coroot_pairing_at(const RootSystem& rs, const DominantWeight& w, int root_index);

// Per-root audit of the dominance inequality
//   lambda(beta^v)(beta,beta) <= lambda(theta^v)(theta,theta)
// together with the equality criterion: equality holds exactly when lambda
// vanishes on the support of theta - beta (decomposed into simple roots).
struct DominanceRow {
  std::vector<int> beta;
  Rat lhs, rhs;
  bool equality;
  std::vector<int> support;  // simple-root indices with (theta-beta)_i > 0
  bool vanishes_on_support;
  bool consistent;  // equality <-> vanishes_on_support
};

std::vector<DominanceRow> dominance_report(const RootSystem& rs, const DominantWeight& w);

}  // namespace curralg
