#pragma once
// Independent reference values used by unit and acceptance tests.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "hdt/hermitian.hpp"

namespace hdt::testing {

struct Rab {
  int r = 0;
  int a = 0;
  int b = 0;
  int p = 0;
  bool a_defined = false;
  bool uniform = true;  // brute force only: pattern counts divide evenly
};

// Closed forms of the matrix families; exceptional pairs from tables of restricted roots.
inline Rab closed_form(const std::string& label) {
  if (label.rfind("sostar", 0) == 0) {
    const int n = std::stoi(label.substr(6)) / 2;
    const int r = n / 2;
    return {r, 4, n % 2 == 0 ? 0 : 2, 2 * n - 2, r > 1};
  }
  if (label.rfind("so2_", 0) == 0) {
    const int n = std::stoi(label.substr(4));
    return {2, n - 2, 0, n, true};
  }
  if (label.rfind("su", 0) == 0) {
    const int p = label[2] - '0';
    const int q = label[3] - '0';
    const int r = std::min(p, q);
    return {r, 2, std::abs(p - q), p + q, r > 1};
  }
  if (label.rfind("sp", 0) == 0) {
    const int n = std::stoi(label.substr(2));
    return {n, 1, 0, n + 1, n > 1};
  }
  if (label == "e3iii") return {2, 6, 4, 12, true};
  return {3, 8, 0, 18, true};  // e7vii
}

// Counts noncompact roots by their coroot values alpha(h_j) in {0, 1, 2}:
// two ones give a (gamma_j + gamma_k)/2 root, a single one a gamma_j/2 root.
inline Rab brute_force(const HermitianStructure& hs, const std::vector<Root>& gammas) {
  const auto& rs = hs.roots();
  const int r = static_cast<int>(gammas.size());
  int half_sum = 0;
  int half_gamma = 0;
  for (const Root& alpha : hs.partition().noncompact_pos) {
    int ones = 0;
    for (const Root& g : gammas) {
      if (2 * rs.inner(alpha, g) / rs.inner(g, g) == Rational(1)) ++ones;
    }
    if (ones == 2) ++half_sum;
    if (ones == 1) ++half_gamma;
  }
  const int pairs = r * (r - 1) / 2;
  Rab out;
  out.r = r;
  out.a = pairs > 0 ? half_sum / pairs : 0;
  out.b = half_gamma / r;
  out.p = (r - 1) * out.a + out.b + 2;
  out.a_defined = pairs > 0;
  out.uniform = (pairs == 0 || half_sum % pairs == 0) && half_gamma % r == 0;
  return out;
}

// rho and rho_n by summing positive roots, in simple-root coordinates.
inline std::pair<RationalVector, RationalVector> direct_rho(const HermitianStructure& hs) {
  const auto& rs = hs.roots();
  RationalVector rho(static_cast<std::size_t>(rs.rank()));
  RationalVector rho_n(static_cast<std::size_t>(rs.rank()));
  for (const Root& a : rs.positive_roots()) rho += Rational(1, 2) * a.to_vector();
  for (const Root& a : hs.partition().noncompact_pos) rho_n += Rational(1, 2) * a.to_vector();
  return {rho, rho_n};
}

}  // namespace hdt::testing
