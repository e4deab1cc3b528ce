#pragma once

// Harish-Chandra's cascade of strongly orthogonal noncompact roots and the
// restricted-root data (r, a, b) with the genus p = (r-1)a + b + 2.

#include <span>
#include <string>
#include <vector>

#include "hdt/hermitian.hpp"

namespace hdt {

struct CascadeResult {
  std::vector<Root> gammas;  // gamma_1 .. gamma_r, gamma_r the highest noncompact root
  int r = 0;
};

/// True when neither a+b nor a-b is a root (and a != b).
bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);

/// Greedy descent from the highest noncompact root: each step takes the
/// dominance-maximal noncompact root strongly orthogonal to all chosen ones
/// (lexicographically largest among incomparable candidates).
CascadeResult strongly_orthogonal_cascade(const HermitianStructure& hs);

/// c_j = (alpha|gamma_j) / (gamma_j|gamma_j), the restricted root in the gamma basis.
RationalVector restricted_coefficients(const RootSystem& rs, const CascadeResult& cr, const Root& alpha);

enum class RestrictedType { kB, kBC, kA1Degenerate };
std::string to_string(RestrictedType t);

/// Which restricted root a positive root lands on.
enum class RestrictedPattern {
  kGamma,      // e_j
  kHalfSum,    // (e_j + e_k)/2
  kHalfDiff,   // +-(e_j - e_k)/2
  kHalfGamma,  // +-e_j/2
  kZero,
};
std::string to_string(RestrictedPattern p);

struct ClassifiedRoot {
  Root root;
  bool compact;
  RestrictedPattern pattern;
  int j;  // first gamma index involved (0-based), -1 for kZero
  int k;  // second index for kHalfSum/kHalfDiff, -1 otherwise
};

struct RestrictedData {
  int r = 0;
  int a = 0;  // 0 with a_defined == false when r == 1
  bool a_defined = false;
  int b = 0;
  int p = 0;
  RestrictedType type = RestrictedType::kA1Degenerate;
  int compact_zero_count = 0;  // compact positive roots orthogonal to every gamma_j
  int noncompact_count = 0;
  int compact_count = 0;
  std::vector<ClassifiedRoot> classified;
};

/// Classifies every positive root, verifies uniform multiplicities and the
/// dimension bookkeeping. Throws StructuralError on any disallowed pattern.
RestrictedData restricted_root_data(const HermitianStructure& hs, const CascadeResult& cr);
RestrictedData restricted_root_data(const HermitianStructure& hs);

struct RhoIdentityReport {
  int p = 0;
  Rational rho_h_r;                     // should equal p - 1
  std::vector<Rational> two_rho_n_h_j;  // each should equal p
  Rational lambda1_h_alpha1;            // 1
  std::vector<Rational> lambda1_h_j;    // each 1
};

/// Checks rho(h_r) = p - 1 and 2 rho_n(h_j) = p for all j exactly.
/// Throws StructuralError if either fails.
RhoIdentityReport verify_rho_identities(const HermitianStructure& hs, const CascadeResult& cr,
                                        const RestrictedData& rd);

/// P(x) = prod_j x_j^(2b+1) prod_{j<k} (x_k^2 - x_j^2)^a.
double weyl_polynomial_P(const RestrictedData& rd, std::span<const double> x);

/// Everything the analyze report needs for one pair.
struct PairAnalysis {
  HermitianStructure structure;
  CascadeResult cascade;
  RestrictedData data;
};
PairAnalysis analyze_pair(const HermitianPair& pair);

}  // namespace hdt
