#pragma once

// Weights of the semisimple part of k: rho, rho_n, Lambda_1, weight systems
// of k_ss-irreducibles and the weight-bound lemma for the cascade.
//
// Weights live on the full Cartan of g in fundamental-weight coordinates. A
// highest weight Lambda_0 of k is extended by zero on the noncompact coroot.

#include <map>
#include <span>
#include <vector>

#include "hdt/cascade.hpp"

namespace hdt {

struct RhoVectors {
  WeightVector rho;    // half-sum of Delta^+
  WeightVector rho_n;  // half-sum of Delta_n^+
  WeightVector rho_c;  // half-sum of Delta_c^+
};

RhoVectors rho_vectors(const HermitianStructure& hs);

/// Fundamental weight dual to the noncompact node.
WeightVector lambda_one(const HermitianStructure& hs);

/// Lambda_0 from its coordinates on the compact simple coroots, given in the
/// order of HermitianPair::compact_nodes(). Throws DomainError on wrong length
/// or negative entries.
WeightVector lambda0_from_compact(const HermitianStructure& hs, std::span<const long> coords);

/// The j-th compact fundamental weight (0-based among compact nodes).
WeightVector compact_fundamental_weight(const HermitianStructure& hs, int j);

/// Throws DomainError unless lambda0 is integral, dominant on the compact
/// simple coroots and zero on the noncompact one.
void validate_lambda0(const HermitianStructure& hs, const WeightVector& lambda0);

struct KssWeightSystem {
  WeightVector highest;
  std::vector<WeightVector> weights;          // sorted, distinct
  std::map<WeightVector, int> multiplicities;  // empty unless requested
};

/// Saturates {lambda0} under full root strings of the compact simple roots.
KssWeightSystem weight_system(const HermitianStructure& hs, const WeightVector& lambda0,
                              bool with_multiplicities = false);

/// Multiplicity of mu by the Freudenthal recursion over Delta_c^+.
/// Throws DomainError if mu is not a weight of ws.
int freudenthal_multiplicity(const HermitianStructure& hs, const KssWeightSystem& ws, const WeightVector& mu);

/// Fills ws.multiplicities for every weight.
void fill_multiplicities(const HermitianStructure& hs, KssWeightSystem& ws);

struct WeightBoundReport {
  Rational bound;      // (Lambda_0 | gamma_r)
  Rational max_value;  // max over s, j of (Lambda^s | gamma_j)
  bool equality_at_top = false;
  int pairs_checked = 0;
  int dominance_checks = 0;
};

/// Exhaustive exact check of (Lambda^s | gamma_j) <= (Lambda_0 | gamma_r),
/// with the dominance step: for w in W_K making w Lambda^s dominant,
/// (w Lambda^s | w gamma_j) <= (w Lambda^s | gamma_r) <= (Lambda_0 | gamma_r)
/// and (Lambda_0 | w gamma_j) <= (Lambda_0 | gamma_r).
/// Throws StructuralError on any violation.
WeightBoundReport verify_weight_bound(const HermitianStructure& hs, const CascadeResult& cr,
                                      const KssWeightSystem& ws);

}  // namespace hdt
