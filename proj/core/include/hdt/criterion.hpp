#pragma once

// Existence of the holomorphic discrete series with highest weight
// Lambda = Lambda_0 + lambda Lambda_1, in the single-inequality form
// lambda < 1 - p - Lambda_0(h_r) and in the root-by-root original form.

#include <memory>
#include <vector>

#include "hdt/weights.hpp"

namespace hdt {

class HighestWeightInput {
 public:
  /// Validates lambda0 (DomainError on failure).
  HighestWeightInput(std::shared_ptr<const PairAnalysis> analysis, WeightVector lambda0, Rational lambda);

  [[nodiscard]] const PairAnalysis& analysis() const { return *analysis_; }
  [[nodiscard]] const WeightVector& lambda0() const { return lambda0_; }
  [[nodiscard]] const Rational& lambda() const { return lambda_; }

 private:
  std::shared_ptr<const PairAnalysis> analysis_;
  WeightVector lambda0_;
  Rational lambda_;
};

struct OriginalForm {
  bool holds = false;
  std::vector<Root> witnesses;  // gamma in Delta_n^+ with (Lambda+rho)(h_gamma) >= 0
  std::vector<Rational> values;  // (Lambda+rho)(h_gamma), in Delta_n^+ order
};

struct CriterionVerdict {
  bool exists = false;
  Rational threshold;  // 1 - p - Lambda_0(h_r)
  Rational margin;     // threshold - lambda
  bool original_form_exists = false;
  std::vector<Root> witnesses;
  bool lambda_integral = false;  // advisory: single-valued on linear groups
};

/// Threshold 1 - p - Lambda_0(h_r), exact.
Rational hc_threshold(const PairAnalysis& pa, const WeightVector& lambda0);

/// Single-inequality verdict, cross-checked against the original form.
/// Throws StructuralError if the two disagree.
CriterionVerdict hc_condition(const HighestWeightInput& input);

/// (Lambda_0 + lambda Lambda_1 + rho)(h_gamma) < 0 for all gamma in Delta_n^+.
OriginalForm hc_condition_original(const HighestWeightInput& input);

struct ReductionStep {
  Root gamma;
  std::vector<int> m;   // gamma = gamma_r - sum_j m_j alpha_j
  Rational inner_gamma;  // (Lambda+rho | gamma)
  Rational inner_top;    // (Lambda+rho | gamma_r)
  Rational decrement;    // sum_j m_j (Lambda_0+rho | alpha_j) >= 0
};

/// For every gamma in Delta_n^+: the expansion gamma = gamma_r - sum m_j alpha_j
/// over compact simple roots with m_j >= 0, and the exact chain
/// (Lambda+rho|gamma) = (Lambda+rho|gamma_r) - decrement <= (Lambda+rho|gamma_r).
/// Throws StructuralError if any expansion or chain fails.
std::vector<ReductionStep> reduction_trace(const HighestWeightInput& input);

}  // namespace hdt
