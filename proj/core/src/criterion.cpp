#include "hdt/criterion.hpp"

#include "hdt/errors.hpp"

namespace hdt {

HighestWeightInput::HighestWeightInput(std::shared_ptr<const PairAnalysis> analysis, WeightVector lambda0,
                                       Rational lambda)
    : analysis_(std::move(analysis)), lambda0_(std::move(lambda0)), lambda_(std::move(lambda)) {
  if (!analysis_) throw DomainError("missing pair analysis");
  validate_lambda0(analysis_->structure, lambda0_);
}

namespace {

// Lambda_0 + lambda Lambda_1 + rho in fundamental coordinates; rho is all ones.
WeightVector shifted_weight(const HighestWeightInput& in) {
  const HermitianStructure& hs = in.analysis().structure;
  WeightVector w = in.lambda0();
  for (auto i = 0u; i < w.coords.size(); ++i) w.coords[i] += Rational(1);
  w.coords[hs.node()] += in.lambda();
  return w;
}

}  // namespace

Rational hc_threshold(const PairAnalysis& pa, const WeightVector& lambda0) {
  const Rational top = pa.structure.roots().coroot_pairing(lambda0, pa.cascade.gammas.back());
  return Rational(1 - pa.data.p) - top;
}

OriginalForm hc_condition_original(const HighestWeightInput& input) {
  const RootSystem& rs = input.analysis().structure.roots();
  const WeightVector w = shifted_weight(input);
  OriginalForm out;
  out.holds = true;
  for (const auto& gamma : input.analysis().structure.partition().noncompact_pos) {
    Rational v = rs.coroot_pairing(w, gamma);
    if (v.sign() >= 0) {
      out.holds = false;
      out.witnesses.push_back(gamma);
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

CriterionVerdict hc_condition(const HighestWeightInput& input) {
  CriterionVerdict v;
  v.threshold = hc_threshold(input.analysis(), input.lambda0());
  v.margin = v.threshold - input.lambda();
  v.exists = input.lambda() < v.threshold;
  v.lambda_integral = input.lambda().is_integer();

  OriginalForm orig = hc_condition_original(input);
  v.original_form_exists = orig.holds;
  v.witnesses = std::move(orig.witnesses);
  if (v.exists != v.original_form_exists) {
    throw StructuralError("single inequality and original form disagree at lambda = " + input.lambda().to_string());
  }
  return v;
}

std::vector<ReductionStep> reduction_trace(const HighestWeightInput& input) {
  const HermitianStructure& hs = input.analysis().structure;
  const RootSystem& rs = hs.roots();
  const Root& top = input.analysis().cascade.gammas.back();
  const WeightVector w = shifted_weight(input);

  WeightVector w0 = input.lambda0();
  for (auto i = 0u; i < w0.coords.size(); ++i) w0.coords[i] += Rational(1);

  const Rational inner_top = rs.inner(w, top);
  std::vector<ReductionStep> out;
  for (const auto& gamma : hs.partition().noncompact_pos) {
    ReductionStep step;
    step.gamma = gamma;
    const Root diff = top - gamma;
    step.m = diff.coeffs;
    if (step.m[hs.node()] != 0) throw StructuralError("expansion of " + gamma.to_string() + " uses the noncompact node");
    for (int j = 0; j < rs.rank(); ++j) {
      if (step.m[j] < 0) throw StructuralError("expansion of " + gamma.to_string() + " has a negative coefficient");
      if (step.m[j] > 0) step.decrement += Rational(step.m[j]) * rs.inner(w0, rs.simple_roots()[j]);
    }
    step.inner_gamma = rs.inner(w, gamma);
    step.inner_top = inner_top;
    if (step.decrement.sign() < 0 || step.inner_gamma != step.inner_top - step.decrement) {
      throw StructuralError("monotonicity chain fails at " + gamma.to_string());
    }
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace hdt
