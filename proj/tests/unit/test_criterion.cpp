#include <gtest/gtest.h>

#include <memory>

#include "hdt/criterion.hpp"
#include "hdt/errors.hpp"

using hdt::HighestWeightInput;
using hdt::Rational;
using hdt::RationalVector;
using hdt::WeightVector;

namespace {

std::shared_ptr<const hdt::PairAnalysis> load(const std::string& label) {
  return std::make_shared<const hdt::PairAnalysis>(hdt::analyze_pair(hdt::find_pair(label)));
}

WeightVector zero(const hdt::PairAnalysis& pa) {
  return WeightVector{RationalVector(static_cast<std::size_t>(pa.structure.roots().rank()))};
}

// (Lambda_0 + lambda Lambda_1 + rho)(h_gamma) < 0 for every noncompact positive gamma; rho is all ones.
bool brute_force_exists(const hdt::PairAnalysis& pa, const WeightVector& l0, const Rational& lambda) {
  const auto& rs = pa.structure.roots();
  WeightVector total = l0;
  for (std::size_t i = 0; i < total.coords.size(); ++i) total.coords[i] += Rational(1);
  total.coords[static_cast<std::size_t>(pa.structure.node())] += lambda;
  for (const auto& g : pa.structure.partition().noncompact_pos) {
    if (rs.coroot_pairing(total, g).sign() >= 0) return false;
  }
  return true;
}

}  // namespace

TEST(Criterion, DiscCase) {
  const auto pa = load("su11");
  EXPECT_EQ(hdt::hc_threshold(*pa, zero(*pa)), Rational(-1));
  EXPECT_TRUE(hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational(-2))).exists);
  const hdt::CriterionVerdict boundary = hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational(-1)));
  EXPECT_FALSE(boundary.exists);
  EXPECT_FALSE(boundary.original_form_exists);
  EXPECT_EQ(boundary.margin, Rational(0));
  EXPECT_EQ(boundary.witnesses.size(), 1u);
}

TEST(Criterion, SymplecticBoundaryIsExact) {
  const auto pa = load("sp2");
  EXPECT_EQ(hdt::hc_threshold(*pa, zero(*pa)), Rational(-2));
  EXPECT_FALSE(hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational::parse_decimal("-2.0"))).exists);
  EXPECT_TRUE(hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational::parse_decimal("-2.0001"))).exists);
}

TEST(Criterion, ThresholdWithCompactWeight) {
  const auto pa = load("su22");
  const WeightVector w = hdt::compact_fundamental_weight(pa->structure, 0);
  EXPECT_EQ(hdt::hc_threshold(*pa, w), Rational(-4));
  const auto e7 = load("e7vii");
  EXPECT_EQ(hdt::hc_threshold(*e7, zero(*e7)), Rational(-17));
}

TEST(Criterion, AgreesWithBruteForceOnGrid) {
  for (const auto& pair : hdt::catalog()) {
    const auto pa = load(pair.label);
    const int nc = static_cast<int>(pair.compact_nodes().size());
    std::vector<WeightVector> l0s{zero(*pa)};
    for (int j = 0; j < std::min(nc, 2); ++j) l0s.push_back(hdt::compact_fundamental_weight(pa->structure, j));
    for (const auto& l0 : l0s) {
      const Rational t = hdt::hc_threshold(*pa, l0);
      for (const Rational& d : {Rational(-3), Rational(-1), Rational(-1, 4), Rational(0), Rational(1, 4), Rational(1)}) {
        const HighestWeightInput in(pa, l0, t + d);
        const hdt::CriterionVerdict v = hdt::hc_condition(in);
        EXPECT_EQ(v.exists, brute_force_exists(*pa, l0, t + d)) << pair.label << " delta " << d;
        EXPECT_EQ(v.exists, hdt::hc_condition_original(in).holds);
        EXPECT_EQ(v.margin, -d);
      }
    }
  }
}

TEST(Criterion, MonotoneInLambda) {
  const auto pa = load("sostar10");
  const WeightVector l0 = hdt::compact_fundamental_weight(pa->structure, 1);
  bool seen_exists = false;
  for (int i = 0; i < 80; ++i) {
    const Rational lambda = Rational(-i, 7);
    const bool e = hdt::hc_condition(HighestWeightInput(pa, l0, lambda)).exists;
    if (seen_exists) {
      EXPECT_TRUE(e) << lambda;
    }
    seen_exists = seen_exists || e;
  }
  EXPECT_TRUE(seen_exists);
}

TEST(Criterion, IntegralityFlag) {
  const auto pa = load("su23");
  EXPECT_TRUE(hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational(-7))).lambda_integral);
  EXPECT_FALSE(hdt::hc_condition(HighestWeightInput(pa, zero(*pa), Rational(-15, 2))).lambda_integral);
}

TEST(Criterion, InvalidLambda0Rejected) {
  const auto pa = load("su23");
  EXPECT_THROW(HighestWeightInput(pa, WeightVector{RationalVector{0, 1, 0, 0}}, Rational(-9)), hdt::DomainError);
  EXPECT_THROW(HighestWeightInput(nullptr, zero(*pa), Rational(-9)), hdt::DomainError);
}

TEST(Criterion, ReductionTraceExpansions) {
  for (const char* label : {"su34", "sp4", "so2_9", "sostar12", "e3iii", "e7vii"}) {
    const auto pa = load(label);
    const auto& rs = pa->structure.roots();
    const WeightVector l0 = hdt::compact_fundamental_weight(pa->structure, 0);
    const auto trace = hdt::reduction_trace(HighestWeightInput(pa, l0, hdt::hc_threshold(*pa, l0) - 1));
    ASSERT_EQ(trace.size(), pa->structure.partition().noncompact_pos.size());
    for (const auto& step : trace) {
      hdt::Root rebuilt = rs.highest_root();
      for (int j = 0; j < rs.rank(); ++j) {
        EXPECT_GE(step.m[j], 0);
        for (int k = 0; k < rs.rank(); ++k) rebuilt.coeffs[k] -= step.m[j] * rs.simple_roots()[j].coeffs[k];
      }
      EXPECT_EQ(rebuilt, step.gamma) << label;
      EXPECT_EQ(step.m[pa->structure.node()], 0);
      EXPECT_GE(step.decrement.sign(), 0);
      EXPECT_EQ(step.inner_gamma, step.inner_top - step.decrement);
    }
  }
}
