#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "hdt/cascade.hpp"
#include "hdt/errors.hpp"
#include "../support/oracles.hpp"

using hdt::Rational;
using hdt::RationalVector;
using hdt::Root;

using hdt::testing::brute_force;
using hdt::testing::closed_form;
using hdt::testing::Rab;

TEST(Cascade, IsMaximalStronglyOrthogonalSet) {
  for (const auto& pair : hdt::catalog()) {
    const hdt::HermitianStructure hs(pair);
    const auto& rs = hs.roots();
    const hdt::CascadeResult cr = hdt::strongly_orthogonal_cascade(hs);
    ASSERT_EQ(static_cast<int>(cr.gammas.size()), cr.r);
    EXPECT_EQ(cr.gammas.back(), rs.highest_root()) << pair.label;
    for (std::size_t i = 0; i < cr.gammas.size(); ++i) {
      EXPECT_FALSE(hs.is_compact(cr.gammas[i]));
      for (std::size_t j = i + 1; j < cr.gammas.size(); ++j) {
        EXPECT_TRUE(hdt::strongly_orthogonal(rs, cr.gammas[i], cr.gammas[j]));
        EXPECT_EQ(rs.inner(cr.gammas[i], cr.gammas[j]), Rational(0));
      }
    }
    for (const Root& c : hs.partition().noncompact_pos) {
      bool orth_to_all = true;
      for (const Root& g : cr.gammas) orth_to_all = orth_to_all && hdt::strongly_orthogonal(rs, c, g);
      EXPECT_FALSE(orth_to_all) << pair.label << " could extend by " << c.to_string();
    }
  }
}

TEST(Cascade, RestrictedDataMatchesClosedFormsAndBruteForce) {
  for (const auto& pair : hdt::catalog()) {
    const hdt::PairAnalysis pa = hdt::analyze_pair(pair);
    const Rab want = closed_form(pair.label);
    const Rab brute = brute_force(pa.structure, pa.cascade.gammas);
    EXPECT_TRUE(brute.uniform) << pair.label;
    const auto& rd = pa.data;
    EXPECT_EQ(std::make_tuple(rd.r, rd.b, rd.p), std::make_tuple(want.r, want.b, want.p)) << pair.label;
    EXPECT_EQ(std::make_tuple(brute.r, brute.b, brute.p), std::make_tuple(want.r, want.b, want.p)) << pair.label;
    EXPECT_EQ(rd.a_defined, want.a_defined) << pair.label;
    if (want.a_defined) {
      EXPECT_EQ(rd.a, want.a) << pair.label;
      EXPECT_EQ(brute.a, want.a) << pair.label;
    }
    EXPECT_EQ(rd.p, (rd.r - 1) * rd.a + rd.b + 2);
    EXPECT_EQ(rd.noncompact_count, rd.r + rd.a * rd.r * (rd.r - 1) / 2 + rd.b * rd.r) << pair.label;
    EXPECT_EQ(rd.type, rd.r == 1 && rd.b == 0 ? hdt::RestrictedType::kA1Degenerate
                                              : (rd.b == 0 ? hdt::RestrictedType::kB : hdt::RestrictedType::kBC))
        << pair.label;
  }
}

TEST(Cascade, ExceptionalBookkeeping) {
  const hdt::PairAnalysis e7 = hdt::analyze_pair(hdt::find_pair("e7vii"));
  EXPECT_EQ(e7.data.noncompact_count, 27);
  EXPECT_EQ(27, 3 + 8 * 3 + 0);
  const hdt::PairAnalysis e6 = hdt::analyze_pair(hdt::find_pair("e3iii"));
  EXPECT_EQ(e6.data.noncompact_count, 2 + 6 + 4 * 2);
}

TEST(Cascade, RhoIdentitiesByDirectSummation) {
  for (const auto& pair : hdt::catalog()) {
    const hdt::PairAnalysis pa = hdt::analyze_pair(pair);
    const auto& rs = pa.structure.roots();
    const auto [rho, rho_n] = hdt::testing::direct_rho(pa.structure);
    const int p = pa.data.p;
    EXPECT_EQ(rs.cartan_integer(rho, pa.cascade.gammas.back()), Rational(p - 1)) << pair.label;
    for (const Root& g : pa.cascade.gammas) {
      EXPECT_EQ(2 * rs.cartan_integer(rho_n, g), Rational(p)) << pair.label;
    }
    const hdt::RhoIdentityReport rep = hdt::verify_rho_identities(pa.structure, pa.cascade, pa.data);
    EXPECT_EQ(rep.rho_h_r, Rational(p - 1));
    EXPECT_EQ(rep.two_rho_n_h_j.size(), pa.cascade.gammas.size());
  }
}

TEST(Cascade, ClassificationCoversEveryPositiveRoot) {
  const hdt::PairAnalysis pa = hdt::analyze_pair(hdt::find_pair("su23"));
  EXPECT_EQ(pa.data.classified.size(), pa.structure.roots().positive_roots().size());
  std::map<hdt::RestrictedPattern, int> noncompact;
  for (const auto& c : pa.data.classified) {
    if (!c.compact) ++noncompact[c.pattern];
  }
  EXPECT_EQ(noncompact[hdt::RestrictedPattern::kGamma], 2);
  EXPECT_EQ(noncompact[hdt::RestrictedPattern::kHalfSum], 2);
  EXPECT_EQ(noncompact[hdt::RestrictedPattern::kHalfGamma], 2);
}

TEST(Cascade, WeylPolynomial) {
  const hdt::PairAnalysis pa = hdt::analyze_pair(hdt::find_pair("su23"));  // r=2, a=2, b=1
  const double x[2] = {0.3, 0.7};
  const double want = std::pow(0.3, 3) * std::pow(0.7, 3) * std::pow(0.49 - 0.09, 2);
  EXPECT_NEAR(hdt::weyl_polynomial_P(pa.data, x), want, 1e-15);
  const double one[1] = {0.5};
  EXPECT_THROW(hdt::weyl_polynomial_P(pa.data, one), hdt::DomainError);
}
