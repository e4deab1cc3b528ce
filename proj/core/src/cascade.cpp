#include "hdt/cascade.hpp"

#include <algorithm>
#include <map>

#include "hdt/errors.hpp"

namespace hdt {

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  if (a == b) return false;
  return !rs.is_root(a + b) && !rs.is_root(a - b);
}

CascadeResult strongly_orthogonal_cascade(const HermitianStructure& hs) {
  const RootSystem& rs = hs.roots();
  std::vector<Root> chosen;
  std::vector<Root> candidates = hs.partition().noncompact_pos;

  while (!candidates.empty()) {
    // Dominance-maximal candidates; ties broken by lexicographic order.
    std::vector<Root> maximal;
    for (const auto& c : candidates) {
      const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                         [&c](const Root& d) { return d != c && dominates(d, c); });
      if (!dominated) maximal.push_back(c);
    }
    const Root top = *std::max_element(maximal.begin(), maximal.end());
    chosen.push_back(top);

    std::vector<Root> next;
    for (const auto& c : candidates) {
      if (strongly_orthogonal(rs, c, top)) next.push_back(c);
    }
    candidates = std::move(next);
  }

  std::reverse(chosen.begin(), chosen.end());
  CascadeResult out;
  out.r = static_cast<int>(chosen.size());
  out.gammas = std::move(chosen);
  return out;
}

RationalVector restricted_coefficients(const RootSystem& rs, const CascadeResult& cr, const Root& alpha) {
  RationalVector c(cr.gammas.size());
  for (std::size_t j = 0; j < cr.gammas.size(); ++j) {
    c[j] = rs.inner(alpha, cr.gammas[j]) / rs.squared_length(cr.gammas[j]);
  }
  return c;
}

std::string to_string(RestrictedType t) {
  switch (t) {
    case RestrictedType::kB:
      return "B";
    case RestrictedType::kBC:
      return "BC";
    case RestrictedType::kA1Degenerate:
      return "A1-degenerate";
  }
  return "?";
}

std::string to_string(RestrictedPattern p) {
  switch (p) {
    case RestrictedPattern::kGamma:
      return "gamma_j";
    case RestrictedPattern::kHalfSum:
      return "(gamma_j+gamma_k)/2";
    case RestrictedPattern::kHalfDiff:
      return "(gamma_j-gamma_k)/2";
    case RestrictedPattern::kHalfGamma:
      return "gamma_j/2";
    case RestrictedPattern::kZero:
      return "0";
  }
  return "?";
}

namespace {

ClassifiedRoot classify(const Root& alpha, bool compact, const RationalVector& c) {
  const Rational half(1, 2);
  std::vector<int> nz;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) nz.push_back(static_cast<int>(j));
  }
  auto bad = [&]() {
    return StructuralError("root " + alpha.to_string() + " restricts to disallowed pattern " + c.to_string());
  };

  if (nz.empty()) {
    if (!compact) throw bad();
    return {alpha, compact, RestrictedPattern::kZero, -1, -1};
  }
  if (nz.size() == 1) {
    const Rational& v = c[nz[0]];
    if (v == Rational(1) && !compact) return {alpha, compact, RestrictedPattern::kGamma, nz[0], -1};
    if (v == half || (compact && v == -half)) return {alpha, compact, RestrictedPattern::kHalfGamma, nz[0], -1};
    throw bad();
  }
  if (nz.size() == 2) {
    const Rational& u = c[nz[0]];
    const Rational& v = c[nz[1]];
    if (!compact && u == half && v == half) return {alpha, compact, RestrictedPattern::kHalfSum, nz[0], nz[1]};
    if (compact && ((u == half && v == -half) || (u == -half && v == half))) {
      return {alpha, compact, RestrictedPattern::kHalfDiff, nz[0], nz[1]};
    }
  }
  throw bad();
}

// Returns the common value of all counts, or throws if they differ.
int uniform_count(const std::map<std::pair<int, int>, int>& counts, int expected_keys, const char* what) {
  if (expected_keys == 0) return 0;
  int value = -1;
  for (const auto& [key, n] : counts) {
    if (value == -1) value = n;
    if (n != value) throw StructuralError(std::string("non-uniform multiplicity for ") + what);
  }
  if (value == -1) return 0;
  if (static_cast<int>(counts.size()) != expected_keys) {
    throw StructuralError(std::string("multiplicity for ") + what + " missing on some indices");
  }
  return value;
}

}  // namespace

RestrictedData restricted_root_data(const HermitianStructure& hs, const CascadeResult& cr) {
  const RootSystem& rs = hs.roots();
  RestrictedData rd;
  rd.r = cr.r;
  const int r = cr.r;

  std::map<std::pair<int, int>, int> gamma_count;
  std::map<std::pair<int, int>, int> sum_count;
  std::map<std::pair<int, int>, int> diff_count;
  std::map<std::pair<int, int>, int> half_n_count;
  std::map<std::pair<int, int>, int> half_c_count;

  for (const auto& alpha : rs.positive_roots()) {
    const bool compact = hs.is_compact(alpha);
    ClassifiedRoot cl = classify(alpha, compact, restricted_coefficients(rs, cr, alpha));
    switch (cl.pattern) {
      case RestrictedPattern::kGamma:
        ++gamma_count[{cl.j, -1}];
        break;
      case RestrictedPattern::kHalfSum:
        ++sum_count[{cl.j, cl.k}];
        break;
      case RestrictedPattern::kHalfDiff:
        ++diff_count[{cl.j, cl.k}];
        break;
      case RestrictedPattern::kHalfGamma:
        ++(compact ? half_c_count : half_n_count)[{cl.j, -1}];
        break;
      case RestrictedPattern::kZero:
        ++rd.compact_zero_count;
        break;
    }
    if (compact) {
      ++rd.compact_count;
    } else {
      ++rd.noncompact_count;
    }
    rd.classified.push_back(std::move(cl));
  }

  const int pairs = r * (r - 1) / 2;
  if (uniform_count(gamma_count, r, "gamma_j") != 1) throw StructuralError("gamma_j multiplicity is not 1");
  const int a_n = uniform_count(sum_count, pairs, "(gamma_j+gamma_k)/2");
  const int a_c = uniform_count(diff_count, pairs, "(gamma_j-gamma_k)/2");
  const int b_n = half_n_count.empty() ? 0 : uniform_count(half_n_count, r, "gamma_j/2 (noncompact)");
  const int b_c = half_c_count.empty() ? 0 : uniform_count(half_c_count, r, "gamma_j/2 (compact)");
  if (a_n != a_c) throw StructuralError("compact and noncompact multiplicities a differ");
  if (b_n != b_c) throw StructuralError("compact and noncompact multiplicities b differ");

  rd.a_defined = r >= 2;
  rd.a = rd.a_defined ? a_n : 0;
  rd.b = b_n;
  rd.p = (r - 1) * rd.a + rd.b + 2;
  if (rd.b > 0) {
    rd.type = RestrictedType::kBC;
  } else if (r >= 2) {
    rd.type = RestrictedType::kB;
  } else {
    rd.type = RestrictedType::kA1Degenerate;
  }

  if (rd.noncompact_count != r + rd.a * pairs + rd.b * r) {
    throw StructuralError("noncompact dimension bookkeeping fails");
  }
  if (rd.compact_count != rd.a * pairs + rd.b * r + rd.compact_zero_count) {
    throw StructuralError("compact dimension bookkeeping fails");
  }
  return rd;
}

RestrictedData restricted_root_data(const HermitianStructure& hs) {
  return restricted_root_data(hs, strongly_orthogonal_cascade(hs));
}

RhoIdentityReport verify_rho_identities(const HermitianStructure& hs, const CascadeResult& cr,
                                        const RestrictedData& rd) {
  const RootSystem& rs = hs.roots();
  RationalVector rho(rs.rank());
  RationalVector rho_n(rs.rank());
  for (const auto& a : rs.positive_roots()) rho += a.to_vector();
  for (const auto& a : hs.partition().noncompact_pos) rho_n += a.to_vector();
  rho *= Rational(1, 2);
  rho_n *= Rational(1, 2);

  RhoIdentityReport rep;
  rep.p = rd.p;
  rep.rho_h_r = rs.cartan_integer(rho, cr.gammas.back());
  if (rep.rho_h_r != Rational(rd.p - 1)) {
    throw StructuralError("rho(h_r) = " + rep.rho_h_r.to_string() + " but p - 1 = " + std::to_string(rd.p - 1));
  }
  const WeightVector lambda1 = rs.fundamental_weight(hs.node());
  rep.lambda1_h_alpha1 = rs.coroot_pairing(lambda1, rs.simple_roots()[hs.node()]);
  for (std::size_t j = 0; j < cr.gammas.size(); ++j) {
    const Rational v = Rational(2) * rs.cartan_integer(rho_n, cr.gammas[j]);
    rep.two_rho_n_h_j.push_back(v);
    if (v != Rational(rd.p)) {
      throw StructuralError("2 rho_n(h_" + std::to_string(j + 1) + ") = " + v.to_string() + " but p = " +
                            std::to_string(rd.p));
    }
    rep.lambda1_h_j.push_back(rs.coroot_pairing(lambda1, cr.gammas[j]));
    if (rep.lambda1_h_j.back() != Rational(1)) throw StructuralError("Lambda_1(h_j) != 1");
  }
  return rep;
}

namespace {

double ipow(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

}  // namespace

double weyl_polynomial_P(const RestrictedData& rd, std::span<const double> x) {
  if (static_cast<int>(x.size()) != rd.r) throw DomainError("weyl_polynomial_P: expected " + std::to_string(rd.r) + " coordinates");
  double out = 1.0;
  for (int j = 0; j < rd.r; ++j) out *= ipow(x[j], 2 * rd.b + 1);
  if (rd.a_defined) {
    for (int j = 0; j < rd.r; ++j) {
      for (int k = j + 1; k < rd.r; ++k) out *= ipow(x[k] * x[k] - x[j] * x[j], rd.a);
    }
  }
  return out;
}

PairAnalysis analyze_pair(const HermitianPair& pair) {
  HermitianStructure hs(pair);
  CascadeResult cr = strongly_orthogonal_cascade(hs);
  RestrictedData rd = restricted_root_data(hs, cr);
  return PairAnalysis{std::move(hs), std::move(cr), std::move(rd)};
}

}  // namespace hdt
