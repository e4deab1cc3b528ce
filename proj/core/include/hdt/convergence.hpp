#pragma once

// The convergence integral
//   sum_s mult_s int prod_j (1 - x_j^2)^{E_{s,j}} P(x) dx,
//   E_{s,j} = -(Lambda^s + lambda Lambda_1)(h_j) - p,
// over the ordered simplex 0 <= x_1 <= ... <= x_r <= 1 - eps, its analytic
// classification and its numerical corroboration.
//
// Quadrature works in s = 1 - x, where 1 - x^2 = s (2 - s). The s-range is cut
// at geometric breakpoints eps * 2^m below each ladder value, and every
// nondecreasing tuple of cell indices is integrated with a tensor
// Gauss-Legendre rule; cells shared by several coordinates use the collapsed
// ordered-simplex map. Shell increments between ladder values are summed
// directly, never obtained by subtraction.

#include <optional>
#include <string>
#include <vector>

#include "hdt/weights.hpp"

namespace hdt {

inline constexpr int kMaxQuadratureRank = 4;

struct IntegralSpec {
  RestrictedData rd;
  std::vector<std::vector<Rational>> exponents;  // per weight s, per j
  std::vector<int> multiplicities;               // per weight, positive
  double epsilon = 1e-5;
  int order = 10;
};

/// Quadrature order used when none is given: 12 (r <= 2), 10 (r = 3), 8 (r = 4).
int default_order(int r);

IntegralSpec build_integrand(const PairAnalysis& pa, const KssWeightSystem& ws, const Rational& lambda);

/// min over s, j of E_{s,j}, exact.
Rational min_exponent(const IntegralSpec& spec);

struct IntegralEstimate {
  double value = 0.0;
  double error_bound = 0.0;  // |I_N - I_{N-4}|
};

/// Truncated integral at spec.epsilon. Throws DomainError for r above
/// kMaxQuadratureRank or eps outside (0, 1); NumericError on overflow.
IntegralEstimate integrate(const IntegralSpec& spec);

struct LadderValues {
  std::vector<double> eps;         // strictly decreasing
  std::vector<double> values;      // I(eps_k)
  std::vector<double> increments;  // I(eps_k) - I(eps_{k-1}), k >= 1, summed directly
};

LadderValues integrate_ladder(const IntegralSpec& spec, std::vector<double> eps_ladder);

enum class Convergence { kConvergent, kDivergent, kBoundaryIndeterminate };
std::string to_string(Convergence c);

struct ConvergenceOptions {
  std::vector<double> eps_ladder{1e-2, 1e-3, 1e-4, 1e-5};
  int order = 0;  // 0 selects default_order(r)
  bool analytic = true;
  double slope_tolerance = 0.02;
};

struct ConvergenceReport {
  Convergence classification = Convergence::kBoundaryIndeterminate;
  std::optional<Convergence> empirical;  // absent when r > kMaxQuadratureRank
  Rational analytic_min_exponent;
  std::vector<std::pair<double, double>> truncated_values;  // (eps, I(eps))
  double fitted_slope = 0.0;     // d log I / d log(1/eps)
  double increment_slope = 0.0;  // d log(shell increment) / d log(1/eps), about -(E_min + 1)
  std::optional<double> formal_dimension_scalar;
};

/// Analytic: convergent iff min E > -1. Empirical: sign of the increment
/// slope, indeterminate within the slope tolerance. With analytic disabled
/// the classification is the empirical one.
ConvergenceReport classify_convergence(const PairAnalysis& pa, const KssWeightSystem& ws, const Rational& lambda,
                                       const ConvergenceOptions& opts = {});

/// Bisection over lambda on the empirical classification alone, to width
/// 0.05. Throws ConfigError if no convergent lower bracket is found or
/// lambda = 0 is not divergent.
double empirical_threshold(const PairAnalysis& pa, const KssWeightSystem& ws, ConvergenceOptions opts = {});

/// Reported formal-dimension scalar for a convergent value: (k-1)/pi on the
/// disc (r = 1, b = 0), otherwise 1/I up to normalization.
double formal_dimension_scalar(const RestrictedData& rd, double integral);

}  // namespace hdt
