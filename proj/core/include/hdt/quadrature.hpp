#pragma once

#include <vector>

namespace hdt {

/// Gauss-Legendre rule mapped to [0, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule; nodes from Newton iteration on P_n started at Chebyshev
/// guesses. Throws DomainError for n < 1.
GaussRule gauss_legendre(int n);

}  // namespace hdt
