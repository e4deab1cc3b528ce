#pragma once

// U(p,q) acting on p x q matrices z with |z| < 1 by (Az + B)(Cz + D)^{-1}.
// g exp(z) is factored as exp(w) k p^- with w = gz and k = diag(k_plus, k_minus)
// the canonical automorphy factor J(g, z). The invariant form is
// eta = diag(I_p, -I_q).

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hdt {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

class BlockMatrixElement {
 public:
  /// Throws DomainError on a size mismatch; membership in U(p,q) is not
  /// enforced here (see unitarity_residual).
  BlockMatrixElement(CMatrix g, int p, int q);

  [[nodiscard]] const CMatrix& matrix() const { return g_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] CMatrix A() const { return g_.topLeftCorner(p_, p_); }
  [[nodiscard]] CMatrix B() const { return g_.topRightCorner(p_, q_); }
  [[nodiscard]] CMatrix C() const { return g_.bottomLeftCorner(q_, p_); }
  [[nodiscard]] CMatrix D() const { return g_.bottomRightCorner(q_, q_); }

  /// max |g* eta g - eta|.
  [[nodiscard]] double unitarity_residual() const;
  [[nodiscard]] BlockMatrixElement inverse() const;

  friend BlockMatrixElement operator*(const BlockMatrixElement& a, const BlockMatrixElement& b);

 private:
  CMatrix g_;
  int p_;
  int q_;
};

/// Throws DomainError unless z is p x q with spectral norm < 1.
void validate_domain_point(const CMatrix& z, int p, int q);

struct FactorizationResult {
  CMatrix w;        // g z
  CMatrix k_plus;   // p x p
  CMatrix k_minus;  // q x q
  CMatrix y;        // q x p, the P^- part
  double residual;  // reassembly error against g exp(z)
};

/// Throws DomainError when D' = Cz + D is singular (outside the open cell).
FactorizationResult hc_factorize(const BlockMatrixElement& g, const CMatrix& z);
CMatrix mobius_action(const BlockMatrixElement& g, const CMatrix& z);

struct AutomorphyFactor {
  CMatrix k_plus;
  CMatrix k_minus;
};
AutomorphyFactor automorphy_factor(const BlockMatrixElement& g, const CMatrix& z);

/// max of the relative errors of J(g g1, z) = J(g, g1 z) J(g1, z) in both blocks.
double cocycle_residual(const BlockMatrixElement& g, const BlockMatrixElement& g1, const CMatrix& z);

/// a(t): cosh t_j on (j, j) and (p+j, p+j), sinh t_j on (j, p+j) and (p+j, j).
BlockMatrixElement a_of_t(int p, int q, std::span<const double> t);
/// blockdiag(u, v).
BlockMatrixElement block_diagonal(const CMatrix& u, const CMatrix& v);
/// [[I, u], [0, I]].
BlockMatrixElement translation(const CMatrix& u);

/// max-abs residual of exp t(e+f) = exp(tanh t e) exp(-log cosh t h) exp(tanh t f)
/// in 2 x 2 matrices, both sides scaled by e^{-|t|}.
double verify_sl2_identity(double t);

struct JacobianCheck {
  double finite_difference;  // det of the central-difference derivative at 0
  double formula;            // prod (1 - tanh^2 t_j)^{(p+q)/2}
  double from_factor;        // |det(k_plus)^q det(k_minus)^{-p}|
  double residual;           // max relative deviation from formula
};

/// Complex Jacobian of z -> a(t) z at the origin, step 1e-5.
JacobianCheck jacobian_at_origin(int p, int q, std::span<const double> t);

/// det(I_p - z w*).
cplx h_polynomial(const CMatrix& z, const CMatrix& w);

/// Relative residual of h(gz, gz)^n = h(z, z)^n / |m|^2 with m = det(k_minus)^n.
double verify_Q_transformation(const BlockMatrixElement& g, const CMatrix& z, int n);

struct QSignCheck {
  double q_value;        // |Jac_{a(t)}(0)|^{-2}, Q from the multiplier identity with m = Jacobian
  double minus_p;        // prod (1 - x_j^2)^{-(p+q)}
  double plus_p;         // prod (1 - x_j^2)^{+(p+q)}
  double minus_residual;
  double plus_residual;
};

/// Q(a(t) 0) computed from Q(gz) = |m(g,z)|^{-2} Q(z), Q(0) = 1, m = Jacobian,
/// compared with both signs of the exponent.
QSignCheck q_exponent_at_origin(int p, int q, std::span<const double> t);

/// Scalar kernel K(z, w) = h(z, w)^{-k}.
cplx kernel(const CMatrix& z, const CMatrix& w, int k);

/// Relative residual of K(gz, gw) = m(g,z) K(z,w) conj(m(g,w)), m = det(k_minus)^k.
double verify_kernel_transformation(const BlockMatrixElement& g, const CMatrix& z, const CMatrix& w, int k);

struct CayleyCheck {
  double conjugation_residual;  // max |Ad(c) X_j - s_j h_j|
  double off_diagonal;          // largest off-diagonal entry of any Ad(c) X_j
  double centralizer_residual;  // Ad(c) Z - Z for Z commuting with every Y_j
  std::vector<int> signs;       // s_j
};

/// c = exp((pi/4) sum_j Y_j), Y_j = E_{j,p+j} - E_{p+j,j}, X_j = E_{j,p+j} + E_{p+j,j},
/// h_j = E_jj - E_{p+j,p+j}, j < min(p, q).
CayleyCheck cayley_verify(int p, int q);

/// g = k1 a(t) k2 in SU(p,q) with Haar-like unitary blocks and t in [-tmax, tmax].
BlockMatrixElement random_su(int p, int q, std::mt19937_64& rng, double tmax = 1.0);
/// z = radius * Z / |Z| with Z complex Gaussian and radius uniform in [0, rmax].
CMatrix random_domain_point(int p, int q, std::mt19937_64& rng, double rmax = 0.9);

struct MonteCarloEstimate {
  cplx value;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// ((k-1)/pi) int_D f(z) (1 - w conj z)^{-k} (1 - |z|^2)^{k-2} dA(z) for
/// f(z) = sum_m coeffs[m] z^m, by uniform samples on the disc.
MonteCarloEstimate verify_reproducing_kernel_disc(int k, std::span<const cplx> coeffs, cplx w,
                                                  std::size_t samples, std::uint64_t seed);

struct NormPair {
  MonteCarloEstimate original;     // ((k-1)/pi) int |f|^2 (1-|z|^2)^{k-2}
  MonteCarloEstimate transformed;  // same for U_g f = (cz+d)^{-k} f(g^{-1} z), g^{-1} = [[a,b],[c,d]]
};

/// Weight-k multiplier action on SU(1,1); both norms from the same samples.
NormPair unitarity_disc(int k, std::span<const cplx> coeffs, const BlockMatrixElement& g, std::size_t samples,
                        std::uint64_t seed);

struct MeasurePair {
  MonteCarloEstimate direct;  // int F dnu
  MonteCarloEstimate moved;   // int F(g z) dnu
};

/// dnu = (1 - |z|^2)^{-2} dA on the disc, F = (1 - |z|^2)^3.
MeasurePair invariant_measure_disc(const BlockMatrixElement& g, std::size_t samples, std::uint64_t seed);

}  // namespace hdt
