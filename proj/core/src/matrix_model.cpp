#include "hdt/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hdt/errors.hpp"

namespace hdt {

namespace {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double rel_err(const CMatrix& a, const CMatrix& b) { return max_abs(a - b) / std::max(1.0, max_abs(a)); }

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

CMatrix eta(int p, int q) {
  CMatrix e = CMatrix::Identity(p + q, p + q);
  e.bottomRightCorner(q, q) *= -1.0;
  return e;
}

cplx ipow(cplx z, int n) {
  cplx out = 1.0;
  const cplx base = n < 0 ? 1.0 / z : z;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

CMatrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(n01(rng), n01(rng));
  }
  return m;
}

CMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  const CMatrix g = gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix u = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) u.col(j) *= r(j, j) / a;
  }
  const cplx d = u.determinant();
  u /= std::pow(d, 1.0 / n);
  return u;
}

// Uniform point of the open unit disc by rejection from the square.
cplx disc_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const cplx z(u(rng), u(rng));
    if (std::norm(z) < 1.0) return z;
  }
}

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

struct Accumulator {
  cplx sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(cplx v) {
    sum += v;
    sum_sq += std::norm(v);
    ++n;
  }
  [[nodiscard]] MonteCarloEstimate result(double scale, std::uint64_t seed) const {
    const double dn = static_cast<double>(n);
    const cplx mean = sum / dn;
    const double var = std::max(0.0, sum_sq / dn - std::norm(mean));
    return {scale * mean, scale * std::sqrt(var / dn), n, seed};
  }
};

}  // namespace

BlockMatrixElement::BlockMatrixElement(CMatrix g, int p, int q) : g_(std::move(g)), p_(p), q_(q) {
  if (p < 1 || q < 1 || g_.rows() != p + q || g_.cols() != p + q) {
    throw DomainError("block matrix must be (p+q) x (p+q) with p, q >= 1");
  }
}

double BlockMatrixElement::unitarity_residual() const {
  const CMatrix e = eta(p_, q_);
  return max_abs(g_.adjoint() * e * g_ - e);
}

BlockMatrixElement BlockMatrixElement::inverse() const { return {g_.inverse(), p_, q_}; }

BlockMatrixElement operator*(const BlockMatrixElement& a, const BlockMatrixElement& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_) throw DomainError("signature mismatch in product");
  return {a.g_ * b.g_, a.p_, a.q_};
}

void validate_domain_point(const CMatrix& z, int p, int q) {
  if (z.rows() != p || z.cols() != q) throw DomainError("domain point must be p x q");
  const Eigen::JacobiSVD<CMatrix> svd(z);
  if (svd.singularValues().size() > 0 && svd.singularValues()(0) >= 1.0) {
    throw DomainError("domain point has spectral norm >= 1");
  }
}

FactorizationResult hc_factorize(const BlockMatrixElement& g, const CMatrix& z) {
  const int p = g.p();
  const int q = g.q();
  if (z.rows() != p || z.cols() != q) throw DomainError("domain point must be p x q");

  const CMatrix a1 = g.A();
  const CMatrix b1 = g.A() * z + g.B();
  const CMatrix c1 = g.C();
  const CMatrix d1 = g.C() * z + g.D();

  const Eigen::PartialPivLU<CMatrix> lu(d1);
  if (!(lu.rcond() > 1e-14)) throw DomainError("g exp(z) lies outside the open cell P+ K P-");
  const CMatrix d1_inv = lu.inverse();

  FactorizationResult out;
  out.w = b1 * d1_inv;
  out.k_minus = d1;
  out.k_plus = a1 - b1 * d1_inv * c1;
  out.y = d1_inv * c1;

  CMatrix m(p + q, p + q);
  m << a1, b1, c1, d1;
  CMatrix rebuilt(p + q, p + q);
  rebuilt << out.k_plus + out.w * out.k_minus * out.y, out.w * out.k_minus, out.k_minus * out.y, out.k_minus;
  out.residual = max_abs(rebuilt - m) / std::max(1.0, max_abs(m));
  return out;
}

CMatrix mobius_action(const BlockMatrixElement& g, const CMatrix& z) { return hc_factorize(g, z).w; }

AutomorphyFactor automorphy_factor(const BlockMatrixElement& g, const CMatrix& z) {
  FactorizationResult f = hc_factorize(g, z);
  return {std::move(f.k_plus), std::move(f.k_minus)};
}

double cocycle_residual(const BlockMatrixElement& g, const BlockMatrixElement& g1, const CMatrix& z) {
  const AutomorphyFactor lhs = automorphy_factor(g * g1, z);
  const FactorizationResult inner = hc_factorize(g1, z);
  const AutomorphyFactor outer = automorphy_factor(g, inner.w);
  return std::max(rel_err(lhs.k_plus, outer.k_plus * inner.k_plus),
                  rel_err(lhs.k_minus, outer.k_minus * inner.k_minus));
}

BlockMatrixElement a_of_t(int p, int q, std::span<const double> t) {
  if (static_cast<int>(t.size()) > std::min(p, q)) throw DomainError("a(t) needs at most min(p, q) parameters");
  CMatrix g = CMatrix::Identity(p + q, p + q);
  for (std::size_t j = 0; j < t.size(); ++j) {
    const int i = static_cast<int>(j);
    g(i, i) = std::cosh(t[j]);
    g(p + i, p + i) = std::cosh(t[j]);
    g(i, p + i) = std::sinh(t[j]);
    g(p + i, i) = std::sinh(t[j]);
  }
  return {std::move(g), p, q};
}

BlockMatrixElement block_diagonal(const CMatrix& u, const CMatrix& v) {
  const auto p = u.rows();
  const auto q = v.rows();
  CMatrix g = CMatrix::Zero(p + q, p + q);
  g.topLeftCorner(p, p) = u;
  g.bottomRightCorner(q, q) = v;
  return {std::move(g), static_cast<int>(p), static_cast<int>(q)};
}

BlockMatrixElement translation(const CMatrix& u) {
  const auto p = u.rows();
  const auto q = u.cols();
  CMatrix g = CMatrix::Identity(p + q, p + q);
  g.topRightCorner(p, q) = u;
  return {std::move(g), static_cast<int>(p), static_cast<int>(q)};
}

double verify_sl2_identity(double t) {
  const double at = std::abs(t);
  const double decay = std::exp(-2.0 * at);
  // cosh t, sinh t, sech t times e^{-|t|}.
  const double ch = 0.5 * (1.0 + decay);
  const double sh = std::copysign(0.5 * (1.0 - decay), t);
  const double sech = 2.0 * decay / (1.0 + decay);
  const double th = std::tanh(t);

  Eigen::Matrix2d lhs;
  lhs << ch, sh, sh, ch;
  Eigen::Matrix2d upper;
  upper << 1.0, th, 0.0, 1.0;
  Eigen::Matrix2d torus;
  torus << sech, 0.0, 0.0, ch;
  Eigen::Matrix2d lower;
  lower << 1.0, 0.0, th, 1.0;
  return (lhs - upper * torus * lower).cwiseAbs().maxCoeff();
}

JacobianCheck jacobian_at_origin(int p, int q, std::span<const double> t) {
  const BlockMatrixElement g = a_of_t(p, q, t);
  const int n = p * q;
  const double h = 1e-5;
  CMatrix jac(n, n);
  for (int c = 0; c < n; ++c) {
    CMatrix dz = CMatrix::Zero(p, q);
    dz(c / q, c % q) = h;
    const CMatrix diff = (mobius_action(g, dz) - mobius_action(g, -dz)) / (2.0 * h);
    for (int r = 0; r < n; ++r) jac(r, c) = diff(r / q, r % q);
  }

  JacobianCheck out;
  out.finite_difference = std::abs(jac.determinant());
  out.formula = 1.0;
  for (double tj : t) {
    const double x = std::tanh(tj);
    out.formula *= std::pow(1.0 - x * x, 0.5 * (p + q));
  }
  const AutomorphyFactor j0 = automorphy_factor(g, CMatrix::Zero(p, q));
  out.from_factor = std::abs(ipow(j0.k_plus.determinant(), q) * ipow(j0.k_minus.determinant(), -p));
  out.residual = std::max(std::abs(out.finite_difference - out.formula), std::abs(out.from_factor - out.formula)) /
                 out.formula;
  return out;
}

cplx h_polynomial(const CMatrix& z, const CMatrix& w) {
  if (z.rows() != w.rows() || z.cols() != w.cols()) throw DomainError("h(z, w) needs equal shapes");
  return (CMatrix::Identity(z.rows(), z.rows()) - z * w.adjoint()).determinant();
}

double verify_Q_transformation(const BlockMatrixElement& g, const CMatrix& z, int n) {
  const FactorizationResult f = hc_factorize(g, z);
  const cplx m = ipow(f.k_minus.determinant(), n);
  const cplx lhs = ipow(h_polynomial(f.w, f.w), n);
  const cplx rhs = ipow(h_polynomial(z, z), n) / std::norm(m);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

QSignCheck q_exponent_at_origin(int p, int q, std::span<const double> t) {
  const JacobianCheck j = jacobian_at_origin(p, q, t);
  QSignCheck out;
  out.q_value = 1.0 / (j.from_factor * j.from_factor);
  out.minus_p = 1.0;
  out.plus_p = 1.0;
  for (double tj : t) {
    const double x = std::tanh(tj);
    out.minus_p *= std::pow(1.0 - x * x, -(p + q));
    out.plus_p *= std::pow(1.0 - x * x, p + q);
  }
  out.minus_residual = std::abs(out.q_value - out.minus_p) / out.minus_p;
  out.plus_residual = std::abs(out.q_value - out.plus_p) / out.plus_p;
  return out;
}

cplx kernel(const CMatrix& z, const CMatrix& w, int k) { return ipow(h_polynomial(z, w), -k); }

double verify_kernel_transformation(const BlockMatrixElement& g, const CMatrix& z, const CMatrix& w, int k) {
  const FactorizationResult fz = hc_factorize(g, z);
  const FactorizationResult fw = hc_factorize(g, w);
  const cplx mz = ipow(fz.k_minus.determinant(), k);
  const cplx mw = ipow(fw.k_minus.determinant(), k);
  return rel_err(kernel(fz.w, fw.w, k), mz * kernel(z, w, k) * std::conj(mw));
}

CayleyCheck cayley_verify(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("cayley_verify needs p, q >= 1");
  const int n = p + q;
  const int r = std::min(p, q);
  const double c = std::cos(std::numbers::pi / 4);
  const double s = std::sin(std::numbers::pi / 4);

  // The Y_j commute and each generates a rotation of the (j, p+j) plane.
  Eigen::MatrixXd cay = Eigen::MatrixXd::Identity(n, n);
  for (int j = 0; j < r; ++j) {
    cay(j, j) = c;
    cay(p + j, p + j) = c;
    cay(j, p + j) = s;
    cay(p + j, j) = -s;
  }
  const Eigen::MatrixXd cay_inv = cay.transpose();

  CayleyCheck out{0.0, 0.0, 0.0, {}};
  for (int j = 0; j < r; ++j) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    x(j, p + j) = 1.0;
    x(p + j, j) = 1.0;
    const Eigen::MatrixXd img = cay * x * cay_inv;
    const int sign = img(j, j) >= 0.0 ? 1 : -1;
    Eigen::MatrixXd hj = Eigen::MatrixXd::Zero(n, n);
    hj(j, j) = sign;
    hj(p + j, p + j) = -sign;
    out.signs.push_back(sign);
    out.conjugation_residual = std::max(out.conjugation_residual, (img - hj).cwiseAbs().maxCoeff());
    Eigen::MatrixXd off = img;
    off.diagonal().setZero();
    out.off_diagonal = std::max(out.off_diagonal, off.cwiseAbs().maxCoeff());
  }

  // a_j I + b_j Y_j on each rotation plane, anything on the complement.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> rest;
  for (int i = r; i < p; ++i) rest.push_back(i);
  for (int i = p + r; i < n; ++i) rest.push_back(i);
  for (int j = 0; j < r; ++j) {
    const double a = u(rng);
    const double b = u(rng);
    z(j, j) = a;
    z(p + j, p + j) = a;
    z(j, p + j) = b;
    z(p + j, j) = -b;
  }
  for (int i : rest) {
    for (int k : rest) z(i, k) = u(rng);
  }
  out.centralizer_residual = (cay * z * cay_inv - z).cwiseAbs().maxCoeff();
  return out;
}

BlockMatrixElement random_su(int p, int q, std::mt19937_64& rng, double tmax) {
  std::uniform_real_distribution<double> ut(-tmax, tmax);
  std::vector<double> t(static_cast<std::size_t>(std::min(p, q)));
  for (double& v : t) v = ut(rng);
  const BlockMatrixElement k1 = block_diagonal(random_special_unitary(p, rng), random_special_unitary(q, rng));
  const BlockMatrixElement k2 = block_diagonal(random_special_unitary(p, rng), random_special_unitary(q, rng));
  return k1 * a_of_t(p, q, t) * k2;
}

CMatrix random_domain_point(int p, int q, std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> ur(0.0, rmax);
  const CMatrix z = gaussian(p, q, rng);
  const Eigen::JacobiSVD<CMatrix> svd(z);
  return z * (ur(rng) / svd.singularValues()(0));
}

MonteCarloEstimate verify_reproducing_kernel_disc(int k, std::span<const cplx> coeffs, cplx w, std::size_t samples,
                                                  std::uint64_t seed) {
  if (k < 2) throw DomainError("reproducing kernel check needs k >= 2");
  if (samples == 0) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx z = disc_sample(rng);
    const double weight = std::pow(1.0 - std::norm(z), k - 2);
    acc.add(poly_eval(coeffs, z) * ipow(1.0 - w * std::conj(z), -k) * weight);
  }
  // Uniform on the disc: the integral is pi times the mean.
  return acc.result(static_cast<double>(k - 1), seed);
}

NormPair unitarity_disc(int k, std::span<const cplx> coeffs, const BlockMatrixElement& g, std::size_t samples,
                        std::uint64_t seed) {
  if (g.p() != 1 || g.q() != 1) throw DomainError("unitarity_disc needs SU(1,1)");
  const CMatrix inv = g.inverse().matrix();
  const cplx a = inv(0, 0), b = inv(0, 1), c = inv(1, 0), d = inv(1, 1);
  std::mt19937_64 rng(seed);
  Accumulator orig, moved;
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx z = disc_sample(rng);
    const double weight = std::pow(1.0 - std::norm(z), k - 2);
    const cplx gz = (a * z + b) / (c * z + d);
    orig.add(std::norm(poly_eval(coeffs, z)) * weight);
    moved.add(std::norm(ipow(c * z + d, -k) * poly_eval(coeffs, gz)) * weight);
  }
  const double scale = static_cast<double>(k - 1);
  return {orig.result(scale, seed), moved.result(scale, seed)};
}

MeasurePair invariant_measure_disc(const BlockMatrixElement& g, std::size_t samples, std::uint64_t seed) {
  if (g.p() != 1 || g.q() != 1) throw DomainError("invariant_measure_disc needs SU(1,1)");
  const CMatrix& m = g.matrix();
  std::mt19937_64 rng(seed);
  Accumulator direct, moved;
  for (std::size_t i = 0; i < samples; ++i) {
    const cplx z = disc_sample(rng);
    const double density = 1.0 / std::pow(1.0 - std::norm(z), 2);
    const cplx gz = (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
    direct.add(std::pow(1.0 - std::norm(z), 3) * density);
    moved.add(std::pow(1.0 - std::norm(gz), 3) * density);
  }
  return {direct.result(std::numbers::pi, seed), moved.result(std::numbers::pi, seed)};
}

}  // namespace hdt
