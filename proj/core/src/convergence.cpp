#include "hdt/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "hdt/errors.hpp"
#include "hdt/quadrature.hpp"

namespace hdt {

int default_order(int r) {
  if (r <= 2) return 12;
  if (r == 3) return 10;
  return 8;
}

IntegralSpec build_integrand(const PairAnalysis& pa, const KssWeightSystem& ws, const Rational& lambda) {
  const HermitianStructure& hs = pa.structure;
  const RootSystem& rs = hs.roots();
  const WeightVector lambda1 = lambda_one(hs);

  IntegralSpec spec;
  spec.rd = pa.data;
  spec.order = default_order(pa.data.r);

  std::map<WeightVector, int> mults = ws.multiplicities;
  if (mults.empty()) {
    KssWeightSystem copy = ws;
    fill_multiplicities(hs, copy);
    mults = std::move(copy.multiplicities);
  }

  for (const auto& mu : ws.weights) {
    std::vector<Rational> e;
    for (const auto& gamma : pa.cascade.gammas) {
      e.push_back(-rs.coroot_pairing(mu, gamma) - lambda * rs.coroot_pairing(lambda1, gamma) - Rational(pa.data.p));
    }
    spec.exponents.push_back(std::move(e));
    spec.multiplicities.push_back(mults.at(mu));
  }
  return spec;
}

Rational min_exponent(const IntegralSpec& spec) {
  if (spec.exponents.empty() || spec.exponents.front().empty()) throw DomainError("empty integral spec");
  Rational m = spec.exponents.front().front();
  for (const auto& row : spec.exponents) {
    for (const auto& e : row) m = std::min(m, e);
  }
  return m;
}

namespace {

struct Cell {
  double lo;
  double hi;
  int bin;
};

std::vector<double> normalize_ladder(std::vector<double> ladder) {
  if (ladder.empty()) throw DomainError("empty epsilon ladder");
  for (double e : ladder) {
    if (!(e > 0.0 && e < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  }
  std::sort(ladder.begin(), ladder.end(), std::greater<>());
  ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
  return ladder;
}

// Cells in s = 1 - x, ordered from s = 1 downward.
std::vector<Cell> make_cells(const std::vector<double>& ladder) {
  std::set<double, std::greater<>> cuts{1.0};
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    const double ceiling = k == 0 ? 0.5 : ladder[k - 1];
    cuts.insert(ladder[k]);
    for (double v = 2.0 * ladder[k]; v < ceiling || (k == 0 && v <= ceiling); v *= 2.0) cuts.insert(v);
  }
  std::vector<double> pts(cuts.begin(), cuts.end());
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i + 1];
    int bin = 0;
    while (lo < ladder[bin]) ++bin;
    cells.push_back({lo, pts[i], bin});
  }
  return cells;
}

class Integrand {
 public:
  explicit Integrand(const IntegralSpec& spec) : rd_(spec.rd), mult_(spec.multiplicities) {
    for (const auto& row : spec.exponents) {
      std::vector<double> e;
      for (const auto& v : row) e.push_back(v.to_double());
      exps_.push_back(std::move(e));
    }
    logs_.resize(rd_.r);
  }

  // s_0 >= s_1 >= ... (x ascending).
  double operator()(const std::vector<double>& s) {
    const int r = rd_.r;
    double poly = 1.0;
    for (int j = 0; j < r; ++j) {
      logs_[j] = std::log(s[j]) + std::log(2.0 - s[j]);
      const double x = 1.0 - s[j];
      for (int k = 0; k < 2 * rd_.b + 1; ++k) poly *= x;
    }
    if (rd_.a_defined) {
      for (int j = 0; j < r; ++j) {
        for (int k = j + 1; k < r; ++k) {
          const double d = (s[j] - s[k]) * (2.0 - s[j] - s[k]);
          for (int t = 0; t < rd_.a; ++t) poly *= d;
        }
      }
    }
    double sum = 0.0;
    for (std::size_t w = 0; w < exps_.size(); ++w) {
      double acc = 0.0;
      for (int j = 0; j < r; ++j) acc += exps_[w][j] * logs_[j];
      sum += mult_[w] * std::exp(acc);
    }
    return sum * poly;
  }

 private:
  const RestrictedData& rd_;
  const std::vector<int>& mult_;
  std::vector<std::vector<double>> exps_;
  std::vector<double> logs_;
};

// Sum of the integral over each ladder bin.
std::vector<double> bin_integrals(const IntegralSpec& spec, const std::vector<double>& ladder, int order) {
  const int r = spec.rd.r;
  if (r < 1 || r > kMaxQuadratureRank) {
    throw DomainError("quadrature supports rank 1.." + std::to_string(kMaxQuadratureRank) + ", got " +
                      std::to_string(r));
  }
  const std::vector<Cell> cells = make_cells(ladder);
  const GaussRule rule = gauss_legendre(order);
  Integrand f(spec);

  std::vector<double> bins(ladder.size(), 0.0);
  std::vector<int> tuple(r, 0);
  std::vector<int> idx(r, 0);
  std::vector<double> s(r);
  const int n = order;
  const int ncells = static_cast<int>(cells.size());

  std::function<void(int, int)> walk = [&](int pos, int from) {
    if (pos < r) {
      for (int c = from; c < ncells; ++c) {
        tuple[pos] = c;
        walk(pos + 1, c);
      }
      return;
    }
    double total = 0.0;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      double weight = 1.0;
      for (int a = 0; a < r;) {
        int m = 1;
        while (a + m < r && tuple[a + m] == tuple[a]) ++m;
        const Cell& cell = cells[tuple[a]];
        const double h = cell.hi - cell.lo;
        double t = 1.0;
        for (int i = 0; i < m; ++i) {
          const double u = rule.nodes[idx[a + i]];
          weight *= rule.weights[idx[a + i]] * h;
          for (int p = 0; p < m - 1 - i; ++p) weight *= u;
          t *= u;
          s[a + i] = cell.lo + h * t;
        }
        a += m;
      }
      total += weight * f(s);

      int d = r - 1;
      while (d >= 0 && ++idx[d] == n) idx[d--] = 0;
      if (d < 0) break;
    }
    if (!std::isfinite(total)) throw NumericError("non-finite quadrature value; exponents too negative for this eps");
    bins[cells[tuple[r - 1]].bin] += total;
  };
  walk(0, 0);
  return bins;
}

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

}  // namespace

LadderValues integrate_ladder(const IntegralSpec& spec, std::vector<double> eps_ladder) {
  LadderValues out;
  out.eps = normalize_ladder(std::move(eps_ladder));
  const std::vector<double> bins = bin_integrals(spec, out.eps, spec.order);
  double acc = 0.0;
  for (std::size_t k = 0; k < bins.size(); ++k) {
    acc += bins[k];
    out.values.push_back(acc);
    if (k > 0) out.increments.push_back(bins[k]);
  }
  return out;
}

IntegralEstimate integrate(const IntegralSpec& spec) {
  const std::vector<double> ladder = normalize_ladder({spec.epsilon});
  const double hi = bin_integrals(spec, ladder, spec.order).front();
  const double lo = bin_integrals(spec, ladder, std::max(1, spec.order - 4)).front();
  return {hi, std::abs(hi - lo)};
}

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::kConvergent:
      return "convergent";
    case Convergence::kDivergent:
      return "divergent";
    case Convergence::kBoundaryIndeterminate:
      return "boundary-indeterminate";
  }
  return "?";
}

double formal_dimension_scalar(const RestrictedData& rd, double integral) {
  if (!(integral > 0.0)) throw DomainError("formal dimension needs a positive integral");
  if (rd.r == 1 && rd.b == 0) return 1.0 / (2.0 * std::numbers::pi * integral);
  return 1.0 / integral;
}

ConvergenceReport classify_convergence(const PairAnalysis& pa, const KssWeightSystem& ws, const Rational& lambda,
                                       const ConvergenceOptions& opts) {
  IntegralSpec spec = build_integrand(pa, ws, lambda);
  spec.order = opts.order > 0 ? opts.order : default_order(pa.data.r);

  ConvergenceReport rep;
  rep.analytic_min_exponent = min_exponent(spec);
  const Convergence analytic =
      rep.analytic_min_exponent > Rational(-1) ? Convergence::kConvergent : Convergence::kDivergent;

  if (pa.data.r <= kMaxQuadratureRank) {
    const LadderValues lv = integrate_ladder(spec, opts.eps_ladder);
    if (lv.eps.size() < 3) throw ConfigError("the epsilon ladder needs at least three values");
    std::vector<double> xs, ys, xi, yi;
    for (std::size_t k = 0; k < lv.eps.size(); ++k) {
      rep.truncated_values.emplace_back(lv.eps[k], lv.values[k]);
      xs.push_back(std::log(1.0 / lv.eps[k]));
      ys.push_back(std::log(lv.values[k]));
      if (k > 0 && lv.increments[k - 1] > 0.0) {
        xi.push_back(xs.back());
        yi.push_back(std::log(lv.increments[k - 1]));
      }
    }
    rep.fitted_slope = ls_slope(xs, ys);
    if (xi.size() >= 2) {
      rep.increment_slope = ls_slope(xi, yi);
      if (rep.increment_slope < -opts.slope_tolerance) {
        rep.empirical = Convergence::kConvergent;
      } else if (rep.increment_slope > opts.slope_tolerance) {
        rep.empirical = Convergence::kDivergent;
      } else {
        rep.empirical = Convergence::kBoundaryIndeterminate;
      }
    } else {
      // Increments underflowed to zero: the tail is negligible.
      rep.increment_slope = -INFINITY;
      rep.empirical = Convergence::kConvergent;
    }
  }

  if (opts.analytic) {
    rep.classification = analytic;
  } else if (rep.empirical) {
    rep.classification = *rep.empirical;
  } else {
    throw ConfigError("empirical classification needs rank <= " + std::to_string(kMaxQuadratureRank));
  }

  if (rep.classification == Convergence::kConvergent && !rep.truncated_values.empty()) {
    rep.formal_dimension_scalar = formal_dimension_scalar(pa.data, rep.truncated_values.back().second);
  }
  return rep;
}

double empirical_threshold(const PairAnalysis& pa, const KssWeightSystem& ws, ConvergenceOptions opts) {
  opts.analytic = false;
  auto classify = [&](double lambda) {
    return classify_convergence(pa, ws, Rational::from_double(lambda), opts).classification;
  };

  double hi = 0.0;
  if (classify(hi) != Convergence::kDivergent) throw ConfigError("lambda = 0 is not divergent; no bracket");
  double lo = -1.0;
  while (true) {
    const Convergence c = classify(lo);
    if (c == Convergence::kConvergent) break;
    if (c == Convergence::kDivergent) hi = lo;
    if (lo <= -256.0) throw ConfigError("no convergent lower bracket down to lambda = -256");
    lo *= 2.0;
  }

  while (hi - lo > 0.05) {
    const double mid = 0.5 * (lo + hi);
    const Convergence c = classify(mid);
    if (c == Convergence::kBoundaryIndeterminate) return mid;
    (c == Convergence::kConvergent ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hdt
