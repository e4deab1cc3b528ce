#include <algorithm>
#include <cmath>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>

#include "commands.hpp"
#include "hdt/criterion.hpp"
#include "hdt/errors.hpp"
#include "hdt/matrix_model.hpp"

namespace hdt::cli {

namespace {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

// Runs an exact check; any exception is a failure carrying its message.
template <class F>
Check exact_check(const std::string& name, F&& body) {
  Check c{name, 0.0, 0.0, false, ""};
  try {
    c.detail = body();
    c.pass = true;
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

Check numeric_check(const std::string& name, double residual, double tolerance, std::string detail = {}) {
  return {name, residual, tolerance, residual <= tolerance, std::move(detail)};
}

void exact_suite(std::vector<Check>& checks) {
  for (const auto& pair : catalog()) {
    std::shared_ptr<const PairAnalysis> pa;
    checks.push_back(exact_check("structure " + pair.label, [&] {
      pa = std::make_shared<const PairAnalysis>(analyze_pair(pair));
      return "r=" + std::to_string(pa->data.r) + " p=" + std::to_string(pa->data.p);
    }));
    if (!pa) continue;
    const HermitianStructure& hs = pa->structure;

    checks.push_back(exact_check("rho identities " + pair.label, [&] {
      const RhoIdentityReport rep = verify_rho_identities(hs, pa->cascade, pa->data);
      return "rho(h_r)=" + rep.rho_h_r.to_string();
    }));

    std::vector<WeightVector> lambda0s{WeightVector{RationalVector(static_cast<std::size_t>(hs.roots().rank()))}};
    const int nc = static_cast<int>(pair.compact_nodes().size());
    if (hs.roots().rank() <= 6) {
      for (int j = 0; j < std::min(3, nc); ++j) lambda0s.push_back(compact_fundamental_weight(hs, j));
    }
    for (std::size_t i = 0; i < lambda0s.size(); ++i) {
      const std::string tag = i == 0 ? "0" : "w" + std::to_string(i);
      checks.push_back(exact_check("weight bound " + pair.label + " lambda0=" + tag, [&] {
        const KssWeightSystem ws = weight_system(hs, lambda0s[i]);
        const WeightBoundReport rep = verify_weight_bound(hs, pa->cascade, ws);
        return std::to_string(rep.pairs_checked) + " pairs";
      }));
    }

    checks.push_back(exact_check("reduction trace " + pair.label, [&] {
      const WeightVector& l0 = lambda0s.back();
      const HighestWeightInput in(pa, l0, hc_threshold(*pa, l0));
      return std::to_string(reduction_trace(in).size()) + " roots";
    }));

    checks.push_back(exact_check("criterion equivalence " + pair.label, [&] {
      int n = 0;
      for (const auto& l0 : lambda0s) {
        const Rational t = hc_threshold(*pa, l0);
        for (const Rational& d : {Rational(-3), Rational(-1), Rational(-1, 4), Rational(0), Rational(1, 4),
                                  Rational(1), Rational(3)}) {
          const CriterionVerdict v = hc_condition(HighestWeightInput(pa, l0, t + d));
          if (v.exists != (d.sign() < 0)) throw StructuralError("verdict does not match the threshold");
          ++n;
        }
      }
      return std::to_string(n) + " samples";
    }));
  }
}

void numeric_suite(std::vector<Check>& checks, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  const int sigs[4][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};

  for (const auto& s : sigs) {
    double cocycle = 0.0, fact = 0.0, member = 0.0, qres = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const BlockMatrixElement g = random_su(s[0], s[1], rng);
      const BlockMatrixElement g1 = random_su(s[0], s[1], rng);
      const CMatrix z = random_domain_point(s[0], s[1], rng);
      cocycle = std::max(cocycle, cocycle_residual(g, g1, z));
      fact = std::max(fact, hc_factorize(g, z).residual);
      member = std::max(member, g.unitarity_residual());
      qres = std::max(qres, verify_Q_transformation(g, z, s[0] + s[1]));
    }
    const std::string sig = "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")";
    checks.push_back(numeric_check("cocycle " + sig, cocycle, 1e-10, "1000 triples"));
    checks.push_back(numeric_check("factorization " + sig, fact, 1e-12));
    checks.push_back(numeric_check("U(p,q) membership " + sig, member, 1e-10));
    checks.push_back(numeric_check("Q transformation " + sig, qres, 1e-10));
  }

  double sl2 = 0.0;
  for (int i = -50; i <= 50; ++i) sl2 = std::max(sl2, verify_sl2_identity(0.1 * i));
  checks.push_back(numeric_check("sl2 identity |t|<=5", sl2, 1e-12));

  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  double jac = 0.0;
  double qsign_minus = 0.0;
  double qsign_plus = 1e300;
  for (const auto& s : sigs) {
    std::vector<double> t(static_cast<std::size_t>(std::min(s[0], s[1])));
    for (double& v : t) v = ut(rng);
    jac = std::max(jac, jacobian_at_origin(s[0], s[1], t).residual);
    const QSignCheck qs = q_exponent_at_origin(s[0], s[1], t);
    qsign_minus = std::max(qsign_minus, qs.minus_residual);
    qsign_plus = std::min(qsign_plus, qs.plus_residual);
  }
  checks.push_back(numeric_check("jacobian at origin", jac, 1e-6));
  checks.push_back(numeric_check("Q(a(t)0) exponent -p", qsign_minus, 1e-10,
                                 "the +p exponent misses by at least " + fmt(qsign_plus)));

  double kern = 0.0, herm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BlockMatrixElement g = random_su(1, 1, rng);
    const CMatrix z = random_domain_point(1, 1, rng);
    const CMatrix w = random_domain_point(1, 1, rng);
    const int k = 2 + i % 4;
    kern = std::max(kern, verify_kernel_transformation(g, z, w, k));
    herm = std::max(herm, std::abs(kernel(z, w, k) - std::conj(kernel(w, z, k))));
  }
  checks.push_back(numeric_check("kernel transformation su(1,1)", kern, 1e-10));
  checks.push_back(numeric_check("kernel hermitian symmetry", herm, 1e-12));

  for (const auto& s : sigs) {
    const CayleyCheck c = cayley_verify(s[0], s[1]);
    const double res = std::max({c.conjugation_residual, c.off_diagonal, c.centralizer_residual});
    checks.push_back(
        numeric_check("cayley (" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")", res, 1e-10));
  }

  for (int k : {2, 3, 5}) {
    const cplx w(0.3, 0.0);
    const std::vector<cplx> f{0.0, 0.0, 1.0};
    const MonteCarloEstimate e = verify_reproducing_kernel_disc(k, f, w, samples, seed + k);
    const cplx fw = w * w;
    checks.push_back(numeric_check("reproducing kernel k=" + std::to_string(k) + " f=z^2 w=0.3",
                                   std::abs(e.value - fw), 0.01 * std::max(std::abs(fw), 1.0),
                                   "estimate " + fmt(e.value.real())));
  }

  const MeasurePair mp = invariant_measure_disc(random_su(1, 1, rng), samples, seed + 11);
  checks.push_back(numeric_check("invariant measure", std::abs(mp.moved.value - mp.direct.value),
                                 0.01 * std::abs(mp.direct.value)));

  const double tt[1] = {0.5};
  const BlockMatrixElement g = block_diagonal(CMatrix::Constant(1, 1, cplx(0.6, 0.8)),
                                              CMatrix::Constant(1, 1, cplx(0.6, -0.8))) *
                               a_of_t(1, 1, tt);
  const std::vector<cplx> f{1.0, 0.5, cplx(0.0, 1.0)};
  const NormPair np = unitarity_disc(3, f, g, samples, seed + 13);
  checks.push_back(numeric_check("multiplier unitarity k=3", std::abs(np.transformed.value - np.original.value),
                                 0.01 * std::abs(np.original.value)));
}

}  // namespace

int cmd_verify(std::ostream& out, const std::string& scope, std::uint64_t seed, std::size_t samples,
               OutputFormat format) {
  if (scope != "exact" && scope != "numeric" && scope != "all") throw UsageError("unknown verify scope " + scope);
  if (samples == 0) throw UsageError("--samples must be positive");
  std::vector<Check> checks;
  if (scope != "numeric") exact_suite(checks);
  if (scope != "exact") numeric_suite(checks, seed, samples);

  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  if (format == OutputFormat::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
      if (c.tolerance > 0.0) {
        j["residual"] = std::stod(fmt(c.residual));
        j["tolerance"] = c.tolerance;
      }
      arr.push_back(j);
    }
    const nlohmann::json doc{
        {"scope", scope}, {"seed", seed}, {"samples", samples}, {"passed", failed == 0}, {"checks", arr}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.tolerance > 0.0) out << "  residual " << fmt(c.residual) << " <= " << fmt(c.tolerance);
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
    out << "summary: " << checks.size() - failed << "/" << checks.size() << " passed (scope " << scope << ", seed "
        << seed << ")\n";
    for (const auto& c : checks) {
      if (!c.pass) out << "failed: " << c.name << "\n";
    }
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace hdt::cli
