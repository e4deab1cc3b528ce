// hdt_acceptance: one PASS/FAIL line per acceptance criterion, with timings.
// Exit status is 0 only when every criterion passes inside its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "../support/cli_runner.hpp"
#include "../support/oracles.hpp"
#include "hdt/convergence.hpp"
#include "hdt/criterion.hpp"
#include "hdt/errors.hpp"
#include "hdt/matrix_model.hpp"

namespace {

using hdt::Rational;
using hdt::RationalVector;
using hdt::WeightVector;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Appends a failure note; the first few are kept for the report line.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  [[nodiscard]] int count() const { return count_; }
  [[nodiscard]] std::string summary() const {
    return count_ == 0 ? "" : std::to_string(count_) + " failures: " + notes_;
  }

 private:
  int count_ = 0;
  std::string notes_;
};

std::shared_ptr<const hdt::PairAnalysis> load(const hdt::HermitianPair& pair) {
  return std::make_shared<const hdt::PairAnalysis>(hdt::analyze_pair(pair));
}

WeightVector zero_weight(const hdt::HermitianStructure& hs) {
  return WeightVector{RationalVector(static_cast<std::size_t>(hs.roots().rank()))};
}

// Zero plus the first `count` compact fundamental weights.
std::vector<WeightVector> lambda0_set(const hdt::HermitianStructure& hs, int count) {
  std::vector<WeightVector> out{zero_weight(hs)};
  const int nc = static_cast<int>(hs.pair().compact_nodes().size());
  for (int j = 0; j < std::min(count, nc); ++j) out.push_back(hdt::compact_fundamental_weight(hs, j));
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome exact_identities() {
  Failures f;
  int pairs = 0;
  for (const auto& pair : hdt::catalog()) {
    try {
      const hdt::PairAnalysis pa = hdt::analyze_pair(pair);
      const auto& rd = pa.data;
      const auto& rs = pa.structure.roots();
      if (rd.p != (rd.r - 1) * rd.a + rd.b + 2) f.add(pair.label + " genus");
      const auto [rho, rho_n] = hdt::testing::direct_rho(pa.structure);
      if (rs.cartan_integer(rho, pa.cascade.gammas.back()) != Rational(rd.p - 1)) f.add(pair.label + " rho(h_r)");
      for (const auto& g : pa.cascade.gammas) {
        if (2 * rs.cartan_integer(rho_n, g) != Rational(rd.p)) f.add(pair.label + " 2rho_n(h_j)");
      }
      hdt::verify_rho_identities(pa.structure, pa.cascade, rd);
      ++pairs;
    } catch (const std::exception& e) {
      f.add(pair.label + ": " + e.what());
    }
  }
  if (pairs < 20) f.add("only " + std::to_string(pairs) + " pairs");
  return {f.count() == 0, std::to_string(pairs) + " pairs, genus and rho identities exact. " + f.summary()};
}

Outcome closed_forms() {
  Failures f;
  int checked = 0;
  for (const auto& pair : hdt::catalog()) {
    try {
      const hdt::PairAnalysis pa = hdt::analyze_pair(pair);
      const auto& rd = pa.data;
      const hdt::testing::Rab brute = hdt::testing::brute_force(pa.structure, pa.cascade.gammas);
      const int bookkeeping = rd.r + rd.a * rd.r * (rd.r - 1) / 2 + rd.b * rd.r;
      if (!brute.uniform) f.add(pair.label + " non-uniform multiplicities");
      if (bookkeeping != static_cast<int>(pa.structure.partition().noncompact_pos.size())) {
        f.add(pair.label + " bookkeeping");
      }
      const bool matrix_family = pair.label.rfind("su", 0) == 0 || pair.label.rfind("sp", 0) == 0;
      if (matrix_family) {
        const hdt::testing::Rab want = hdt::testing::closed_form(pair.label);
        const bool a_ok = !want.a_defined || (rd.a == want.a && brute.a == want.a);
        if (rd.r != want.r || rd.b != want.b || rd.p != want.p || !a_ok || brute.r != want.r ||
            brute.b != want.b || brute.p != want.p) {
          f.add(pair.label + " closed form");
        }
        ++checked;
      }
    } catch (const std::exception& e) {
      f.add(pair.label + ": " + e.what());
    }
  }
  const auto e7 = hdt::analyze_pair(hdt::find_pair("e7vii")).data;
  const int n = e7.noncompact_count;
  const int half_sums = e7.a * e7.r * (e7.r - 1) / 2;
  if (n != 27 || e7.r != 3 || half_sums != 24 || e7.b * e7.r != 0) f.add("E VII bookkeeping");
  return {f.count() == 0, std::to_string(checked) + " su/sp pairs match; E VII " + std::to_string(n) + " = " +
                              std::to_string(e7.r) + " + " + std::to_string(half_sums) + " + " +
                              std::to_string(e7.b * e7.r) + ". " + f.summary()};
}

Outcome criterion_equivalence() {
  Failures f;
  int samples = 0;
  int traces = 0;
  const Rational offsets[7] = {Rational(-3), Rational(-1), Rational(-1, 4), Rational(0),
                               Rational(1, 4), Rational(1), Rational(3)};
  for (const auto& pair : hdt::catalog()) {
    const auto pa = load(pair);
    for (const auto& l0 : lambda0_set(pa->structure, 3)) {
      const Rational t = hdt::hc_threshold(*pa, l0);
      for (const Rational& d : offsets) {
        const hdt::HighestWeightInput in(pa, l0, t + d);
        try {
          const hdt::CriterionVerdict v = hdt::hc_condition(in);
          const hdt::OriginalForm o = hdt::hc_condition_original(in);
          if (v.exists != o.holds || v.exists != (d.sign() < 0)) f.add(pair.label + " disagreement");
        } catch (const hdt::StructuralError& e) {
          f.add(pair.label + ": " + e.what());
        }
        ++samples;
      }
      try {
        for (const auto& step : hdt::reduction_trace(hdt::HighestWeightInput(pa, l0, t - 1))) {
          if (std::any_of(step.m.begin(), step.m.end(), [](int m) { return m < 0; })) {
            f.add(pair.label + " negative expansion");
          }
        }
        ++traces;
      } catch (const std::exception& e) {
        f.add(pair.label + " trace: " + e.what());
      }
    }
  }
  if (samples < 500) f.add("grid has only " + std::to_string(samples) + " samples");
  return {f.count() == 0,
          std::to_string(samples) + " samples agree, " + std::to_string(traces) + " reduction traces. " + f.summary()};
}

Outcome weight_bound() {
  Failures f;
  int systems = 0;
  long pairs_checked = 0;
  for (const auto& pair : hdt::catalog()) {
    const hdt::HermitianStructure hs(pair);
    if (hs.roots().rank() > 6) continue;
    const hdt::PairAnalysis pa = hdt::analyze_pair(pair);
    const auto& rs = hs.roots();
    for (const auto& l0 : lambda0_set(hs, 3)) {
      try {
        const hdt::KssWeightSystem ws = hdt::weight_system(hs, l0);
        const Rational bound = rs.inner(l0, pa.cascade.gammas.back());
        for (const auto& w : ws.weights) {
          for (const auto& g : pa.cascade.gammas) {
            if (rs.inner(w, g) > bound) f.add(pair.label + " violation");
          }
        }
        pairs_checked += hdt::verify_weight_bound(hs, pa.cascade, ws).pairs_checked;
        ++systems;
      } catch (const std::exception& e) {
        f.add(pair.label + ": " + e.what());
      }
    }
  }
  return {f.count() == 0, std::to_string(systems) + " weight systems, " + std::to_string(pairs_checked) +
                              " (s, j) pairs, zero violations. " + f.summary()};
}

Outcome disc_quadrature() {
  Failures f;
  const hdt::PairAnalysis pa = hdt::analyze_pair(hdt::find_pair("su11"));
  const hdt::KssWeightSystem ws = hdt::weight_system(pa.structure, zero_weight(pa.structure));
  double worst = 0.0;
  for (const char* text : {"-1.5", "-2", "-3", "-5"}) {
    const Rational lambda = Rational::parse_decimal(text);
    hdt::IntegralSpec spec = hdt::build_integrand(pa, ws, lambda);
    // The truncation tail is (2 eps)^{E+1} / (2(E+1)); at eps = 1e-15 it is below 1e-7 relative for E >= -1/2.
    spec.epsilon = 1e-15;
    spec.order = hdt::default_order(1);
    const double want = 1.0 / (2.0 * (-lambda.to_double() - 1.0));
    const double rel = std::abs(hdt::integrate(spec).value / want - 1.0);
    worst = std::max(worst, rel);
    if (rel > 1e-6) f.add(std::string("lambda ") + text + " rel " + fmt(rel));
  }
  return {f.count() == 0, "worst relative error " + fmt(worst) + ". " + f.summary()};
}

Outcome threshold_recovery() {
  Failures f;
  double worst = 0.0;
  int runs = 0;
  for (const char* label : {"su11", "su22", "sp2", "sp3", "so2_5"}) {
    const auto pa = load(hdt::find_pair(label));
    for (const auto& l0 : lambda0_set(pa->structure, 1)) {
      const double want = hdt::hc_threshold(*pa, l0).to_double();
      try {
        const double got = hdt::empirical_threshold(*pa, hdt::weight_system(pa->structure, l0));
        worst = std::max(worst, std::abs(got - want));
        if (std::abs(got - want) > 0.05) f.add(std::string(label) + " got " + fmt(got) + " want " + fmt(want));
      } catch (const std::exception& e) {
        f.add(std::string(label) + ": " + e.what());
      }
      ++runs;
    }
  }
  return {f.count() == 0, std::to_string(runs) + " thresholds, worst deviation " + fmt(worst) +
                              " (su11 has no compact fundamental weight). " + f.summary()};
}

Outcome matrix_residuals(std::uint64_t seed) {
  Failures f;
  std::mt19937_64 rng(seed);
  double sl2 = 0.0;
  for (int i = -500; i <= 500; ++i) sl2 = std::max(sl2, hdt::verify_sl2_identity(0.01 * i));
  if (sl2 >= 1e-12) f.add("sl2 " + fmt(sl2));

  double cocycle = 0.0;
  double jac = 0.0;
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    for (int i = 0; i < 1000; ++i) {
      const auto g = hdt::random_su(p, q, rng);
      const auto g1 = hdt::random_su(p, q, rng);
      cocycle = std::max(cocycle, hdt::cocycle_residual(g, g1, hdt::random_domain_point(p, q, rng)));
    }
    std::vector<double> t(static_cast<std::size_t>(std::min(p, q)));
    for (double& v : t) v = ut(rng);
    jac = std::max(jac, hdt::jacobian_at_origin(p, q, t).residual);
    const hdt::CayleyCheck c = hdt::cayley_verify(p, q);
    const double cres = std::max({c.conjugation_residual, c.off_diagonal, c.centralizer_residual});
    if (cres >= 1e-10) f.add("cayley " + fmt(cres));
  }
  if (cocycle >= 1e-10) f.add("cocycle " + fmt(cocycle));
  if (jac >= 1e-6) f.add("jacobian " + fmt(jac));

  double kern = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = hdt::random_su(1, 1, rng);
    kern = std::max(kern, hdt::verify_kernel_transformation(g, hdt::random_domain_point(1, 1, rng),
                                                            hdt::random_domain_point(1, 1, rng), 2 + i % 4));
  }
  if (kern >= 1e-10) f.add("kernel " + fmt(kern));
  return {f.count() == 0, "sl2 " + fmt(sl2) + ", cocycle " + fmt(cocycle) + ", jacobian " + fmt(jac) +
                              ", kernel " + fmt(kern) + " (seed " + std::to_string(seed) + "). " + f.summary()};
}

Outcome reproducing_property(std::uint64_t seed) {
  Failures f;
  double worst = 0.0;
  int runs = 0;
  for (int k : {2, 3, 5}) {
    for (int m = 0; m <= 6; ++m) {
      std::vector<hdt::cplx> coeffs(static_cast<std::size_t>(m + 1), 0.0);
      coeffs.back() = 1.0;
      for (hdt::cplx w : {hdt::cplx(0.0, 0.0), hdt::cplx(0.3, 0.0), hdt::cplx(0.0, 0.6)}) {
        const hdt::MonteCarloEstimate e =
            hdt::verify_reproducing_kernel_disc(k, coeffs, w, 1000000, seed + static_cast<std::uint64_t>(runs));
        const hdt::cplx fw = std::pow(w, m);
        const double scaled = std::abs(e.value - fw) / std::max(std::abs(fw), 1.0);
        worst = std::max(worst, scaled);
        if (scaled > 0.01) f.add("k=" + std::to_string(k) + " m=" + std::to_string(m) + " err " + fmt(scaled));
        ++runs;
      }
    }
  }
  return {f.count() == 0, std::to_string(runs) + " estimates at 1e6 samples, worst error / max(|f(w)|, 1) " +
                              fmt(worst) + " (seeds " + std::to_string(seed) + ".." +
                              std::to_string(seed + runs - 1) + "). " + f.summary()};
}

Outcome cli_contract() {
  Failures f;
  for (const auto& c : hdt::testing::golden_cases()) {
    const auto r = hdt::testing::run_hdt(c.args);
    if (r.status != 0 || r.out != hdt::testing::read_golden(c.file)) f.add(std::string("golden ") + c.file);
  }
  int codes[4] = {0, 0, 0, 0};
  for (const auto& c : hdt::testing::exit_cases()) {
    const int got = hdt::testing::run_hdt(c.args, c.env).status;
    if (got != c.want) f.add(std::string("'hdt ") + c.args + "' exit " + std::to_string(got));
    if (c.want >= 0 && c.want < 4) ++codes[c.want];
  }
  return {f.count() == 0, std::to_string(hdt::testing::golden_cases().size()) + " golden files, exit codes 0/1/2/3 over " +
                              std::to_string(codes[0]) + "/" + std::to_string(codes[1]) + "/" +
                              std::to_string(codes[2]) + "/" + std::to_string(codes[3]) + " invocations. " +
                              f.summary()};
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 42;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact identity suite", 30, exact_identities},
      {2, "closed-form invariants vs brute force", 0, closed_forms},
      {3, "criterion equivalence grid", 0, criterion_equivalence},
      {4, "weight-bound lemma", 0, weight_bound},
      {5, "r = 1 quadrature vs closed form", 5, disc_quadrature},
      {6, "empirical threshold recovery", 300, threshold_recovery},
      {7, "matrix-model residual suite", 120, [] { return matrix_residuals(kSeed); }},
      {8, "reproducing property on the disc", 120, [] { return reproducing_property(kSeed); }},
      {9, "CLI contract", 0, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " over the " + fmt(c.budget_s) + " s budget";
    }
    if (!o.pass) ++failed;
    while (!o.detail.empty() && o.detail.back() == ' ') o.detail.pop_back();
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
