#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hdt/convergence.hpp"
#include "hdt/criterion.hpp"
#include "hdt/errors.hpp"

namespace hdt::cli {

using nlohmann::json;

namespace {

constexpr const char* kTick = "✓";
constexpr const char* kCross = "✗";

json rational_json(const Rational& x) {
  if (x.is_integer()) return x.to_long();
  return x.to_string();
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(fmt(v));
}

json number_json(double v) {
  if (!std::isfinite(v)) return fmt(v);
  return round12(v);
}

std::string a_text(const RestrictedData& rd) { return rd.a_defined ? std::to_string(rd.a) : "-"; }

json a_json(const RestrictedData& rd) { return rd.a_defined ? json(rd.a) : json(nullptr); }

std::string join_longs(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int n : nodes) out.push_back(n + 1);
  return out;
}

std::string node_list(const std::vector<int>& nodes) {
  if (nodes.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? " " : "") + std::to_string(nodes[i] + 1);
  return s;
}

std::vector<long> compact_coords(const HermitianStructure& hs, const WeightVector& w) {
  std::vector<long> out;
  for (int n : hs.pair().compact_nodes()) out.push_back(w.coords[n].to_long());
  return out;
}

// Pair label lookup; unknown labels are usage errors.
std::shared_ptr<const PairAnalysis> load_pair(const std::string& label) {
  try {
    return std::make_shared<const PairAnalysis>(analyze_pair(find_pair(label)));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

WeightVector load_lambda0(const HermitianStructure& hs, const std::string& text) {
  std::vector<long> coords = parse_lambda0(text);
  if (text.empty()) coords.assign(hs.pair().compact_nodes().size(), 0);
  try {
    return lambda0_from_compact(hs, coords);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

struct PatternCounts {
  int noncompact = 0;
  int compact = 0;
};

std::vector<std::pair<RestrictedPattern, PatternCounts>> pattern_table(const RestrictedData& rd) {
  std::vector<std::pair<RestrictedPattern, PatternCounts>> rows;
  for (auto pat : {RestrictedPattern::kGamma, RestrictedPattern::kHalfSum, RestrictedPattern::kHalfDiff,
                   RestrictedPattern::kHalfGamma, RestrictedPattern::kZero}) {
    rows.emplace_back(pat, PatternCounts{});
  }
  for (const auto& c : rd.classified) {
    for (auto& [pat, counts] : rows) {
      if (pat == c.pattern) ++(c.compact ? counts.compact : counts.noncompact);
    }
  }
  return rows;
}

}  // namespace

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Rational parse_lambda(const std::string& text) {
  try {
    return Rational::parse_decimal(text);
  } catch (const DomainError& e) {
    throw UsageError("invalid --lambda '" + text + "': " + e.what());
  }
}

std::vector<long> parse_lambda0(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError("invalid --lambda0 entry '" + item + "'");
    }
    if (v < 0) throw UsageError("--lambda0 entries must be non-negative");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in --lambda0");
  return out;
}

std::uint64_t seed_from_env() {
  const char* env = std::getenv("HDT_SEED");
  if (env == nullptr || *env == '\0') return 42;
  const std::string s(env);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("HDT_SEED must be an unsigned integer");
  return v;
}

int cmd_catalog(std::ostream& out, OutputFormat format) {
  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(10) << "pair" << std::setw(18) << "name" << std::setw(7) << "cartan" << std::setw(5)
        << "node" << std::right << std::setw(3) << "r" << std::setw(4) << "a" << std::setw(4) << "b" << std::setw(4)
        << "p" << std::setw(5) << "dim" << "  type\n";

  for (const auto& pair : catalog()) {
    const PairAnalysis pa = analyze_pair(pair);
    const RestrictedData& rd = pa.data;
    rows.push_back({{"pair", pair.label},
                    {"name", pair.name},
                    {"cartan", pair.cartan_type.name()},
                    {"noncompact_node", pair.noncompact_node + 1},
                    {"r", rd.r},
                    {"a", a_json(rd)},
                    {"b", rd.b},
                    {"p", rd.p},
                    {"dim_p_plus", rd.noncompact_count},
                    {"type", to_string(rd.type)}});
    table << std::left << std::setw(10) << pair.label << std::setw(18) << pair.name << std::setw(7)
          << pair.cartan_type.name() << std::setw(5) << pair.noncompact_node + 1 << std::right << std::setw(3) << rd.r
          << std::setw(4) << a_text(rd) << std::setw(4) << rd.b << std::setw(4) << rd.p << std::setw(5)
          << rd.noncompact_count << "  " << to_string(rd.type) << "\n";
  }

  if (format == OutputFormat::kJson) {
    out << json{{"pairs", rows}}.dump(2) << "\n";
  } else {
    out << table.str();
  }
  return kExitOk;
}

int cmd_analyze(std::ostream& out, const std::string& label, OutputFormat format) {
  const auto pa = load_pair(label);
  const HermitianStructure& hs = pa->structure;
  const RestrictedData& rd = pa->data;
  const CascadeResult& cr = pa->cascade;
  const HermitianPair& pair = hs.pair();

  struct Line {
    std::string name;
    std::string text;
    bool pass;
  };
  std::vector<Line> lines;

  const int pairs = rd.r * (rd.r - 1) / 2;
  const int dim_rhs = rd.r + rd.a * pairs + rd.b * rd.r;
  lines.push_back({"dimension",
                   "|Delta_n^+| = " + std::to_string(rd.noncompact_count) + " = r + a r(r-1)/2 + b r",
                   rd.noncompact_count == dim_rhs});
  const int p_rhs = (rd.r - 1) * rd.a + rd.b + 2;
  lines.push_back({"genus", "p = " + std::to_string(rd.p) + " = (r-1)a + b + 2", rd.p == p_rhs});

  RhoIdentityReport rep;
  bool rho_ok = true;
  try {
    rep = verify_rho_identities(hs, cr, rd);
  } catch (const StructuralError&) {
    rho_ok = false;
  }
  if (rho_ok) {
    lines.push_back({"rho(h_r)", "rho(h_r) = " + rep.rho_h_r.to_string() + " = p-1", rep.rho_h_r == Rational(rd.p - 1)});
    for (std::size_t j = 0; j < rep.two_rho_n_h_j.size(); ++j) {
      const auto& v = rep.two_rho_n_h_j[j];
      lines.push_back({"2rho_n(h_" + std::to_string(j + 1) + ")",
                       "2 rho_n(h_" + std::to_string(j + 1) + ") = " + v.to_string() + " = p", v == Rational(rd.p)});
    }
    for (std::size_t j = 0; j < rep.lambda1_h_j.size(); ++j) {
      const auto& v = rep.lambda1_h_j[j];
      lines.push_back({"Lambda_1(h_" + std::to_string(j + 1) + ")",
                       "Lambda_1(h_" + std::to_string(j + 1) + ") = " + v.to_string(), v == Rational(1)});
    }
  } else {
    lines.push_back({"rho identities", "rho identities", false});
  }
  const bool all_pass = std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
  const auto patterns = pattern_table(rd);

  if (format == OutputFormat::kJson) {
    json gammas = json::array();
    for (const auto& g : cr.gammas) gammas.push_back(g.coeffs);
    json mult = json::object();
    for (const auto& [pat, c] : patterns) mult[to_string(pat)] = {{"noncompact", c.noncompact}, {"compact", c.compact}};
    json checks = json::array();
    for (const auto& l : lines) checks.push_back({{"name", l.name}, {"statement", l.text}, {"pass", l.pass}});
    const json doc = {{"pair", pair.label},
                      {"name", pair.name},
                      {"cartan", pair.cartan_type.name()},
                      {"noncompact_node", pair.noncompact_node + 1},
                      {"compact_nodes", one_based(pair.compact_nodes())},
                      {"r", rd.r},
                      {"a", a_json(rd)},
                      {"b", rd.b},
                      {"p", rd.p},
                      {"type", to_string(rd.type)},
                      {"dim_p_plus", rd.noncompact_count},
                      {"gammas", gammas},
                      {"multiplicities", mult},
                      {"threshold", 1 - rd.p},
                      {"exists", nullptr},
                      {"checks", checks}};
    out << doc.dump(2) << "\n";
  } else {
    out << "pair: " << pair.label << "  " << pair.name << "\n";
    out << "cartan: " << pair.cartan_type.name() << ", noncompact node " << pair.noncompact_node + 1 << "\n";
    out << "compact nodes (lambda0 order): " << node_list(pair.compact_nodes()) << "\n";
    out << "|Delta_n^+| = " << rd.noncompact_count << ", |Delta_c^+| = " << rd.compact_count << "\n";
    out << "cascade: r = " << rd.r << "\n";
    for (std::size_t j = 0; j < cr.gammas.size(); ++j) {
      out << "  gamma_" << j + 1 << " = " << cr.gammas[j].to_string() << "\n";
    }
    out << "restricted roots: " << to_string(rd.type) << ", a = " << a_text(rd) << ", b = " << rd.b
        << ", p = " << rd.p << "\n";
    out << std::left << std::setw(22) << "pattern" << std::right << std::setw(11) << "noncompact" << std::setw(9)
        << "compact" << "\n";
    for (const auto& [pat, c] : patterns) {
      out << std::left << std::setw(22) << to_string(pat) << std::right << std::setw(11) << c.noncompact
          << std::setw(9) << c.compact << "\n";
    }
    out << "checks:\n";
    for (const auto& l : lines) out << "  " << l.text << " " << (l.pass ? kTick : kCross) << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_criterion(std::ostream& out, const std::string& label, const std::string& lambda, const std::string& lambda0,
                  OutputFormat format) {
  const auto pa = load_pair(label);
  const HermitianStructure& hs = pa->structure;
  const RestrictedData& rd = pa->data;
  const Rational lam = parse_lambda(lambda);
  const WeightVector l0 = load_lambda0(hs, lambda0);

  const HighestWeightInput input(pa, l0, lam);
  const CriterionVerdict v = hc_condition(input);
  const std::vector<long> l0c = compact_coords(hs, l0);

  if (format == OutputFormat::kJson) {
    json witnesses = json::array();
    for (const auto& w : v.witnesses) witnesses.push_back(w.coeffs);
    const json checks = json::array({
        {{"name", "single inequality"}, {"exists", v.exists}},
        {{"name", "original form"}, {"exists", v.original_form_exists}},
        {{"name", "agreement"}, {"pass", v.exists == v.original_form_exists}},
    });
    const json doc = {{"pair", label},
                      {"r", rd.r},
                      {"a", a_json(rd)},
                      {"b", rd.b},
                      {"p", rd.p},
                      {"lambda0", l0c},
                      {"lambda", rational_json(lam)},
                      {"threshold", rational_json(v.threshold)},
                      {"margin", rational_json(v.margin)},
                      {"exists", v.exists},
                      {"witnesses", witnesses},
                      {"lambda_integral", v.lambda_integral},
                      {"checks", checks}};
    out << doc.dump(2) << "\n";
  } else {
    out << "pair: " << label << "  r = " << rd.r << ", a = " << a_text(rd) << ", b = " << rd.b << ", p = " << rd.p
        << "\n";
    out << "lambda0 = " << join_longs(l0c) << "  lambda = " << lam.to_string() << "\n";
    out << "threshold: lambda < 1 - p - Lambda_0(h_r) = " << v.threshold.to_string() << "\n";
    out << "margin (threshold - lambda) = " << v.margin.to_string() << "\n";
    out << "single inequality: " << (v.exists ? "exists" : "does not exist") << "\n";
    out << "original form:     " << (v.original_form_exists ? "exists" : "does not exist") << "\n";
    out << "forms agree: " << (v.exists == v.original_form_exists ? "yes" : "no") << "\n";
    if (!v.witnesses.empty()) {
      out << "witnesses (Lambda+rho)(h_gamma) >= 0:";
      for (const auto& w : v.witnesses) out << " " << w.to_string();
      out << "\n";
    }
    out << "advisory: lambda " << (v.lambda_integral ? "is" : "is not")
        << " an integer (single-valued on the linear group only if it is)\n";
  }
  return v.exists ? kExitOk : kExitNotExists;
}

int cmd_integrate(std::ostream& out, const std::string& label, const std::string& lambda, const std::string& lambda0,
                  const std::vector<double>& eps, int order, OutputFormat format) {
  const auto pa = load_pair(label);
  const HermitianStructure& hs = pa->structure;
  const RestrictedData& rd = pa->data;
  const Rational lam = parse_lambda(lambda);
  const WeightVector l0 = load_lambda0(hs, lambda0);
  if (order < 0) throw UsageError("--order must be positive");

  const KssWeightSystem ws = weight_system(hs, l0, true);
  ConvergenceOptions opts;
  if (!eps.empty()) opts.eps_ladder = eps;
  opts.order = order;

  ConvergenceReport rep;
  std::optional<IntegralEstimate> value;
  try {
    rep = classify_convergence(*pa, ws, lam, opts);
    if (rd.r <= kMaxQuadratureRank) {
      IntegralSpec spec = build_integrand(*pa, ws, lam);
      spec.order = order > 0 ? order : default_order(rd.r);
      spec.epsilon = rep.truncated_values.back().first;
      value = integrate(spec);
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  } catch (const NumericError& e) {
    throw UsageError(e.what());
  }
  const CriterionVerdict verdict = hc_condition(HighestWeightInput(pa, l0, lam));

  if (format == OutputFormat::kJson) {
    json ladder = json::array();
    for (const auto& [e, v] : rep.truncated_values) ladder.push_back({{"eps", number_json(e)}, {"value", number_json(v)}});
    json doc = {{"pair", label},
                {"r", rd.r},
                {"a", a_json(rd)},
                {"b", rd.b},
                {"p", rd.p},
                {"lambda0", compact_coords(hs, l0)},
                {"lambda", rational_json(lam)},
                {"threshold", rational_json(verdict.threshold)},
                {"exists", verdict.exists},
                {"min_exponent", rational_json(rep.analytic_min_exponent)},
                {"classification", to_string(rep.classification)},
                {"empirical", rep.empirical ? json(to_string(*rep.empirical)) : json(nullptr)},
                {"ladder", ladder},
                {"fitted_slope", number_json(rep.fitted_slope)},
                {"increment_slope", number_json(rep.increment_slope)},
                {"normalization", "c = 1"},
                {"checks", json::array({{{"name", "analytic agrees with criterion"},
                                         {"pass", (rep.classification == Convergence::kConvergent) == verdict.exists}}})}};
    if (value) {
      doc["value"] = number_json(value->value);
      doc["error_bound"] = number_json(value->error_bound);
    }
    doc["formal_dimension_scalar"] =
        rep.formal_dimension_scalar ? number_json(*rep.formal_dimension_scalar) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "pair: " << label << "  r = " << rd.r << ", a = " << a_text(rd) << ", b = " << rd.b << ", p = " << rd.p
        << "\n";
    out << "lambda0 = " << join_longs(compact_coords(hs, l0)) << "  lambda = " << lam.to_string()
        << "  weights = " << ws.weights.size() << "\n";
    out << "min exponent E = " << rep.analytic_min_exponent.to_string() << " (convergent iff E > -1)\n";
    if (rep.truncated_values.empty()) {
      out << "quadrature skipped: r > " << kMaxQuadratureRank << ", analytic classification only\n";
    } else {
      out << std::left << std::setw(20) << "eps" << "I(eps)\n";
      for (const auto& [e, v] : rep.truncated_values) out << std::setw(20) << fmt(e) << fmt(v) << "\n";
      out << "fitted slope d log I / d log(1/eps) = " << fmt(rep.fitted_slope) << "\n";
      out << "increment slope = " << fmt(rep.increment_slope) << "\n";
    }
    out << "classification (analytic): " << to_string(rep.classification) << "\n";
    if (rep.empirical) out << "empirical: " << to_string(*rep.empirical) << "\n";
    out << "criterion: " << (verdict.exists ? "exists" : "does not exist") << ", threshold "
        << verdict.threshold.to_string() << "\n";
    if (value) {
      out << "value at eps = " << fmt(rep.truncated_values.back().first) << ": " << fmt(value->value) << " +- "
          << fmt(value->error_bound) << " (c = 1)\n";
    }
    if (rep.formal_dimension_scalar) {
      out << "formal dimension scalar: " << fmt(*rep.formal_dimension_scalar)
          << (rd.r == 1 && rd.b == 0 ? " (disc normalization (k-1)/pi)" : " (up to normalization)") << "\n";
    }
  }
  return kExitOk;
}

}  // namespace hdt::cli
