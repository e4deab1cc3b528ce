// hdt: Harish-Chandra discrete-series toolkit.
//
//   hdt catalog [--output json|table]
//   hdt analyze <pair>
//   hdt criterion <pair> --lambda <dec> [--lambda0 a,b,c]
//   hdt integrate <pair> --lambda <dec> [--lambda0 ...] [--eps 1e-2,1e-3,...] [--order N]
//   hdt verify [exact|numeric|all] [--seed N] [--samples N]
//
// Exit codes: 0 ok / exists, 1 verification failure, 2 usage error,
// 3 criterion negative.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <optional>

#include "commands.hpp"
#include "hdt/errors.hpp"

namespace {

using hdt::cli::OutputFormat;

void add_output(CLI::App* cmd, OutputFormat& format) {
  static const std::map<std::string, OutputFormat> kFormats{{"table", OutputFormat::kTable},
                                                            {"json", OutputFormat::kJson}};
  cmd->add_option("--output,-o", format, "table or json")->transform(CLI::CheckedTransformer(kFormats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holomorphic discrete series: structure, criterion and convergence checks", "hdt"};
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::kTable;
  std::string pair;
  std::string lambda;
  std::string lambda0;
  std::vector<double> eps;
  int order = 0;
  std::string scope = "all";
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000000;

  auto* catalog = app.add_subcommand("catalog", "list every Hermitian pair with (r, a, b, p)");
  add_output(catalog, format);

  auto* analyze = app.add_subcommand("analyze", "cascade, restricted roots and rho identities for one pair");
  analyze->add_option("pair", pair, "pair label, e.g. su23, sp3, so2_5, sostar10, e7vii")->required();
  add_output(analyze, format);

  auto* criterion = app.add_subcommand("criterion", "existence of the holomorphic discrete series");
  criterion->add_option("pair", pair, "pair label")->required();
  criterion->add_option("--lambda", lambda, "central parameter, plain decimal")->required();
  criterion->add_option("--lambda0", lambda0, "compact highest weight, comma separated, node order of analyze");
  add_output(criterion, format);

  auto* integrate = app.add_subcommand("integrate", "truncated convergence integral and its classification");
  integrate->add_option("pair", pair, "pair label")->required();
  integrate->add_option("--lambda", lambda, "central parameter, plain decimal")->required();
  integrate->add_option("--lambda0", lambda0, "compact highest weight, comma separated");
  integrate->add_option("--eps", eps, "truncation ladder")->delimiter(',');
  integrate->add_option("--order", order, "Gauss-Legendre order per cell")->check(CLI::PositiveNumber);
  add_output(integrate, format);

  auto* verify = app.add_subcommand("verify", "run the identity and residual suites");
  verify->add_option("scope", scope, "exact, numeric or all")->check(CLI::IsMember({"exact", "numeric", "all"}));
  verify->add_option("--seed", seed, "random seed (default HDT_SEED, then 42)");
  verify->add_option("--samples", samples, "Monte Carlo draws per disc check")->check(CLI::PositiveNumber);
  add_output(verify, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hdt::cli::kExitUsage;
  }

  try {
    std::ostream& out = std::cout;
    if (*catalog) return hdt::cli::cmd_catalog(out, format);
    if (*analyze) return hdt::cli::cmd_analyze(out, pair, format);
    if (*criterion) return hdt::cli::cmd_criterion(out, pair, lambda, lambda0, format);
    if (*integrate) return hdt::cli::cmd_integrate(out, pair, lambda, lambda0, eps, order, format);
    if (*verify) return hdt::cli::cmd_verify(out, scope, seed ? *seed : hdt::cli::seed_from_env(), samples, format);
  } catch (const hdt::cli::UsageError& e) {
    std::cerr << "hdt: " << e.what() << "\n";
    return hdt::cli::kExitUsage;
  } catch (const hdt::DomainError& e) {
    std::cerr << "hdt: " << e.what() << "\n";
    return hdt::cli::kExitUsage;
  } catch (const hdt::StructuralError& e) {
    std::cerr << "hdt: identity check failed: " << e.what() << "\n";
    return hdt::cli::kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "hdt: " << e.what() << "\n";
    return hdt::cli::kExitVerifyFailed;
  }
  return hdt::cli::kExitUsage;
}
