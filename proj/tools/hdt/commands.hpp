#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdt/rational.hpp"

namespace hdt::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitNotExists = 3,
};

enum class OutputFormat { kTable, kJson };

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact decimal; scientific notation is a usage error.
Rational parse_lambda(const std::string& text);
/// "a,b,c" of non-negative integers; empty string gives an empty list.
std::vector<long> parse_lambda0(const std::string& text);
/// HDT_SEED when set, else 42. Throws UsageError on garbage.
std::uint64_t seed_from_env();
/// 12 significant digits.
std::string fmt(double v);

int cmd_catalog(std::ostream& out, OutputFormat format);
int cmd_analyze(std::ostream& out, const std::string& label, OutputFormat format);
int cmd_criterion(std::ostream& out, const std::string& label, const std::string& lambda, const std::string& lambda0,
                  OutputFormat format);
int cmd_integrate(std::ostream& out, const std::string& label, const std::string& lambda, const std::string& lambda0,
                  const std::vector<double>& eps, int order, OutputFormat format);
/// samples: Monte Carlo draws per disc check.
int cmd_verify(std::ostream& out, const std::string& scope, std::uint64_t seed, std::size_t samples,
               OutputFormat format);

}  // namespace hdt::cli
