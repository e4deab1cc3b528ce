#pragma once
// Runs the hdt binary through the shell and captures stdout and the exit status.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hdt::testing {

struct CliRun {
  int status = -1;
  std::string out;
};

inline CliRun run_hdt(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" HDT_BINARY "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HDT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  const char* args;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"catalog.txt", "catalog"},
      {"catalog.json", "catalog --output json"},
      {"analyze_su11.txt", "analyze su11"},
      {"analyze_sp3.txt", "analyze sp3"},
      {"analyze_e7vii.txt", "analyze e7vii"},
      {"analyze_e7vii.json", "analyze e7vii -o json"},
  };
  return cases;
}

struct ExitCase {
  const char* args;
  int want;
  const char* env = "";
};

inline const std::vector<ExitCase>& exit_cases() {
  static const std::vector<ExitCase> cases{
      {"catalog", 0},
      {"analyze su11", 0},
      {"criterion su11 --lambda -2", 0},
      {"criterion su23 --lambda -5.5 --lambda0 1,0,0", 0},
      {"integrate su11 --lambda -3", 0},
      {"integrate su11 --lambda 0", 0},
      {"verify exact", 0},
      {"verify numeric --samples 100", 1},
      {"verify numeric --samples 100 --seed 7", 1},
      {"", 2},
      {"analyze bogus", 2},
      {"criterion su11 --lambda 1e3", 2},
      {"criterion su11 --lambda abc", 2},
      {"criterion su23 --lambda -9 --lambda0 1,-1,0", 2},
      {"criterion su23 --lambda -9 --lambda0 1,0", 2},
      {"integrate su11 --lambda -3 --eps 0.1,2", 2},
      {"verify everything", 2},
      {"verify exact", 2, "HDT_SEED=abc"},
      {"catalog --output yaml", 2},
      {"criterion su11 --lambda -1", 3},
      {"criterion sp2 --lambda -2.0", 3},
      {"criterion e7vii --lambda -17", 3},
  };
  return cases;
}

}  // namespace hdt::testing
