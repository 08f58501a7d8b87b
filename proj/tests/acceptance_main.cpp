// Acceptance gate: one pass/fail line per registered check, plus an
// end-to-end pass over the command-line binary (located via FRAMEFORGE_CLI)
// covering exit codes and byte-identical reports across worker counts.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frameforge/verification.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& cli, const std::string& args, int threads,
                      const std::string& out_path) {
  const std::string command = "FRAMEFORGE_THREADS=" + std::to_string(threads) + " \"" + cli +
                              "\" " + args + " > " + out_path + " 2> /dev/null";
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(out_path);
  return result;
}

// Exercises the real binary: expected exit codes, and byte-identical output
// between 1 and 8 worker threads for every subcommand.
frameforge::CheckResult run_cli_determinism() {
  frameforge::CheckResult result;
  result.name = "cli-determinism";
  result.passed = true;

  const char* cli_env = std::getenv("FRAMEFORGE_CLI");
  if (!cli_env || !*cli_env) {
    result.passed = false;
    result.detail = "FRAMEFORGE_CLI is not set, cannot locate the binary";
    return result;
  }
  const std::string cli = cli_env;

  struct Case {
    std::string args;
    int expected_exit;
  };
  const std::vector<Case> cases = {
      {"classify example1 --grid 64", 0},
      {"classify bessel-not-frame --grid 128", 0},
      {"certify example1 --grid 64 --matrix "
       "'[[[-8,0],[1,0],[0,0]],[[4,0],[0,0],[1,0]]]'",
       0},
      {"certify example2 --grid 64 --method both --matrix '[[[0.6,0],[0.8,0]]]'", 1},
      {"certify paley --grid 64 --method geometric --matrix '[[1,1]]'", 0},
      {"scan paley --ell 1 --trials 20 --seed 3 --grid 32", 0},
      {"profile paley --grid 16 --matrix '[[1,1]]'", 0},
      {"reproduce-paper example1-classification", 0},
  };

  std::string detail;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string base = "acceptance-cli-" + std::to_string(i);
    const CommandResult serial = run_cli(cli, cases[i].args, 1, base + "-t1.txt");
    const CommandResult threaded = run_cli(cli, cases[i].args, 8, base + "-t8.txt");
    if (serial.exit_code != cases[i].expected_exit) {
      result.passed = false;
      detail += "'" + cases[i].args + "' exited " + std::to_string(serial.exit_code) +
                " instead of " + std::to_string(cases[i].expected_exit) + "; ";
    }
    if (serial.exit_code != threaded.exit_code || serial.output != threaded.output) {
      result.passed = false;
      detail += "'" + cases[i].args + "' differs between 1 and 8 threads; ";
    }
    if (serial.output.empty()) {
      result.passed = false;
      detail += "'" + cases[i].args + "' produced no output; ";
    }
    std::remove((base + "-t1.txt").c_str());
    std::remove((base + "-t8.txt").c_str());
  }

  // Error paths: unknown scenario and malformed matrix are reported, not
  // crashed on.
  const CommandResult unknown = run_cli(cli, "classify no-such-scenario", 1, "acceptance-err.txt");
  if (unknown.exit_code != 2) {
    result.passed = false;
    detail += "unknown scenario exited " + std::to_string(unknown.exit_code) + " instead of 2; ";
  }
  const CommandResult garbled =
      run_cli(cli, "certify paley --matrix '[[oops'", 1, "acceptance-err.txt");
  if (garbled.exit_code != 2) {
    result.passed = false;
    detail += "malformed matrix exited " + std::to_string(garbled.exit_code) + " instead of 2; ";
  }
  std::remove("acceptance-err.txt");

  result.detail = result.passed
                      ? std::to_string(cases.size()) +
                            " commands byte-identical across worker counts, exit codes as "
                            "documented"
                      : detail;
  return result;
}

}  // namespace

int main() {
  int failures = 0;
  int index = 0;
  const auto& names = frameforge::verification_check_names();
  for (const auto& name : names) {
    ++index;
    const frameforge::CheckResult result = frameforge::run_verification_check(name);
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << "criterion " << index << " (" << name
              << ")";
    if (!result.detail.empty()) std::cout << ": " << result.detail;
    std::cout << "\n" << std::flush;
    if (!result.passed) ++failures;
  }

  // The determinism criterion extends to the shipped binary.
  const frameforge::CheckResult cli = run_cli_determinism();
  std::cout << (cli.passed ? "[PASS] " : "[FAIL] ") << "criterion 10 (" << cli.name
            << "): " << cli.detail << "\n";
  if (!cli.passed) ++failures;

  const int total = static_cast<int>(names.size()) + 1;
  std::cout << (total - failures) << "/" << total << " acceptance checks passed" << std::endl;
  return failures;
}
