#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "ekr/tables.hpp"

namespace ekr {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct RunConfig {
  std::uint32_t q = 0;
  std::uint32_t ell = 0;
  std::string command;
  std::string table;  // report only
  Format format = Format::Json;
  std::filesystem::path out;  // empty: stdout
  std::filesystem::path cache_dir;
  std::filesystem::path edges;  // bruteforce only
  bool slow = false;
  unsigned threads = 0;
  std::uint32_t max_q = 0;  // certify-all only
};

int cmd_certify(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_bruteforce(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_certify_all(const RunConfig& rc, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches. Exit codes: 0 success, 1 a failed check,
/// 2 invalid configuration or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ekr
