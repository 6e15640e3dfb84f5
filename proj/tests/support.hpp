// Helpers shared by the CLI-facing tests and the acceptance suite.
#pragma once

#include <atomic>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "gridbasis/perm.hpp"

namespace support {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with the given argument string through /bin/sh; env_prefix
// may carry VAR=value assignments.
inline CliResult run_cli(const std::string& cli_path, const std::string& args,
                         const std::string& env_prefix = "") {
  static std::atomic<int> counter{0};
  const std::string err_file =
      "/tmp/gridbasis_test_err_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  std::string command;
  if (!env_prefix.empty()) command += env_prefix + " ";
  command += "\"" + cli_path + "\" " + args + " 2>" + err_file;

  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);

  std::ifstream err_in(err_file);
  std::stringstream err_text;
  err_text << err_in.rdbuf();
  result.err = err_text.str();
  std::remove(err_file.c_str());
  return result;
}

// Validates the stable report schema; returns a diagnostic on failure.
inline std::optional<std::string> check_report_schema(const nlohmann::json& j) {
  if (!j.is_object()) return "report is not an object";
  if (!j.contains("class") || !j["class"].is_string()) return "missing string field 'class'";
  if (!j.contains("max_len") || !j["max_len"].is_number_integer())
    return "missing integer field 'max_len'";
  if (!j.contains("lookahead") || !j["lookahead"].is_number_integer())
    return "missing integer field 'lookahead'";
  if (!j.contains("stabilized_at") ||
      !(j["stabilized_at"].is_null() || j["stabilized_at"].is_number_integer()))
    return "field 'stabilized_at' must be int or null";
  if (!j.contains("basis") || !j["basis"].is_array()) return "missing array field 'basis'";
  std::vector<std::vector<int>> basis;
  for (const auto& elem : j["basis"]) {
    if (!elem.is_array()) return "basis element is not an array";
    std::vector<int> ranks;
    for (const auto& r : elem) {
      if (!r.is_number_integer()) return "basis rank is not an integer";
      ranks.push_back(r.get<int>());
    }
    basis.push_back(std::move(ranks));
  }
  auto key = [](const std::vector<int>& p) { return std::make_pair(p.size(), p); };
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (key(basis[i - 1]) > key(basis[i])) return "basis is not sorted by (length, lex)";
  if (!j.contains("members_by_length") || !j["members_by_length"].is_object())
    return "missing object field 'members_by_length'";
  for (const auto& [k, v] : j["members_by_length"].items()) {
    if (k.find_first_not_of("0123456789") != std::string::npos)
      return "members_by_length key is not a length";
    if (!v.is_number_integer()) return "members_by_length value is not an integer";
  }
  return std::nullopt;
}

inline std::vector<gridbasis::Permutation> perms_of_length(int n) {
  std::vector<gridbasis::Permutation> out;
  for (const auto& p : gridbasis::all_permutations(n)) out.push_back(p);
  return out;
}

inline std::vector<gridbasis::Permutation> perms_up_to(int max_len) {
  std::vector<gridbasis::Permutation> out;
  for (int n = 0; n <= max_len; ++n) {
    auto level = perms_of_length(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace support
