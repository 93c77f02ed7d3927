#pragma once

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <string>

// Runs a shell command and captures its stdout, exit code and wall time.
struct CommandResult {
  std::string out;
  int exit_code = -1;
  double seconds = 0;
};

inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string tlh_command(const std::string& args, const std::string& env = {}) {
  return (env.empty() ? "" : env + " ") + std::string(TLH_CLI_PATH) + " " + args + " 2>/dev/null";
}

/// The JSON envelope with the trailing timing field removed.
inline std::string without_timing(const std::string& json) {
  const auto pos = json.rfind(",\"timing_ms\":");
  return pos == std::string::npos ? json : json.substr(0, pos);
}

/// The value of the "result" field in a JSON envelope.
inline std::string result_field(const std::string& json) {
  const auto start = json.find("\"result\":");
  if (start == std::string::npos) return {};
  const auto begin = start + 9;
  int depth = 0;
  for (std::size_t i = begin; i < json.size(); ++i) {
    if (json[i] == '{' || json[i] == '[') ++depth;
    if (json[i] == '}' || json[i] == ']') --depth;
    if (depth == 0) return json.substr(begin, i - begin + 1);
  }
  return {};
}
