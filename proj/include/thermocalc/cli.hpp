#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thermocalc/checks.hpp"
#include "thermocalc/render.hpp"

namespace thermocalc::cli {

enum class Verb { eval, canonical, compare, stops, temp, mean, classify, cool, thermo, is_int, selftest };

struct Command {
  Verb verb = Verb::eval;
  std::vector<std::string> games;     // unparsed expressions
  std::optional<std::string> cool_t;  // -t for cool
  RenderFormat format = RenderFormat::ascii;
  RenderOptions render;
  bool raw = false;
  SelftestOptions selftest;
  std::size_t cache_limit = 0;
};

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv-style arguments (without the program name). Applies the
/// configuration precedence flags > THERMOCALC_* environment > --config
/// file > defaults. Usage errors come back as a Result with status 2.
struct Parsed {
  std::optional<Command> command;
  Result early;  // help text or usage error when command is empty
};
Parsed parse_command_line(const std::vector<std::string>& args);

Result run(const Command& cmd);

/// parse_command_line + run.
Result run_args(const std::vector<std::string>& args);

}  // namespace thermocalc::cli
