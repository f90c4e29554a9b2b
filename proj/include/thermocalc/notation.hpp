#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thermocalc/games.hpp"

namespace thermocalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message, bool non_dyadic = false)
      : std::runtime_error("at column " + std::to_string(position + 1) + ": " + message),
        position_(position),
        non_dyadic_(non_dyadic) {}

  /// Zero-based offset into the input.
  std::size_t position() const noexcept { return position_; }
  /// The literal was a fraction with a denominator that is not a power of two.
  bool non_dyadic() const noexcept { return non_dyadic_; }

 private:
  std::size_t position_;
  bool non_dyadic_;
};

/// Parses brace notation:
///
///   expr    := term (("+" | "-") term)*
///   term    := "-" term | dyadic | "*" | "{" list? "|" list? "}" | "(" expr ")"
///   list    := expr ("," expr)*
///
/// Dyadic literals become their canonical forms, "*" is {0|0}, and "+"
/// builds the formal disjunctive sum.
Game parse_expression(std::string_view text);

/// Brace notation that parses back to the identical game. Canonical
/// numbers print as literals and {0|0} as "*".
std::string to_brace_notation(const Game& g);

}  // namespace thermocalc
