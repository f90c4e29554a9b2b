#pragma once

#include <cstdint>
#include <optional>

#include "thermocalc/dyadic.hpp"
#include "thermocalc/games.hpp"
#include "thermocalc/trajectory.hpp"

namespace thermocalc {

/// Lowest temperature the cooling engine materializes. Every non-integer
/// game has temperature strictly above it.
inline const Dyadic kDomainStart{-1};

/// Left and right scaffolds of a non-integer game before freezing, plus
/// the integer bounds they take at the domain start.
struct CoolingRecord {
  Trajectory raw_left;   // max over G^L of (rho_t(G^L) - t)
  Trajectory raw_right;  // min over G^R of (lambda_t(G^R) + t)
  std::int64_t int_upper;
  std::int64_t int_lower;
};

/// Thermograph: the scaffolds frozen at the mast above the temperature.
struct Thermograph {
  Trajectory left;
  Trajectory right;
  ExtendedDyadic temp;  // -inf exactly for integers
  Dyadic mast_value;

  friend bool operator==(const Thermograph&, const Thermograph&) = default;
};

enum class TempClass { number, numberish_not_number, hot };

/// Throws std::invalid_argument when g equals an integer.
CoolingRecord cooling_record(const Game& g);

/// The integer bounds (upper, lower); both equal n when g equals n.
std::pair<std::int64_t, std::int64_t> integer_bounds(const Game& g);

ExtendedDyadic temperature(const Game& g);
Thermograph thermograph(const Game& g);

/// g cooled by t. Throws std::invalid_argument for t < -1.
Game cooled(const Game& g, const Dyadic& t);

/// The unfrozen construction {(G^L)_t - t | (G^R)_t + t}. Throws
/// std::invalid_argument for integers or t < -1.
Game cooled_raw(const Game& g, const Dyadic& t);

Dyadic mean_value(const Game& g);
TempClass classify(const Game& g);

/// Intermediate quantities of the thermograph-based integer test.
struct IntegerDecision {
  ExtendedDyadic lower;  // l
  ExtendedDyadic upper;  // r
  std::optional<std::int64_t> value;
};

/// Decides whether g equals an integer from the options' thermographs alone,
/// without canonicalizing g itself.
IntegerDecision integer_decision_trace(const Game& g);
std::optional<std::int64_t> integer_decision(const Game& g);

/// Checks n*G_t - (t+1) < n*G < n*G_t + (t+1) by game comparison. Throws
/// std::invalid_argument unless t > t(G) and n >= 1.
bool mean_bound_check(const Game& g, std::int64_t n, const Dyadic& t);

}  // namespace thermocalc
