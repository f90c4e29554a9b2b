#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thermocalc/games.hpp"

namespace thermocalc {

/// 0, *, 1, -1, 1/2, -1/2 in canonical form.
std::vector<Game> atom_games();

/// Every multiset of size <= max_size drawn from pool, as option lists in
/// pool order (the empty list included).
std::vector<std::vector<Game>> option_multisets(const std::vector<Game>& pool, std::size_t max_size);

/// All {L | R} with L and R option multisets of size <= 2 over the atoms.
std::vector<Game> atom_option_games();

/// {L | R} for L, R option multisets of size <= max_size over pool.
std::vector<Game> games_over(const std::vector<Game>& pool, std::size_t max_size);

/// Canonical forms of every game born by the given day (0, 1 or 2).
std::vector<Game> canonical_games_born_by(int day);

/// Deterministic random formal game trees.
class RandomGames {
 public:
  explicit RandomGames(std::uint64_t seed) : rng_(seed) {}

  /// A tree of formal birthday <= max_birthday with at most two options per
  /// side; leaves are drawn from the atoms.
  Game next(std::uint32_t max_birthday);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::vector<Game> random_games(std::size_t count, std::uint32_t max_birthday, std::uint64_t seed);

}  // namespace thermocalc
