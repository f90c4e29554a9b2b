#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermocalc/dyadic.hpp"

namespace thermocalc {

class Game;

namespace detail {
struct GameNode;
}

/// A short game as a formal tree {left options | right options}.
///
/// Games are interned: two trees with the same option lists (in the same
/// order) are the same node, so equality and hashing are by identity and
/// every memo table keys on `id()`. Duplicate options are kept as given.
class Game {
 public:
  /// The empty game {|}.
  Game();

  static Game make(std::vector<Game> left, std::vector<Game> right);

  std::span<const Game> left_options() const noexcept;
  std::span<const Game> right_options() const noexcept;

  /// Interning identity; 0 is the empty game.
  std::uint64_t id() const noexcept;

  /// Formal birthday: 0 for {|}, otherwise 1 + the largest option birthday.
  std::uint32_t birthday() const noexcept;

  friend bool operator==(const Game& a, const Game& b) noexcept { return a.node_ == b.node_; }

 private:
  explicit Game(const detail::GameNode* node) : node_(node) {}

  const detail::GameNode* node_;
};

/// Number of distinct interned nodes so far.
std::size_t interned_game_count();

enum class Relation { greater, less, equal, confused };

/// ">", "<", "=", "||".
std::string_view to_symbol(Relation r);

struct Stops {
  Dyadic left;
  Dyadic right;

  friend bool operator==(const Stops&, const Stops&) = default;
};

inline std::uint32_t birthday(const Game& g) { return g.birthday(); }

Game star();

Game negate(const Game& g);
Game add(const Game& g, const Game& h);

inline Game operator-(const Game& g) { return negate(g); }
inline Game operator+(const Game& g, const Game& h) { return add(g, h); }
inline Game operator-(const Game& g, const Game& h) { return add(g, negate(h)); }

/// g >= h in the game order.
bool geq(const Game& g, const Game& h);
Relation compare_games(const Game& g, const Game& h);

/// g |> h: not (h >= g). The strict-or-confused relation.
inline bool greater_or_confused(const Game& g, const Game& h) { return !geq(h, g); }
/// g <| h.
inline bool less_or_confused(const Game& g, const Game& h) { return !geq(g, h); }

/// Canonical form: dominated options removed and reversible options
/// bypassed until neither applies.
Game canonicalize(const Game& g);

/// Canonical form of a dyadic: integers as {n-1|} / {|n+1}, k/2^m as
/// {(k-1)/2^m | (k+1)/2^m}.
Game number_to_game(const Dyadic& x);

std::optional<Dyadic> as_number(const Game& g);
std::optional<std::int64_t> as_integer(const Game& g);

Stops stops(const Game& g);

/// L(g) == R(g).
bool is_numberish(const Game& g);

/// Canonical sum of `count` copies of g, built by repeated canonical
/// addition so that large multiples stay small.
Game multiple(const Game& g, std::int64_t count);

}  // namespace thermocalc

template <>
struct std::hash<thermocalc::Game> {
  std::size_t operator()(const thermocalc::Game& g) const noexcept { return std::hash<std::uint64_t>{}(g.id()); }
};
