#include "thermocalc/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace thermocalc {

std::vector<Game> atom_games() {
  const Dyadic half = Dyadic::from_parts(1, 1);
  return {Game(), star(), number_to_game(1), number_to_game(-1), number_to_game(half), number_to_game(-half)};
}

std::vector<std::vector<Game>> option_multisets(const std::vector<Game>& pool, std::size_t max_size) {
  std::vector<std::vector<Game>> out{{}};
  std::vector<std::size_t> idx;
  // Non-decreasing index sequences enumerate multisets once each.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (idx.size() == max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      idx.push_back(i);
      std::vector<Game> opts;
      for (auto k : idx) opts.push_back(pool[k]);
      out.push_back(std::move(opts));
      self(self, i);
      idx.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Game> games_over(const std::vector<Game>& pool, std::size_t max_size) {
  const auto lists = option_multisets(pool, max_size);
  std::vector<Game> out;
  out.reserve(lists.size() * lists.size());
  for (const auto& l : lists) {
    for (const auto& r : lists) out.push_back(Game::make(l, r));
  }
  return out;
}

std::vector<Game> atom_option_games() { return games_over(atom_games(), 2); }

std::vector<Game> canonical_games_born_by(int day) {
  if (day < 0 || day > 2) throw std::invalid_argument("canonical_games_born_by supports days 0..2");
  std::vector<Game> current{Game()};
  for (int d = 1; d <= day; ++d) {
    std::vector<std::vector<Game>> subsets;
    const std::size_t n = current.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Game> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) s.push_back(current[i]);
      }
      subsets.push_back(std::move(s));
    }
    std::vector<Game> next;
    std::unordered_set<Game> seen;
    for (const auto& l : subsets) {
      for (const auto& r : subsets) {
        Game c = canonicalize(Game::make(l, r));
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    current = std::move(next);
  }
  return current;
}

Game RandomGames::next(std::uint32_t max_birthday) {
  static const std::vector<Game> atoms = atom_games();
  std::vector<Game> leaves;
  for (const auto& a : atoms) {
    if (a.birthday() <= max_birthday) leaves.push_back(a);
  }
  std::uniform_int_distribution<int> coin(0, 3);
  if (max_birthday == 0 || (max_birthday <= 2 && coin(rng_) == 0)) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    return leaves[pick(rng_)];
  }
  // Option counts 1..2 mostly, occasionally an empty side.
  std::discrete_distribution<int> count({1, 5, 4});
  std::vector<Game> left;
  std::vector<Game> right;
  const int nl = count(rng_);
  const int nr = count(rng_);
  for (int i = 0; i < nl; ++i) left.push_back(next(max_birthday - 1));
  for (int i = 0; i < nr; ++i) right.push_back(next(max_birthday - 1));
  return Game::make(std::move(left), std::move(right));
}

std::vector<Game> random_games(std::size_t count, std::uint32_t max_birthday, std::uint64_t seed) {
  RandomGames gen(seed);
  std::vector<Game> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next(max_birthday));
  return out;
}

}  // namespace thermocalc
