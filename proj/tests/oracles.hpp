#pragma once

// Test-only reference implementations. Nothing here calls into the engine
// beyond reading a Game's option lists, so they can check it independently.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "thermocalc/games.hpp"

namespace oracle {

/// Numbers in birthday order, as integers scaled by 2^kShift.
struct BirthdayOrder {
  static constexpr int kShift = 16;
  std::vector<std::int64_t> values;  // day 0 first, then day 1, ...

  explicit BirthdayOrder(int days) {
    std::vector<std::int64_t> born{0};
    values.push_back(0);
    for (int d = 1; d <= days; ++d) {
      std::vector<std::int64_t> fresh{born.front() - (std::int64_t{1} << kShift),
                                      born.back() + (std::int64_t{1} << kShift)};
      for (std::size_t i = 0; i + 1 < born.size(); ++i) fresh.push_back((born[i] + born[i + 1]) / 2);
      values.insert(values.end(), fresh.begin(), fresh.end());
      born.insert(born.end(), fresh.begin(), fresh.end());
      std::sort(born.begin(), born.end());
    }
  }

  /// First number in birthday order strictly inside (lo, hi); bounds are
  /// scaled integers, with nullopt standing for an infinity.
  std::optional<std::int64_t> simplest(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi) const {
    for (auto v : values) {
      if ((!lo || *lo < v) && (!hi || v < *hi)) return v;
    }
    return std::nullopt;
  }
};

/// A plain game tree with the textbook comparison and no sharing or memo.
struct Tree {
  std::vector<Tree> left;
  std::vector<Tree> right;

  static Tree from(const thermocalc::Game& g) {
    Tree t;
    for (const auto& l : g.left_options()) t.left.push_back(from(l));
    for (const auto& r : g.right_options()) t.right.push_back(from(r));
    return t;
  }
};

inline bool geq(const Tree& g, const Tree& h) {
  for (const auto& gr : g.right) {
    if (geq(h, gr)) return false;
  }
  for (const auto& hl : h.left) {
    if (geq(hl, g)) return false;
  }
  return true;
}

inline bool equal(const Tree& g, const Tree& h) { return geq(g, h) && geq(h, g); }

inline Tree sum(const Tree& g, const Tree& h) {
  Tree t;
  for (const auto& gl : g.left) t.left.push_back(sum(gl, h));
  for (const auto& hl : h.left) t.left.push_back(sum(g, hl));
  for (const auto& gr : g.right) t.right.push_back(sum(gr, h));
  for (const auto& hr : h.right) t.right.push_back(sum(g, hr));
  return t;
}

/// Integers and halves as explicit trees: n = {n-1|}, -n = {|-n+1}.
inline Tree integer(int n) {
  Tree t;
  if (n > 0) t.left.push_back(integer(n - 1));
  if (n < 0) t.right.push_back(integer(n + 1));
  return t;
}

inline Tree make(std::vector<Tree> l, std::vector<Tree> r) { return Tree{std::move(l), std::move(r)}; }

inline Tree star() { return make({integer(0)}, {integer(0)}); }

}  // namespace oracle
