#include "thermocalc/games.hpp"

#include <algorithm>
#include <compare>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "thermocalc/memo.hpp"

namespace thermocalc {

namespace detail {

struct GameNode {
  std::vector<Game> left;
  std::vector<Game> right;
  std::uint64_t id = 0;
  std::uint32_t birthday = 0;
};

}  // namespace detail

namespace {

using detail::GameNode;
using detail::MemoTable;
using detail::PairHash;
using IdPair = std::pair<std::uint64_t, std::uint64_t>;

// Lookup probe: the option lists of a node that may not exist yet.
struct InternProbe {
  std::span<const Game> left;
  std::span<const Game> right;
};

struct InternHash {
  using is_transparent = void;
  std::size_t operator()(const InternProbe& p) const noexcept {
    std::size_t h = p.left.size() * 0x9e3779b97f4a7c15ULL;
    for (const auto& g : p.left) h = (h ^ std::hash<std::uint64_t>{}(g.id())) * 0x100000001b3ULL;
    h ^= 0xff;
    for (const auto& g : p.right) h = (h ^ std::hash<std::uint64_t>{}(g.id())) * 0x100000001b3ULL;
    return h;
  }
  std::size_t operator()(const GameNode* n) const noexcept { return (*this)(InternProbe{n->left, n->right}); }
};

struct InternEq {
  using is_transparent = void;
  static bool same(std::span<const Game> a, std::span<const Game> b) { return std::ranges::equal(a, b); }
  bool operator()(const InternProbe& p, const GameNode* n) const noexcept {
    return same(p.left, n->left) && same(p.right, n->right);
  }
  bool operator()(const GameNode* n, const InternProbe& p) const noexcept { return (*this)(p, n); }
  bool operator()(const GameNode* a, const GameNode* b) const noexcept { return a == b; }
};

class InternTable {
 public:
  const GameNode* intern(std::vector<Game> left, std::vector<Game> right) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(InternProbe{left, right});
    if (it != index_.end()) return *it;
    std::uint32_t birthday = 0;
    for (const auto& g : left) birthday = std::max(birthday, g.birthday() + 1);
    for (const auto& g : right) birthday = std::max(birthday, g.birthday() + 1);
    GameNode& node = nodes_.emplace_back();
    node.left = std::move(left);
    node.right = std::move(right);
    node.id = nodes_.size() - 1;
    node.birthday = birthday;
    index_.insert(&node);
    return &node;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<GameNode> nodes_;
  std::unordered_set<const GameNode*, InternHash, InternEq> index_;
};

InternTable& intern_table() {
  // Leaked on purpose: nodes must outlive every static memo table.
  static InternTable* table = new InternTable;
  return *table;
}

const GameNode* zero_node() {
  static const GameNode* zero = intern_table().intern({}, {});
  return zero;
}

IdPair key_of(const Game& a, const Game& b) { return {a.id(), b.id()}; }

void dedupe(std::vector<Game>& options) {
  std::vector<Game> out;
  out.reserve(options.size());
  for (const auto& g : options) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  options = std::move(out);
}

// Structural total order, so that a canonical option set has one listing.
std::strong_ordering structural(const Game& a, const Game& b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.birthday() <=> b.birthday(); c != 0) return c;
  auto lists = [](std::span<const Game> x, std::span<const Game> y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (auto c = structural(x[i], y[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  };
  if (auto c = lists(a.left_options(), b.left_options()); c != 0) return c;
  return lists(a.right_options(), b.right_options());
}

void dedupe_sorted(std::vector<Game>& options) {
  dedupe(options);
  std::sort(options.begin(), options.end(), [](const Game& a, const Game& b) { return structural(a, b) < 0; });
}

}  // namespace

Game::Game() : node_(zero_node()) {}

Game Game::make(std::vector<Game> left, std::vector<Game> right) {
  return Game(intern_table().intern(std::move(left), std::move(right)));
}

std::span<const Game> Game::left_options() const noexcept { return node_->left; }
std::span<const Game> Game::right_options() const noexcept { return node_->right; }
std::uint64_t Game::id() const noexcept { return node_->id; }
std::uint32_t Game::birthday() const noexcept { return node_->birthday; }

std::size_t interned_game_count() { return intern_table().size(); }

std::string_view to_symbol(Relation r) {
  switch (r) {
    case Relation::greater: return ">";
    case Relation::less: return "<";
    case Relation::equal: return "=";
    case Relation::confused: return "||";
  }
  return "?";
}

Game star() {
  static const Game s = Game::make({Game()}, {Game()});
  return s;
}

Game negate(const Game& g) {
  static MemoTable<std::uint64_t, Game> memo;
  if (g.left_options().empty() && g.right_options().empty()) return g;
  if (auto hit = memo.find(g.id())) return *hit;
  std::vector<Game> left;
  std::vector<Game> right;
  for (const auto& r : g.right_options()) left.push_back(negate(r));
  for (const auto& l : g.left_options()) right.push_back(negate(l));
  Game result = Game::make(std::move(left), std::move(right));
  memo.insert(g.id(), result);
  return result;
}

Game add(const Game& g, const Game& h) {
  static MemoTable<IdPair, Game, PairHash> memo;
  // g + {|} unfolds to a tree identical to g.
  if (h.id() == 0) return g;
  if (g.id() == 0) return h;
  if (auto hit = memo.find(key_of(g, h))) return *hit;
  std::vector<Game> left;
  std::vector<Game> right;
  left.reserve(g.left_options().size() + h.left_options().size());
  right.reserve(g.right_options().size() + h.right_options().size());
  for (const auto& gl : g.left_options()) left.push_back(add(gl, h));
  for (const auto& hl : h.left_options()) left.push_back(add(g, hl));
  for (const auto& gr : g.right_options()) right.push_back(add(gr, h));
  for (const auto& hr : h.right_options()) right.push_back(add(g, hr));
  Game result = Game::make(std::move(left), std::move(right));
  memo.insert(key_of(g, h), result);
  return result;
}

bool geq(const Game& g, const Game& h) {
  static MemoTable<IdPair, bool, PairHash> memo;
  if (g == h) return true;
  if (auto hit = memo.find(key_of(g, h))) return *hit;
  bool result = true;
  // No G^R <= H and no H^L >= G.
  for (const auto& gr : g.right_options()) {
    if (geq(h, gr)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (const auto& hl : h.left_options()) {
      if (geq(hl, g)) {
        result = false;
        break;
      }
    }
  }
  memo.insert(key_of(g, h), result);
  return result;
}

Relation compare_games(const Game& g, const Game& h) {
  const bool ge = geq(g, h);
  const bool le = geq(h, g);
  if (ge && le) return Relation::equal;
  if (ge) return Relation::greater;
  if (le) return Relation::less;
  return Relation::confused;
}

Game canonicalize(const Game& g) {
  static MemoTable<std::uint64_t, Game> memo;
  if (auto hit = memo.find(g.id())) return *hit;

  std::vector<Game> left;
  std::vector<Game> right;
  for (const auto& gl : g.left_options()) left.push_back(canonicalize(gl));
  for (const auto& gr : g.right_options()) right.push_back(canonicalize(gr));
  dedupe_sorted(left);
  dedupe_sorted(right);

  // Every rewrite below preserves the value, so comparisons may use any
  // intermediate form; the one built from canonical options is the smallest.
  Game current = Game::make(left, right);
  if (current != g) {
    if (auto hit = memo.find(current.id())) {
      memo.insert(g.id(), *hit);
      return *hit;
    }
  }
  const Game reference = current;

  for (;;) {
    // Dominated options. Of two equal options the earlier one stays.
    auto prune = [](std::vector<Game>& options, bool keep_max) {
      std::vector<Game> kept;
      for (std::size_t i = 0; i < options.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
          if (i == j) continue;
          const Game& upper = keep_max ? options[j] : options[i];
          const Game& lower = keep_max ? options[i] : options[j];
          if (!geq(upper, lower)) continue;
          dominated = j < i || !geq(lower, upper);
        }
        if (!dominated) kept.push_back(options[i]);
      }
      options = std::move(kept);
    };
    prune(left, true);
    prune(right, false);

    bool changed = false;
    std::vector<Game> next_left;
    for (const auto& gl : left) {
      const Game* reversal = nullptr;
      for (const auto& glr : gl.right_options()) {
        if (geq(reference, glr)) {
          reversal = &glr;
          break;
        }
      }
      if (reversal) {
        changed = true;
        for (const auto& x : reversal->left_options()) next_left.push_back(x);
      } else {
        next_left.push_back(gl);
      }
    }
    std::vector<Game> next_right;
    for (const auto& gr : right) {
      const Game* reversal = nullptr;
      for (const auto& grl : gr.left_options()) {
        if (geq(grl, reference)) {
          reversal = &grl;
          break;
        }
      }
      if (reversal) {
        changed = true;
        for (const auto& x : reversal->right_options()) next_right.push_back(x);
      } else {
        next_right.push_back(gr);
      }
    }
    left = std::move(next_left);
    right = std::move(next_right);
    dedupe_sorted(left);
    dedupe_sorted(right);
    if (!changed) break;
  }

  Game result = Game::make(std::move(left), std::move(right));
  memo.insert(g.id(), result);
  memo.insert(reference.id(), result);
  memo.insert(result.id(), result);
  return result;
}

Game number_to_game(const Dyadic& x) {
  static MemoTable<Dyadic, Game> memo;
  if (auto hit = memo.find(x)) return *hit;
  Game result;
  if (x.is_integer()) {
    const std::int64_t n = x.numerator();
    if (n > 0) {
      result = Game::make({number_to_game(n - 1)}, {});
    } else if (n < 0) {
      result = Game::make({}, {number_to_game(n + 1)});
    }
  } else {
    const std::int64_t k = x.numerator();
    const std::int32_t m = x.exponent();
    result = Game::make({number_to_game(Dyadic::from_parts(k - 1, m))}, {number_to_game(Dyadic::from_parts(k + 1, m))});
  }
  memo.insert(x, result);
  return result;
}

namespace {

// Value of a canonical form that is a number. A canonical number has only
// number options, so the Simplicity Theorem pins the value, and the form
// must then coincide with number_to_game of it.
std::optional<Dyadic> canonical_number_value(const Game& c) {
  static MemoTable<std::uint64_t, std::optional<Dyadic>> memo;
  if (auto hit = memo.find(c.id())) return *hit;
  std::optional<Dyadic> result;
  ExtendedDyadic lo = ExtendedDyadic::neg_infinity();
  ExtendedDyadic hi = ExtendedDyadic::pos_infinity();
  bool all_numbers = true;
  for (const auto& l : c.left_options()) {
    auto v = canonical_number_value(l);
    if (!v) {
      all_numbers = false;
      break;
    }
    lo = std::max(lo, ExtendedDyadic(*v));
  }
  if (all_numbers) {
    for (const auto& r : c.right_options()) {
      auto v = canonical_number_value(r);
      if (!v) {
        all_numbers = false;
        break;
      }
      hi = std::min(hi, ExtendedDyadic(*v));
    }
  }
  if (all_numbers && lo < hi) {
    Dyadic x = simplest_strictly_between(lo, hi);
    if (number_to_game(x) == c) result = x;
  }
  memo.insert(c.id(), result);
  return result;
}

}  // namespace

std::optional<Dyadic> as_number(const Game& g) { return canonical_number_value(canonicalize(g)); }

std::optional<std::int64_t> as_integer(const Game& g) {
  auto x = as_number(g);
  if (!x || !x->is_integer()) return std::nullopt;
  return x->numerator();
}

Stops stops(const Game& g) {
  static MemoTable<std::uint64_t, Stops> memo;
  if (auto hit = memo.find(g.id())) return *hit;
  Stops result;
  if (auto x = as_number(g)) {
    result = {*x, *x};
  } else {
    if (g.left_options().empty() || g.right_options().empty()) {
      throw std::logic_error("stops: a game with an empty option list must equal a number");
    }
    std::optional<Dyadic> left;
    for (const auto& gl : g.left_options()) {
      Dyadic v = stops(gl).right;
      if (!left || *left < v) left = v;
    }
    std::optional<Dyadic> right;
    for (const auto& gr : g.right_options()) {
      Dyadic v = stops(gr).left;
      if (!right || v < *right) right = v;
    }
    result = {*left, *right};
  }
  memo.insert(g.id(), result);
  return result;
}

bool is_numberish(const Game& g) {
  Stops s = stops(g);
  return s.left == s.right;
}

Game multiple(const Game& g, std::int64_t count) {
  if (count < 0) return multiple(negate(g), -count);
  const Game unit = canonicalize(g);
  Game total;
  for (std::int64_t i = 0; i < count; ++i) total = canonicalize(add(total, unit));
  return total;
}

}  // namespace thermocalc
