#include "thermocalc/thermo.hpp"

#include <memory>
#include <stdexcept>

#include "thermocalc/memo.hpp"

namespace thermocalc {

namespace {

using detail::MemoTable;

struct CoolKey {
  std::uint64_t game;
  Dyadic t;

  friend bool operator==(const CoolKey&, const CoolKey&) = default;
};

struct CoolKeyHash {
  std::size_t operator()(const CoolKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.game) * 31 + std::hash<Dyadic>{}(k.t);
  }
};

void require_domain(const Dyadic& t) {
  if (t < kDomainStart) {
    throw std::invalid_argument("cooling below t=-1 is outside the supported domain (t=" + t.to_string() + ")");
  }
}

void require_options(const Game& g) {
  // A game lacking left or right options always equals an integer.
  if (g.left_options().empty() || g.right_options().empty()) {
    throw std::logic_error("non-integer game with an empty option list");
  }
}

std::shared_ptr<const CoolingRecord> cooling_record_ptr(const Game& g);
std::shared_ptr<const Thermograph> thermograph_ptr(const Game& g);

Game translate_canonical(const Game& g, const Dyadic& by) { return canonicalize(add(g, number_to_game(by))); }

Game build_cooled_raw(const Game& g, const Dyadic& t) {
  std::vector<Game> left;
  std::vector<Game> right;
  left.reserve(g.left_options().size());
  right.reserve(g.right_options().size());
  for (const auto& gl : g.left_options()) left.push_back(translate_canonical(cooled(gl, t), -t));
  for (const auto& gr : g.right_options()) right.push_back(translate_canonical(cooled(gr, t), t));
  return Game::make(std::move(left), std::move(right));
}

}  // namespace

std::pair<std::int64_t, std::int64_t> integer_bounds(const Game& g) {
  static MemoTable<std::uint64_t, std::pair<std::int64_t, std::int64_t>> memo;
  if (auto hit = memo.find(g.id())) return *hit;
  std::pair<std::int64_t, std::int64_t> result;
  if (auto n = as_integer(g)) {
    result = {*n, *n};
  } else {
    require_options(g);
    std::optional<std::int64_t> upper;
    for (const auto& gl : g.left_options()) {
      std::int64_t v = integer_bounds(gl).second + 1;
      if (!upper || *upper < v) upper = v;
    }
    std::optional<std::int64_t> lower;
    for (const auto& gr : g.right_options()) {
      std::int64_t v = integer_bounds(gr).first - 1;
      if (!lower || v < *lower) lower = v;
    }
    result = {*upper, *lower};
  }
  memo.insert(g.id(), result);
  return result;
}

namespace {

std::shared_ptr<const CoolingRecord> cooling_record_ptr(const Game& g) {
  static MemoTable<std::uint64_t, std::shared_ptr<const CoolingRecord>> memo;
  if (auto hit = memo.find(g.id())) return *hit;
  if (as_integer(g)) throw std::invalid_argument("cooling_record: game equals an integer");
  require_options(g);

  std::optional<Trajectory> raw_left;
  for (const auto& gl : g.left_options()) {
    Trajectory candidate = add_linear(thermograph_ptr(gl)->right, -1, 0);
    raw_left = raw_left ? pointwise_max(*raw_left, candidate) : std::move(candidate);
  }
  std::optional<Trajectory> raw_right;
  for (const auto& gr : g.right_options()) {
    Trajectory candidate = add_linear(thermograph_ptr(gr)->left, +1, 0);
    raw_right = raw_right ? pointwise_min(*raw_right, candidate) : std::move(candidate);
  }
  auto [upper, lower] = integer_bounds(g);
  auto record = std::make_shared<const CoolingRecord>(CoolingRecord{std::move(*raw_left), std::move(*raw_right), upper, lower});
  memo.insert(g.id(), record);
  return record;
}

std::shared_ptr<const Thermograph> thermograph_ptr(const Game& g) {
  static MemoTable<std::uint64_t, std::shared_ptr<const Thermograph>> memo;
  if (auto hit = memo.find(g.id())) return *hit;
  std::shared_ptr<const Thermograph> result;
  if (auto n = as_integer(g)) {
    Trajectory flat = Trajectory::constant(kDomainStart, *n);
    result = std::make_shared<const Thermograph>(Thermograph{flat, flat, ExtendedDyadic::neg_infinity(), *n});
  } else {
    auto record = cooling_record_ptr(g);
    auto [t0, x] = first_meet(record->raw_left, record->raw_right);
    result = std::make_shared<const Thermograph>(
        Thermograph{record->raw_left.frozen_after(t0), record->raw_right.frozen_after(t0), t0, x});
  }
  memo.insert(g.id(), result);
  return result;
}

}  // namespace

CoolingRecord cooling_record(const Game& g) { return *cooling_record_ptr(g); }

Thermograph thermograph(const Game& g) { return *thermograph_ptr(g); }

ExtendedDyadic temperature(const Game& g) { return thermograph_ptr(g)->temp; }

Game cooled(const Game& g, const Dyadic& t) {
  static MemoTable<CoolKey, Game, CoolKeyHash> memo;
  require_domain(t);
  const CoolKey key{g.id(), t};
  if (auto hit = memo.find(key)) return *hit;
  Game result;
  if (auto n = as_integer(g)) {
    result = number_to_game(*n);
  } else {
    auto tg = thermograph_ptr(g);
    result = ExtendedDyadic(t) <= tg->temp ? build_cooled_raw(g, t) : number_to_game(tg->mast_value);
  }
  memo.insert(key, result);
  return result;
}

Game cooled_raw(const Game& g, const Dyadic& t) {
  require_domain(t);
  if (as_integer(g)) throw std::invalid_argument("cooled_raw: game equals an integer");
  return build_cooled_raw(g, t);
}

Dyadic mean_value(const Game& g) { return thermograph_ptr(g)->mast_value; }

TempClass classify(const Game& g) {
  const ExtendedDyadic t = temperature(g);
  if (t < ExtendedDyadic(0)) return TempClass::number;
  if (t == ExtendedDyadic(0)) return TempClass::numberish_not_number;
  return TempClass::hot;
}

IntegerDecision integer_decision_trace(const Game& g) {
  IntegerDecision out{ExtendedDyadic::neg_infinity(), ExtendedDyadic::pos_infinity(), std::nullopt};

  if (!g.left_options().empty()) {
    std::optional<Dyadic> best;
    for (const auto& gl : g.left_options()) {
      Dyadic v = thermograph_ptr(gl)->right.eval(0);
      if (!best || *best < v) best = v;
    }
    bool bump = false;
    if (best->is_integer()) {
      for (const auto& gl : g.left_options()) {
        const auto as_int = integer_decision(gl);
        if (as_int && Dyadic(*as_int) == *best) {
          bump = true;  // the option is that integer
        } else if (!as_int && thermograph_ptr(gl)->right.eval(0) == *best &&
                   cooling_record_ptr(gl)->raw_right.slope_left_of(0) == Slope::flat) {
          bump = true;  // attains the maximum with a flat scaffold just below 0
        }
        if (bump) break;
      }
    }
    out.lower = bump ? *best + 1 : *best;
  }

  if (!g.right_options().empty()) {
    std::optional<Dyadic> best;
    for (const auto& gr : g.right_options()) {
      Dyadic v = thermograph_ptr(gr)->left.eval(0);
      if (!best || v < *best) best = v;
    }
    bool bump = false;
    if (best->is_integer()) {
      for (const auto& gr : g.right_options()) {
        const auto as_int = integer_decision(gr);
        if (as_int && Dyadic(*as_int) == *best) {
          bump = true;
        } else if (!as_int && thermograph_ptr(gr)->left.eval(0) == *best &&
                   cooling_record_ptr(gr)->raw_left.slope_left_of(0) == Slope::flat) {
          bump = true;
        }
        if (bump) break;
      }
    }
    out.upper = bump ? *best - 1 : *best;
  }

  // S = integers in [l, r]; pick the one of least absolute value.
  const std::optional<std::int64_t> first =
      out.lower.is_finite() ? std::optional<std::int64_t>(out.lower.value().ceil()) : std::nullopt;
  const std::optional<std::int64_t> last =
      out.upper.is_finite() ? std::optional<std::int64_t>(out.upper.value().floor()) : std::nullopt;
  if (first && last && *first > *last) return out;
  if (first && *first > 0) {
    out.value = *first;
  } else if (last && *last < 0) {
    out.value = *last;
  } else {
    out.value = 0;
  }
  return out;
}

std::optional<std::int64_t> integer_decision(const Game& g) {
  static MemoTable<std::uint64_t, std::optional<std::int64_t>> memo;
  if (auto hit = memo.find(g.id())) return *hit;
  auto value = integer_decision_trace(g).value;
  memo.insert(g.id(), value);
  return value;
}

bool mean_bound_check(const Game& g, std::int64_t n, const Dyadic& t) {
  if (n < 1) throw std::invalid_argument("mean_bound_check: n must be positive");
  if (!(temperature(g) < ExtendedDyadic(t))) {
    throw std::invalid_argument("mean_bound_check: t must exceed the temperature");
  }
  const auto frozen = as_number(cooled(g, t));
  if (!frozen) throw std::logic_error("mean_bound_check: cooled game above temperature is not a number");
  const Dyadic centre = *frozen * n;
  const Dyadic slack = t + 1;
  const Game sum = multiple(g, n);
  const Game lower = number_to_game(centre - slack);
  const Game upper = number_to_game(centre + slack);
  return compare_games(sum, lower) == Relation::greater && compare_games(upper, sum) == Relation::greater;
}

}  // namespace thermocalc
