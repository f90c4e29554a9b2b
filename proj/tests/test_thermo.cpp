#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "thermocalc/corpus.hpp"
#include "thermocalc/notation.hpp"
#include "thermocalc/thermo.hpp"

using namespace thermocalc;

namespace {

const Dyadic kStart{-1};

Game g(const char* text) { return parse_expression(text); }
Game num(const char* text) { return number_to_game(Dyadic::parse(text)); }
Dyadic d(const char* s) { return Dyadic::parse(s); }

bool same_value(const Game& a, const Game& b) { return compare_games(a, b) == Relation::equal; }

Trajectory line(std::int64_t value_at_minus_one, Slope s) { return Trajectory::line(kStart, value_at_minus_one, s); }

}  // namespace

TEST_CASE("cooling records") {
  const auto s = cooling_record(star());
  CHECK(s.raw_left == line(1, Slope::down));   // -t
  CHECK(s.raw_right == line(-1, Slope::up));   // t
  const auto sw = cooling_record(g("{2|0}"));
  CHECK(sw.raw_left == line(3, Slope::down));  // 2 - t
  CHECK(sw.raw_right == line(-1, Slope::up));
  CHECK(sw.int_upper == 3);
  CHECK(sw.int_lower == -1);
  const auto h = cooling_record(num("1/2"));
  CHECK(h.raw_left == line(1, Slope::down));
  CHECK(h.raw_right == line(0, Slope::up));    // 1 + t
  CHECK_THROWS_AS(cooling_record(num("3")), std::invalid_argument);
  CHECK_THROWS_AS(cooling_record(g("{-1|1}")), std::invalid_argument);
}

TEST_CASE("integer bounds match the raw scaffolds at -1") {
  for (const Game& x : atom_option_games()) {
    if (as_integer(x)) {
      const auto [up, lo] = integer_bounds(x);
      CHECK(up == *as_integer(x));
      CHECK(lo == *as_integer(x));
      continue;
    }
    const auto rec = cooling_record(x);
    CHECK(rec.raw_left.eval(kStart) == rec.int_upper);
    CHECK(rec.raw_right.eval(kStart) == rec.int_lower);
  }
}

TEST_CASE("temperatures") {
  CHECK(temperature(num("5")).is_neg_inf());
  CHECK(temperature(star()) == ExtendedDyadic(0));
  CHECK(temperature(g("{2|0}")) == ExtendedDyadic(1));
  CHECK(temperature(g("{3|{2|-1}}")) == ExtendedDyadic(1));
  CHECK(temperature(g("{0|*}")) == ExtendedDyadic(0));
  for (int m = 1; m <= 5; ++m) {
    for (std::int64_t k = -9; k <= 9; k += 2) {
      CHECK(temperature(number_to_game(Dyadic::from_parts(k, m))) == ExtendedDyadic(-Dyadic::from_parts(1, m)));
    }
  }
}

TEST_CASE("thermographs") {
  const auto s = thermograph(star());
  CHECK(s.left == Trajectory(kStart, 1, {{Slope::down, 0}}, Slope::flat));
  CHECK(s.right == Trajectory(kStart, -1, {{Slope::up, 0}}, Slope::flat));
  CHECK(s.temp == ExtendedDyadic(0));
  CHECK(s.mast_value == 0);
  const auto sw = thermograph(g("{2|0}"));
  CHECK(sw.left == Trajectory(kStart, 3, {{Slope::down, 1}}, Slope::flat));
  CHECK(sw.right == Trajectory(kStart, -1, {{Slope::up, 1}}, Slope::flat));
  CHECK(sw.mast_value == 1);
  const auto h = thermograph(num("1/2"));
  CHECK(h.temp == ExtendedDyadic(d("-1/2")));
  CHECK(h.mast_value == d("1/2"));
  const auto n = thermograph(num("-2"));
  CHECK(n.temp.is_neg_inf());
  CHECK(n.left == Trajectory::constant(kStart, -2));
  CHECK(n.right == Trajectory::constant(kStart, -2));
  // A game whose left option is itself hot: {3 | {2|-1}}.
  const auto x = thermograph(g("{3|{2|-1}}"));
  CHECK(x.mast_value == 2);
  CHECK(x.left.eval(0) == 3);
  CHECK(x.right.eval(0) == 2);
}

TEST_CASE("thermograph shape on atom games") {
  for (const Game& x : atom_option_games()) {
    const auto tg = thermograph(x);
    for (const auto& s : tg.left.segments()) CHECK(s.slope != Slope::up);
    for (const auto& s : tg.right.segments()) CHECK(s.slope != Slope::down);
    CHECK(tg.left.tail_slope() == Slope::flat);
    CHECK(tg.right.tail_slope() == Slope::flat);
    CHECK(mast_of(tg.left).value == tg.mast_value);
    CHECK(mast_of(tg.right).value == tg.mast_value);
    CHECK(tg.temp.is_neg_inf() == as_integer(x).has_value());
    if (!tg.temp.is_neg_inf()) CHECK(ExtendedDyadic(kStart) < tg.temp);
  }
}

TEST_CASE("cooled examples") {
  CHECK(same_value(cooled(g("{2|0}"), d("1/2")), g("{3/2|1/2}")));
  CHECK(cooled(g("{2|0}"), 2) == num("1"));
  CHECK(cooled(num("3"), 2) == num("3"));
  CHECK(same_value(cooled(g("{2|0}"), 1), g("1+*")));
  CHECK_THROWS_AS(cooled(star(), d("-3/2")), std::invalid_argument);
  for (const Game& x : random_games(60, 4, 8)) CHECK(same_value(cooled(x, 0), x));
}

TEST_CASE("cooled_raw") {
  const Game r = cooled_raw(star(), 1);
  CHECK(same_value(r, Game()));
  CHECK(oracle::equal(oracle::Tree::from(r), oracle::make({oracle::integer(-1)}, {oracle::integer(1)})));
  const Game sw = cooled_raw(g("{2|0}"), 2);
  CHECK(same_value(sw, num("1")));
  CHECK(sw != num("1"));
  CHECK(cooled_raw(g("{2|0}"), d("1/2")) == cooled(g("{2|0}"), d("1/2")));
  CHECK_THROWS_AS(cooled_raw(num("2"), 0), std::invalid_argument);
  CHECK_THROWS_AS(cooled_raw(star(), -2), std::invalid_argument);
}

TEST_CASE("mean values and classes") {
  CHECK(mean_value(g("{2|0}")) == 1);
  CHECK(mean_value(num("-7/8")) == d("-7/8"));
  CHECK(mean_value(g("{3|{2|-1}}")) == 2);
  CHECK(classify(num("3/4")) == TempClass::number);
  CHECK(classify(star()) == TempClass::numberish_not_number);
  CHECK(classify(g("{2|0}")) == TempClass::hot);
  CHECK(classify(g("{0|*}")) == TempClass::numberish_not_number);
  const auto pool = random_games(40, 4, 21);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    CHECK(mean_value(pool[i] + pool[i + 1]) == mean_value(pool[i]) + mean_value(pool[i + 1]));
  }
}

TEST_CASE("integer decision traces") {
  const auto a = integer_decision_trace(g("{1|0}"));
  CHECK(a.lower == ExtendedDyadic(2));
  CHECK(a.upper == ExtendedDyadic(-1));
  CHECK(!a.value);
  const auto b = integer_decision_trace(g("{0|3}"));
  CHECK(b.lower == ExtendedDyadic(1));
  CHECK(b.upper == ExtendedDyadic(2));
  CHECK(b.value == 1);
  const auto z = integer_decision_trace(Game());
  CHECK(z.lower.is_neg_inf());
  CHECK(z.upper.is_pos_inf());
  CHECK(z.value == 0);
  CHECK(integer_decision(g("{-5|-1}")) == -2);
  CHECK(integer_decision(g("{|-3}")) == -4);
  CHECK(integer_decision(g("{4|}")) == 5);
  CHECK(!integer_decision(star()));
  CHECK(!integer_decision(g("{0|1}")));
}

TEST_CASE("integer decision agrees with canonical forms") {
  for (const Game& x : atom_option_games()) CHECK(integer_decision(x) == as_integer(x));
  for (const Game& x : random_games(200, 4, 31)) CHECK(integer_decision(x) == as_integer(x));
}

TEST_CASE("mean bound") {
  CHECK(mean_bound_check(g("{2|0}"), 3, 2));
  CHECK(mean_bound_check(num("3/4"), 4, 0));
  CHECK(mean_bound_check(num("-5"), 2, 1));
  CHECK(mean_bound_check(star(), 5, 1));
  CHECK_THROWS_AS(mean_bound_check(g("{2|0}"), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(mean_bound_check(g("{2|0}"), 0, 2), std::invalid_argument);
}
