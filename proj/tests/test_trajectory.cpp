#include <random>
#include <vector>

#include "doctest.h"
#include "thermocalc/dyadic.hpp"
#include "thermocalc/trajectory.hpp"

using namespace thermocalc;

namespace {

const Dyadic kStart{-1};

Dyadic d(const char* s) { return Dyadic::parse(s); }

std::vector<Dyadic> grid_16() {
  std::vector<Dyadic> out;
  for (std::int64_t k = -16; k <= 128; ++k) out.push_back(Dyadic::from_parts(k, 4));
  return out;
}

// Random trajectory from (-1, v0) whose slopes come from `slopes`, with
// breakpoints on the 1/8 grid below 6.
Trajectory random_trajectory(std::mt19937_64& rng, std::vector<Slope> slopes) {
  std::uniform_int_distribution<std::int64_t> v(-24, 24);
  std::uniform_int_distribution<int> pieces(0, 4);
  std::uniform_int_distribution<std::size_t> pick(0, slopes.size() - 1);
  std::uniform_int_distribution<std::int64_t> step(1, 12);
  std::vector<Trajectory::Segment> segs;
  std::int64_t at = -8;  // eighths
  const int n = pieces(rng);
  for (int i = 0; i < n; ++i) {
    at += step(rng);
    segs.push_back({slopes[pick(rng)], Dyadic::from_parts(at, 3)});
  }
  return Trajectory(kStart, Dyadic::from_parts(v(rng), 2), segs, slopes[pick(rng)]);
}

void check_structure(const Trajectory& f) {
  CHECK(f.start_t() == kStart);
  Dyadic prev = f.start_t();
  Slope prev_slope = Slope::flat;
  bool first = true;
  for (const auto& s : f.segments()) {
    CHECK(prev < s.end_t);
    if (!first) CHECK(s.slope != prev_slope);
    prev = s.end_t;
    prev_slope = s.slope;
    first = false;
  }
  if (!first) CHECK(f.tail_slope() != prev_slope);
}

// Independent evaluation: walk the segments accumulating slope * length.
Dyadic walk(const Trajectory& f, const Dyadic& t) {
  Dyadic v = f.start_value();
  Dyadic at = f.start_t();
  for (const auto& s : f.segments()) {
    const Dyadic end = t < s.end_t ? t : s.end_t;
    if (at < end) v = v + (end - at) * to_int(s.slope);
    at = s.end_t;
    if (!(at < t)) return v;
  }
  return v + (t - at) * to_int(f.tail_slope());
}

}  // namespace

TEST_CASE("eval") {
  CHECK(Trajectory::constant(kStart, 1).eval(5) == 1);
  const Trajectory f(kStart, 3, {{Slope::down, 1}}, Slope::flat);
  CHECK(f.eval(0) == 2);
  CHECK(f.eval(1) == 1);
  CHECK(f.eval(7) == 1);
  CHECK(f.eval(d("-1/2")) == d("5/2"));
  CHECK_THROWS_AS(f.eval(d("-3/2")), std::invalid_argument);
}

TEST_CASE("construction validates and merges") {
  CHECK_THROWS_AS(Trajectory(kStart, 0, {{Slope::up, 1}, {Slope::down, 1}}, Slope::flat), std::invalid_argument);
  CHECK_THROWS_AS(Trajectory(kStart, 0, {{Slope::up, -1}}, Slope::flat), std::invalid_argument);
  const Trajectory merged(kStart, 0, {{Slope::up, 0}, {Slope::up, 1}}, Slope::up);
  CHECK(merged == Trajectory::line(kStart, 0, Slope::up));
  CHECK(merged.segments().empty());
  CHECK_THROWS_AS(slope_from_int(2), std::invalid_argument);
}

TEST_CASE("max and min") {
  const Trajectory f = Trajectory::line(kStart, 1, Slope::down);  // -t
  const Trajectory g = Trajectory::line(kStart, -1, Slope::up);   // t
  CHECK(pointwise_max(f, f) == f);
  const Trajectory abs = pointwise_max(f, g);
  CHECK(abs == Trajectory(kStart, 1, {{Slope::down, 0}}, Slope::up));
  CHECK(abs.eval(0) == 0);
  CHECK(pointwise_min(f, g) == Trajectory(kStart, -1, {{Slope::up, 0}}, Slope::down));
  for (const auto& t : grid_16()) CHECK(pointwise_min(abs, g).eval(t) == g.eval(t));
}

TEST_CASE("max and min are exact on a 1/16 grid") {
  std::mt19937_64 rng(2024);
  const auto grid = grid_16();
  const std::vector<Slope> all{Slope::down, Slope::flat, Slope::up};
  for (int i = 0; i < 300; ++i) {
    const Trajectory f = random_trajectory(rng, all);
    const Trajectory g = random_trajectory(rng, all);
    const Trajectory hi = pointwise_max(f, g);
    const Trajectory lo = pointwise_min(f, g);
    check_structure(hi);
    check_structure(lo);
    for (const auto& t : grid) {
      const Dyadic a = walk(f, t);
      const Dyadic b = walk(g, t);
      CHECK(f.eval(t) == a);
      CHECK(hi.eval(t) == max(a, b));
      CHECK(lo.eval(t) == min(a, b));
    }
    for (const auto& b : hi.breakpoints()) CHECK(b.exponent() <= 4);
  }
}

TEST_CASE("add_linear") {
  CHECK(add_linear(Trajectory::constant(kStart, 0), 1, 0) == Trajectory::line(kStart, -1, Slope::up));
  CHECK(add_linear(Trajectory::line(kStart, 0, Slope::up), -1, 0) == Trajectory::constant(kStart, 1));
  const Trajectory f(kStart, 2, {{Slope::down, 1}}, Slope::flat);
  CHECK(add_linear(f, 1, d("1/2")).breakpoints() == f.breakpoints());
  CHECK(add_linear(f, 1, d("1/2")).eval(3) == f.eval(3) + 3 + d("1/2"));
  CHECK_THROWS_AS(add_linear(Trajectory::line(kStart, 0, Slope::up), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(add_linear(f, 2, 0), std::invalid_argument);
}

TEST_CASE("first_meet examples") {
  const auto two_minus_t = Trajectory::line(kStart, 3, Slope::down);
  const auto t = Trajectory::line(kStart, -1, Slope::up);
  CHECK(first_meet(two_minus_t, t) == std::pair<Dyadic, Dyadic>{1, 1});
  const auto minus_t = Trajectory::line(kStart, 1, Slope::down);
  const auto one_plus_t = Trajectory::line(kStart, 0, Slope::up);
  CHECK(first_meet(minus_t, one_plus_t) == std::pair<Dyadic, Dyadic>{d("-1/2"), d("1/2")});
  CHECK(first_meet(Trajectory::constant(kStart, 0), t) == std::pair<Dyadic, Dyadic>{0, 0});
  CHECK_THROWS_AS(first_meet(t, two_minus_t), std::invalid_argument);
  CHECK_THROWS_AS(first_meet(Trajectory::constant(kStart, 1), Trajectory::constant(kStart, 0)),
                  std::invalid_argument);
}

TEST_CASE("first_meet is the least meeting point") {
  std::mt19937_64 rng(77);
  int met = 0;
  for (int i = 0; i < 500; ++i) {
    Trajectory f = random_trajectory(rng, {Slope::down, Slope::flat});
    Trajectory g = random_trajectory(rng, {Slope::up, Slope::flat});
    // Force tails that cross and f above g at the start.
    f = Trajectory(kStart, f.start_value(), {f.segments().begin(), f.segments().end()}, Slope::down);
    g = Trajectory(kStart, g.start_value(), {g.segments().begin(), g.segments().end()}, Slope::up);
    if (!(g.eval(kStart) < f.eval(kStart))) continue;
    const auto [t0, v0] = first_meet(f, g);
    ++met;
    CHECK(f.eval(t0) == v0);
    CHECK(g.eval(t0) == v0);
    for (int k = 0; k <= 12; ++k) {
      const Dyadic probe = t0 - Dyadic::from_parts(1, k);
      if (probe < kStart) continue;
      CHECK(g.eval(probe) < f.eval(probe));
    }
  }
  CHECK(met > 100);
}

TEST_CASE("masts") {
  CHECK(mast_of(Trajectory::constant(kStart, 4)) == Mast{kStart, 4});
  const Trajectory abs(kStart, 1, {{Slope::down, 0}}, Slope::up);
  const Trajectory clipped = abs.frozen_after(1);
  CHECK(mast_of(clipped) == Mast{1, 1});
  CHECK(mast_of(clipped).value == clipped.eval(2));
  CHECK_THROWS_AS(mast_of(abs), std::invalid_argument);
}

TEST_CASE("slopes next to a point") {
  const Trajectory f(kStart, 0, {{Slope::up, 0}, {Slope::flat, 2}}, Slope::down);
  CHECK(f.slope_left_of(0) == Slope::up);
  CHECK(f.slope_right_of(0) == Slope::flat);
  CHECK(f.slope_left_of(1) == Slope::flat);
  CHECK(f.slope_left_of(2) == Slope::flat);
  CHECK(f.slope_right_of(2) == Slope::down);
  CHECK(f.slope_right_of(kStart) == Slope::up);
  CHECK(f.negated().eval(d("1/2")) == -f.eval(d("1/2")));
}
