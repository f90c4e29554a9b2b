#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "thermocalc/dyadic.hpp"

using thermocalc::Dyadic;
using thermocalc::DyadicOverflow;
using thermocalc::DyadicParseError;
using thermocalc::ExtendedDyadic;
using thermocalc::Ordering;
using thermocalc::simplest_strictly_between;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

std::int64_t scaled(const Dyadic& x) {
  return x.numerator() * (std::int64_t{1} << (oracle::BirthdayOrder::kShift - x.exponent()));
}

Dyadic unscaled(std::int64_t v) { return Dyadic::from_parts(v, oracle::BirthdayOrder::kShift); }

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-4096, 4096);
  std::uniform_int_distribution<int> exp(0, 10);
  return Dyadic::from_parts(num(rng), exp(rng));
}

}  // namespace

TEST_CASE("sums and normalization") {
  CHECK(d("1/2") + d("1/4") == d("3/4"));
  const Dyadic x = d("-5/8");
  CHECK(x + 0 == x);
  const Dyadic z = d("3/8") + d("-3/8");
  CHECK(z.numerator() == 0);
  CHECK(z.exponent() == 0);
  CHECK(Dyadic::from_parts(12, 3) == d("3/2"));
  CHECK(Dyadic::from_parts(12, 3).exponent() == 1);
  CHECK(Dyadic::from_parts(0, 9).exponent() == 0);
}

TEST_CASE("compare") {
  CHECK(thermocalc::compare(d("1/2"), d("3/4")) == Ordering::less);
  CHECK(thermocalc::compare(-1, -1) == Ordering::equal);
  CHECK(thermocalc::compare(d("5/4"), 1) == Ordering::greater);
  CHECK(Dyadic(std::numeric_limits<std::int64_t>::max()) > Dyadic::from_parts(1, 62));
  CHECK(Dyadic::from_parts(-1, 62) < 0);
  CHECK(Dyadic::from_parts(1, 62) > 0);
}

TEST_CASE("floor, ceil, half, twice") {
  CHECK(d("-3/2").floor() == -2);
  CHECK(d("-3/2").ceil() == -1);
  CHECK(d("7/4").floor() == 1);
  CHECK(Dyadic(3).half() == d("3/2"));
  CHECK(d("3/8").twice() == d("3/4"));
  CHECK(d("-3/8").abs() == d("3/8"));
}

TEST_CASE("text forms") {
  CHECK(d("3/4").to_string() == "3/4");
  CHECK(Dyadic(-7).to_string() == "-7");
  CHECK(d("-5/8").to_decimal() == "-0.625");
  CHECK(d("9/4").to_decimal() == "2.25");
  CHECK(Dyadic(3).to_decimal() == "3");
  CHECK(ExtendedDyadic::neg_infinity().to_string() == "-inf");
  CHECK(ExtendedDyadic::pos_infinity().to_string() == "+inf");
  CHECK(ExtendedDyadic::parse("-inf").is_neg_inf());
  CHECK(ExtendedDyadic::parse("+inf").is_pos_inf());
  CHECK(ExtendedDyadic::parse("-3/4") == ExtendedDyadic(d("-3/4")));
  CHECK(ExtendedDyadic::neg_infinity() < ExtendedDyadic(-1000));
  CHECK(ExtendedDyadic(1000) < ExtendedDyadic::pos_infinity());
}

TEST_CASE("parse errors") {
  auto kind_of = [](const char* s) {
    try {
      (void)Dyadic::parse(s);
    } catch (const DyadicParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  const int syntax = static_cast<int>(DyadicParseError::Kind::syntax);
  const int non_dyadic = static_cast<int>(DyadicParseError::Kind::non_dyadic_denominator);
  CHECK(kind_of("1/3") == non_dyadic);
  CHECK(kind_of("5/12") == non_dyadic);
  CHECK(kind_of("") == syntax);
  CHECK(kind_of("1/") == syntax);
  CHECK(kind_of("abc") == syntax);
  CHECK(kind_of("1/0") != -1);
  CHECK(kind_of("6/4") == -1);  // not lowest terms but still dyadic
  CHECK(d("6/4") == d("3/2"));
}

TEST_CASE("overflow is reported") {
  const Dyadic big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + 1, DyadicOverflow);
  CHECK_THROWS_AS(big * 2, DyadicOverflow);
  CHECK_THROWS_AS(big.twice(), DyadicOverflow);
  CHECK_THROWS_AS(Dyadic(std::numeric_limits<std::int64_t>::min()).operator-(), DyadicOverflow);
}

TEST_CASE("text round trip and normalization idempotence") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic x = random_dyadic(rng);
    CHECK(Dyadic::parse(x.to_string()) == x);
    CHECK(Dyadic::from_parts(x.numerator(), x.exponent()) == x);
    CHECK((x.exponent() == 0 || x.numerator() % 2 != 0));
  }
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic a = random_dyadic(rng);
    const Dyadic b = random_dyadic(rng);
    const Dyadic c = random_dyadic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + b).twice() == a.twice() + b.twice());
    CHECK((a + b).half() == a.half() + b.half());
    CHECK(a - a == Dyadic{});
    CHECK(a * 3 == a + a + a);
    CHECK((a < b) == (scaled(a) < scaled(b)));
  }
}

TEST_CASE("simplest number examples") {
  CHECK(simplest_strictly_between(0, 1) == d("1/2"));
  CHECK(simplest_strictly_between(ExtendedDyadic::neg_infinity(), ExtendedDyadic::pos_infinity()) == 0);
  CHECK(simplest_strictly_between(d("1/2"), 7) == 1);
  CHECK(simplest_strictly_between(-5, -2) == -3);
  CHECK(simplest_strictly_between(ExtendedDyadic::neg_infinity(), -2) == -3);
  CHECK(simplest_strictly_between(2, ExtendedDyadic::pos_infinity()) == 3);
  CHECK(simplest_strictly_between(d("5/8"), d("3/4")) == d("11/16"));
  CHECK_THROWS_AS(simplest_strictly_between(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(simplest_strictly_between(2, 1), std::invalid_argument);
}

TEST_CASE("simplest number agrees with birthday enumeration") {
  // Every pair of bounds in [-2, 2] with exponent <= 6, plus infinities.
  const oracle::BirthdayOrder order(12);
  std::vector<std::optional<Dyadic>> bounds{std::nullopt};
  for (std::int64_t k = -128; k <= 128; ++k) bounds.emplace_back(Dyadic::from_parts(k, 6));
  std::size_t pairs = 0;
  for (const auto& lo : bounds) {
    for (const auto& hi : bounds) {
      if (lo && hi && !(*lo < *hi)) continue;
      const ExtendedDyadic elo = lo ? ExtendedDyadic(*lo) : ExtendedDyadic::neg_infinity();
      const ExtendedDyadic ehi = hi ? ExtendedDyadic(*hi) : ExtendedDyadic::pos_infinity();
      const auto want = order.simplest(lo ? std::optional(scaled(*lo)) : std::nullopt,
                                       hi ? std::optional(scaled(*hi)) : std::nullopt);
      REQUIRE(want.has_value());
      const Dyadic got = simplest_strictly_between(elo, ehi);
      if (got != unscaled(*want)) {
        FAIL_CHECK("(" << elo.to_string() << ", " << ehi.to_string() << ") gave " << got.to_string()
                       << ", expected " << unscaled(*want).to_string());
      }
      ++pairs;
    }
  }
  CHECK(pairs > 33000);
}
