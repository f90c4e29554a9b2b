#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "thermocalc/dyadic.hpp"
#include "thermocalc/games.hpp"

namespace thermocalc {

/// Tally for one property suite. Keeps the first few failure descriptions.
struct CheckReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> samples;

  explicit CheckReport(std::string suite_name = {}) : name(std::move(suite_name)) {}

  /// `describe` runs only on failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checked;
    if (!ok) record_failure(describe);
  }
  void merge(const CheckReport& other);
  bool ok() const { return failed == 0; }
  std::string summary() const;

 private:
  void record_failure(const std::function<std::string()>& describe);
};

/// {-3/4, -1/2, ..., 3}.
std::vector<Dyadic> standard_grid();

/// base (restricted to t > -1) plus t(G), every breakpoint of g's
/// thermograph and cooling scaffolds, and midpoints of gaps under 1/4.
std::vector<Dyadic> augmented_grid(const Game& g, std::span<const Dyadic> base);

// Background theory.
void check_order_axioms(const Game& g, const Game& h, const Game& k, CheckReport& r);
void check_group_inverse(const Game& g, CheckReport& r);
void check_canonical_form(const Game& g, CheckReport& r);
void check_stops_laws(const Game& g, std::span<const Dyadic> numbers, CheckReport& r);
void check_number_avoidance(const Game& g, std::span<const Dyadic> numbers, CheckReport& r);

// Cooling theory, one game.
void check_existence(const Game& g, std::span<const Dyadic> base, CheckReport& r);
void check_integer_stops(const Game& g, std::int64_t n_lo, std::int64_t n_hi, CheckReport& r);
void check_comparison_lemma(const Game& g, std::span<const Dyadic> base, CheckReport& r);
void check_tepid(const Game& g, CheckReport& r);
void check_raw_freeze(const Game& g, std::span<const Dyadic> base, CheckReport& r);
void check_identity(const Game& g, CheckReport& r);
void check_number_remark(const Game& g, std::span<const Dyadic> base, CheckReport& r);
void check_integer_decision(const Game& g, CheckReport& r);
void check_classification(const Game& g, CheckReport& r);
void check_composition(const Game& g, std::span<const Dyadic> ts, std::span<const Dyadic> us, CheckReport& r);

// Cooling theory, pairs.
void check_order_preservation(const Game& g, const Game& h, std::span<const Dyadic> ts, CheckReport& r);
void check_homomorphism(const Game& g, const Game& h, std::span<const Dyadic> ts, CheckReport& r);
void check_sum_temperature(const Game& g, const Game& h, CheckReport& r);
void check_mean_additivity(const Game& g, const Game& h, CheckReport& r);

struct SelftestOptions {
  std::size_t random_games = 60;
  std::uint32_t random_birthday = 4;
  std::size_t random_pairs = 60;
  std::uint64_t seed = 20240601;
};

/// Runs every suite over the canonical games born by day 2, the atom
/// option games and a random sample.
std::vector<CheckReport> run_selftest(const SelftestOptions& options);

}  // namespace thermocalc
