#include "thermocalc/checks.hpp"

#include <algorithm>
#include <sstream>

#include "thermocalc/corpus.hpp"
#include "thermocalc/notation.hpp"
#include "thermocalc/thermo.hpp"

namespace thermocalc {

namespace {

constexpr std::size_t kMaxSamples = 8;

std::string show(const Game& g) { return to_brace_notation(canonicalize(g)); }

Game shifted(const Game& g, const Dyadic& by) { return canonicalize(add(g, number_to_game(by))); }

bool slopes_within(const Trajectory& f, int a, int b) {
  auto ok = [&](Slope s) { return to_int(s) == a || to_int(s) == b; };
  return std::all_of(f.segments().begin(), f.segments().end(), [&](const auto& s) { return ok(s.slope); }) &&
         ok(f.tail_slope());
}

// Maximal pieces (a, b] of a trajectory; b is empty for the tail.
struct Piece {
  Dyadic from;
  std::optional<Dyadic> to;
  Slope slope;
};

std::vector<Piece> pieces(const Trajectory& f) {
  std::vector<Piece> out;
  Dyadic from = f.start_t();
  for (const auto& seg : f.segments()) {
    out.push_back({from, seg.end_t, seg.slope});
    from = seg.end_t;
  }
  out.push_back({from, std::nullopt, f.tail_slope()});
  return out;
}

bool inside(const Piece& p, const Dyadic& t) { return p.from < t && (!p.to || t <= *p.to); }

}  // namespace

void CheckReport::record_failure(const std::function<std::string()>& describe) {
  ++failed;
  if (samples.size() < kMaxSamples) samples.push_back(describe());
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& s : other.samples) {
    if (samples.size() < kMaxSamples) samples.push_back(s);
  }
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << name << ": " << (checked - failed) << "/" << checked << " passed";
  return out.str();
}

std::vector<Dyadic> standard_grid() {
  std::vector<Dyadic> out;
  for (int q = -3; q <= 12; ++q) out.push_back(Dyadic::from_parts(q, 2));
  return out;
}

std::vector<Dyadic> augmented_grid(const Game& g, std::span<const Dyadic> base) {
  std::vector<Dyadic> pts;
  for (const auto& t : base) {
    if (kDomainStart < t) pts.push_back(t);
  }
  const Thermograph tg = thermograph(g);
  if (tg.temp.is_finite()) pts.push_back(tg.temp.value());
  auto add_breaks = [&](const Trajectory& f) {
    for (const auto& b : f.breakpoints()) pts.push_back(b);
  };
  add_breaks(tg.left);
  add_breaks(tg.right);
  if (!as_integer(g)) {
    const CoolingRecord rec = cooling_record(g);
    add_breaks(rec.raw_left);
    add_breaks(rec.raw_right);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const Dyadic quarter = Dyadic::from_parts(1, 2);
  std::vector<Dyadic> mids;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] - pts[i] < quarter) mids.push_back((pts[i] + pts[i + 1]).half());
  }
  pts.insert(pts.end(), mids.begin(), mids.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

void check_order_axioms(const Game& g, const Game& h, const Game& k, CheckReport& r) {
  r.expect(geq(g, g), [&] { return "not reflexive at " + show(g); });
  if (geq(g, h) && geq(h, g)) {
    r.expect(canonicalize(g) == canonicalize(h), [&] { return "equal games with different canonical forms"; });
  }
  if (geq(g, h) && geq(h, k)) {
    r.expect(geq(g, k), [&] { return "transitivity fails: " + show(g) + " >= " + show(h) + " >= " + show(k); });
  }
}

void check_group_inverse(const Game& g, CheckReport& r) {
  r.expect(compare_games(add(g, negate(g)), Game()) == Relation::equal,
           [&] { return "g - g != 0 for " + show(g); });
  r.expect(negate(negate(g)) == g, [&] { return "negation is not an involution on " + show(g); });
}

void check_canonical_form(const Game& g, CheckReport& r) {
  const Game c = canonicalize(g);
  r.expect(canonicalize(c) == c, [&] { return "canonicalize not idempotent on " + show(g); });
  r.expect(compare_games(c, g) == Relation::equal, [&] { return "canonical form differs in value: " + show(g); });
  r.expect(c.birthday() <= g.birthday(), [&] { return "canonical form is born later: " + show(g); });
}

void check_stops_laws(const Game& g, std::span<const Dyadic> numbers, CheckReport& r) {
  const Stops s = stops(g);
  r.expect(s.right <= s.left, [&] { return "R > L for " + show(g); });
  r.expect(stops(canonicalize(g)) == s, [&] { return "stops change under canonicalization: " + show(g); });
  for (const auto& x : numbers) {
    const Stops t = stops(add(g, number_to_game(x)));
    r.expect(t.left == s.left + x && t.right == s.right + x,
             [&] { return "stops not translated by " + x.to_string() + " for " + show(g); });
  }
}

void check_number_avoidance(const Game& g, std::span<const Dyadic> numbers, CheckReport& r) {
  if (as_number(g)) return;
  const Stops s = stops(g);
  for (const auto& x : numbers) {
    const Relation rel = compare_games(g, number_to_game(x));
    auto where = [&] { return show(g) + " vs " + x.to_string() + " gave " + std::string(to_symbol(rel)); };
    r.expect(rel != Relation::equal, where);
    if (x < s.right) r.expect(rel == Relation::greater, where);
    if (s.left < x) r.expect(rel == Relation::less, where);
    if (s.right < x && x < s.left) r.expect(rel == Relation::confused, where);
    if (rel == Relation::greater) r.expect(x <= s.right, where);
    if (rel == Relation::less) r.expect(s.left <= x, where);
  }
}

void check_existence(const Game& g, std::span<const Dyadic> base, CheckReport& r) {
  const Thermograph tg = thermograph(g);
  const auto n = as_integer(g);

  // (1) temperature range and the integer convention.
  r.expect(tg.temp.is_neg_inf() == n.has_value(), [&] { return "t(G) = -inf mismatch for " + show(g); });
  if (!n) {
    r.expect(ExtendedDyadic(kDomainStart) < tg.temp, [&] { return "t(G) <= -1 for " + show(g); });
    const CoolingRecord rec = cooling_record(g);
    r.expect(rec.raw_left.tail_slope() == Slope::down && slopes_within(rec.raw_left, -1, 0),
             [&] { return "raw left scaffold shape wrong for " + show(g); });
    r.expect(rec.raw_right.tail_slope() == Slope::up && slopes_within(rec.raw_right, 0, 1),
             [&] { return "raw right scaffold shape wrong for " + show(g); });
    r.expect(rec.raw_left.eval(kDomainStart) == Dyadic(rec.int_upper) &&
                 rec.raw_right.eval(kDomainStart) == Dyadic(rec.int_lower),
             [&] { return "scaffolds at t=-1 differ from the integer bounds for " + show(g); });
  }
  // (2), (3) slope sets.
  r.expect(slopes_within(tg.left, -1, 0), [&] { return "left trajectory slopes outside {0,-1} for " + show(g); });
  r.expect(slopes_within(tg.right, 0, 1), [&] { return "right trajectory slopes outside {0,1} for " + show(g); });
  // (4) masts.
  r.expect(tg.left.tail_slope() == Slope::flat && tg.right.tail_slope() == Slope::flat &&
               mast_of(tg.left).value == tg.mast_value && mast_of(tg.right).value == tg.mast_value,
           [&] { return "mast values differ for " + show(g); });

  for (const auto& t : augmented_grid(g, base)) {
    const Dyadic lv = tg.left.eval(t);
    const Dyadic rv = tg.right.eval(t);
    const bool frozen = ExtendedDyadic(t) >= tg.temp;
    r.expect(rv <= lv && (lv == rv) == frozen,
             [&] { return "trajectories cross or meet early at t=" + t.to_string() + " for " + show(g); });
    // (5) stops of the cooled game.
    const Game gt = cooled(g, t);
    const Stops s = stops(gt);
    r.expect(s.left == lv && s.right == rv, [&] {
      return "stops(G_t) != (lambda_t, rho_t) at t=" + t.to_string() + " for " + show(g) + ": got (" +
             s.left.to_string() + ", " + s.right.to_string() + ") want (" + lv.to_string() + ", " + rv.to_string() + ")";
    });
    // (6) classification.
    if (!n) {
      const Dyadic temp = tg.temp.value();
      if (t < temp) {
        r.expect(!is_numberish(gt), [&] { return "G_t numberish below t(G) at t=" + t.to_string() + " for " + show(g); });
      } else if (t == temp) {
        r.expect(is_numberish(gt), [&] { return "G_t(G) not numberish for " + show(g); });
      } else {
        r.expect(as_number(gt).has_value(),
                 [&] { return "G_t not a number above t(G) at t=" + t.to_string() + " for " + show(g); });
      }
    }
  }
}

void check_integer_stops(const Game& g, std::int64_t n_lo, std::int64_t n_hi, CheckReport& r) {
  if (as_integer(g)) return;
  const auto [upper, lower] = integer_bounds(g);
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const Game ng = number_to_game(n);
    auto where = [&](const char* what) { return [=] { return std::string(what) + " n=" + std::to_string(n) + " for " + show(g); }; };
    const auto lefts = g.left_options();
    const auto rights = g.right_options();
    if (upper <= n) {
      r.expect(std::none_of(lefts.begin(), lefts.end(), [&](const Game& gl) { return geq(gl, ng); }),
               where("upper bound <= n but some G^L >= n"));
    } else {
      r.expect(std::any_of(lefts.begin(), lefts.end(), [&](const Game& gl) { return geq(gl, ng); }),
               where("n < upper bound but no G^L >= n"));
    }
    if (n <= lower) {
      r.expect(std::none_of(rights.begin(), rights.end(), [&](const Game& gr) { return geq(ng, gr); }),
               where("n <= lower bound but some G^R <= n"));
    } else {
      r.expect(std::any_of(rights.begin(), rights.end(), [&](const Game& gr) { return geq(ng, gr); }),
               where("lower bound < n but no G^R <= n"));
    }
  }
}

void check_comparison_lemma(const Game& g, std::span<const Dyadic> base, CheckReport& r) {
  if (as_integer(g)) return;
  const CoolingRecord rec = cooling_record(g);
  const auto grid = augmented_grid(g, base);
  const auto lefts = g.left_options();
  const auto rights = g.right_options();

  for (const auto& piece : pieces(rec.raw_left)) {
    for (const auto& t : grid) {
      if (!inside(piece, t)) continue;
      const Game x = number_to_game(rec.raw_left.eval(t));
      auto moved = [&](const Game& gl) { return shifted(cooled(gl, t), -t); };
      auto where = [&] { return "left scaffold piece at t=" + t.to_string() + " for " + show(g); };
      if (piece.slope == Slope::flat) {
        r.expect(std::none_of(lefts.begin(), lefts.end(), [&](const Game& gl) { return geq(moved(gl), x); }), where);
      } else {
        r.expect(std::any_of(lefts.begin(), lefts.end(), [&](const Game& gl) { return geq(moved(gl), x); }), where);
      }
    }
  }
  for (const auto& piece : pieces(rec.raw_right)) {
    for (const auto& t : grid) {
      if (!inside(piece, t)) continue;
      const Game x = number_to_game(rec.raw_right.eval(t));
      auto moved = [&](const Game& gr) { return shifted(cooled(gr, t), t); };
      auto where = [&] { return "right scaffold piece at t=" + t.to_string() + " for " + show(g); };
      if (piece.slope == Slope::flat) {
        r.expect(std::none_of(rights.begin(), rights.end(), [&](const Game& gr) { return geq(x, moved(gr)); }), where);
      } else {
        r.expect(std::any_of(rights.begin(), rights.end(), [&](const Game& gr) { return geq(x, moved(gr)); }), where);
      }
    }
  }
}

void check_tepid(const Game& g, CheckReport& r) {
  if (as_integer(g)) return;
  const Game at = cooled(g, temperature(g).value());
  r.expect(is_numberish(at) && !as_number(at), [&] { return "G at its temperature is not tepid: " + show(g); });
}

void check_raw_freeze(const Game& g, std::span<const Dyadic> base, CheckReport& r) {
  if (as_integer(g)) return;
  const ExtendedDyadic temp = temperature(g);
  for (const auto& t : augmented_grid(g, base)) {
    if (ExtendedDyadic(t) <= temp) continue;
    r.expect(as_number(cooled_raw(g, t)).has_value(),
             [&] { return "unfrozen cooling not a number at t=" + t.to_string() + " for " + show(g); });
  }
}

void check_identity(const Game& g, CheckReport& r) {
  r.expect(compare_games(cooled(g, 0), g) == Relation::equal, [&] { return "G_0 != G for " + show(g); });
}

void check_number_remark(const Game& g, std::span<const Dyadic> base, CheckReport& r) {
  if (!as_number(g)) return;
  for (const auto& t : base) {
    if (t.sign() < 0) continue;
    r.expect(compare_games(cooled(g, t), g) == Relation::equal,
             [&] { return "number changed by cooling at t=" + t.to_string() + ": " + show(g); });
  }
}

void check_integer_decision(const Game& g, CheckReport& r) {
  const auto decided = integer_decision(g);
  const auto oracle = as_integer(g);
  r.expect(decided == oracle, [&] {
    auto str = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
    return "integer decision " + str(decided) + " vs canonical " + str(oracle) + " for " + show(g);
  });
}

void check_classification(const Game& g, CheckReport& r) {
  const TempClass c = classify(g);
  const bool number = as_number(g).has_value();
  const bool numberish = is_numberish(g);
  const TempClass expected =
      number ? TempClass::number : (numberish ? TempClass::numberish_not_number : TempClass::hot);
  r.expect(c == expected, [&] { return "temperature class disagrees with stops for " + show(g); });
}

void check_composition(const Game& g, std::span<const Dyadic> ts, std::span<const Dyadic> us, CheckReport& r) {
  for (const auto& t : ts) {
    if (t <= kDomainStart) continue;
    const Game gt = cooled(g, t);
    for (const auto& u : us) {
      if (u.sign() < 0) continue;
      r.expect(compare_games(cooled(gt, u), cooled(g, t + u)) == Relation::equal, [&] {
        return "(G_t)_u != G_(t+u) at t=" + t.to_string() + ", u=" + u.to_string() + " for " + show(g);
      });
    }
  }
}

void check_order_preservation(const Game& g, const Game& h, std::span<const Dyadic> ts, CheckReport& r) {
  const bool ge = geq(g, h);
  const bool gt_or_confused = !geq(h, g);
  for (const auto& t : ts) {
    if (t <= kDomainStart) continue;
    const Game gt = cooled(g, t);
    const Game ht = cooled(h, t);
    if (ge) {
      r.expect(geq(gt, ht), [&] { return "G >= H but G_t < H_t at t=" + t.to_string() + ": " + show(g) + ", " + show(h); });
    }
    if (gt_or_confused) {
      r.expect(!geq(shifted(ht, -t), gt), [&] {
        return "G |> H but not G_t |> H_t - t at t=" + t.to_string() + ": " + show(g) + ", " + show(h);
      });
    }
  }
}

void check_homomorphism(const Game& g, const Game& h, std::span<const Dyadic> ts, CheckReport& r) {
  const Game sum = add(g, h);
  for (const auto& t : ts) {
    if (t <= kDomainStart) continue;
    r.expect(compare_games(cooled(sum, t), add(cooled(g, t), cooled(h, t))) == Relation::equal, [&] {
      return "(G+H)_t != G_t + H_t at t=" + t.to_string() + ": " + show(g) + ", " + show(h);
    });
  }
}

void check_sum_temperature(const Game& g, const Game& h, CheckReport& r) {
  r.expect(temperature(add(g, h)) <= std::max(temperature(g), temperature(h)),
           [&] { return "t(G+H) > max(t(G), t(H)) for " + show(g) + ", " + show(h); });
}

void check_mean_additivity(const Game& g, const Game& h, CheckReport& r) {
  r.expect(mean_value(add(g, h)) == mean_value(g) + mean_value(h),
           [&] { return "mean value not additive for " + show(g) + ", " + show(h); });
}

std::vector<CheckReport> run_selftest(const SelftestOptions& options) {
  std::vector<Game> unary = canonical_games_born_by(2);
  for (const auto& g : atom_option_games()) unary.push_back(g);
  const auto randoms = random_games(options.random_games, options.random_birthday, options.seed);
  unary.insert(unary.end(), randoms.begin(), randoms.end());

  const auto pair_pool = random_games(2 * options.random_pairs, options.random_birthday > 3 ? 3 : options.random_birthday,
                                      options.seed + 1);
  const auto grid = standard_grid();
  const std::vector<Dyadic> pair_ts{Dyadic::from_parts(-1, 1), 0, Dyadic::from_parts(1, 1), 1, 2};
  const std::vector<Dyadic> us{0, Dyadic::from_parts(1, 2), 1};
  const std::vector<Dyadic> numbers{Dyadic::from_parts(-3, 1), 0, Dyadic::from_parts(1, 2), 2};

  CheckReport background("background theory");
  CheckReport existence("existence");
  CheckReport integerstop("integer bounds");
  CheckReport comparison("comparison lemma");
  CheckReport tepid("tepid value");
  CheckReport freeze("unfrozen cooling above t(G)");
  CheckReport identity("G_0 = G");
  CheckReport numbers_fixed("numbers fixed by cooling");
  CheckReport decision("integer decision");
  CheckReport classification("temperature classes");
  CheckReport composition("composition");
  CheckReport order("order preservation");
  CheckReport homomorphism("homomorphism");
  CheckReport sums("sum temperature and mean");

  for (const auto& g : unary) {
    check_group_inverse(g, background);
    check_canonical_form(g, background);
    check_stops_laws(g, numbers, background);
    check_number_avoidance(g, numbers, background);
    check_existence(g, grid, existence);
    check_integer_stops(g, -4, 4, integerstop);
    check_comparison_lemma(g, grid, comparison);
    check_tepid(g, tepid);
    check_raw_freeze(g, grid, freeze);
    check_identity(g, identity);
    check_number_remark(g, grid, numbers_fixed);
    check_integer_decision(g, decision);
    check_classification(g, classification);
  }
  for (const auto& g : randoms) check_composition(g, pair_ts, us, composition);
  for (std::size_t i = 0; i + 1 < pair_pool.size(); i += 2) {
    const Game& g = pair_pool[i];
    const Game& h = pair_pool[i + 1];
    check_order_axioms(g, h, pair_pool[(i + 2) % pair_pool.size()], background);
    check_order_preservation(g, h, pair_ts, order);
    check_order_preservation(h, g, pair_ts, order);
    check_homomorphism(g, h, pair_ts, homomorphism);
    check_sum_temperature(g, h, sums);
    check_mean_additivity(g, h, sums);
  }
  return {background, existence,  integerstop,    comparison,     tepid,       freeze,      identity,
          numbers_fixed, decision, classification, composition, order, homomorphism, sums};
}

}  // namespace thermocalc
