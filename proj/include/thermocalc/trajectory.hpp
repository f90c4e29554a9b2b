#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thermocalc/dyadic.hpp"

namespace thermocalc {

enum class Slope : std::int8_t { down = -1, flat = 0, up = 1 };

inline int to_int(Slope s) { return static_cast<int>(s); }
/// Throws std::invalid_argument outside {-1, 0, 1}.
Slope slope_from_int(int s);

/// Exact piecewise-linear function of temperature on [start_t, inf).
///
/// Segment i covers (previous end, end_t]; the tail covers everything past
/// the last end_t. Segments are maximal: end points strictly increase and
/// adjacent pieces have different slopes, so structural equality is
/// functional equality.
class Trajectory {
 public:
  struct Segment {
    Slope slope;
    Dyadic end_t;

    friend bool operator==(const Segment&, const Segment&) = default;
  };

  /// Validates and normalizes (merges equal-slope neighbours). Throws
  /// std::invalid_argument when end points do not strictly increase.
  Trajectory(Dyadic start_t, Dyadic start_value, std::vector<Segment> segments, Slope tail_slope);

  static Trajectory constant(Dyadic start_t, Dyadic value);
  /// value(t) = value_at_start + slope * (t - start_t) everywhere.
  static Trajectory line(Dyadic start_t, Dyadic value_at_start, Slope slope);

  const Dyadic& start_t() const noexcept { return start_t_; }
  const Dyadic& start_value() const noexcept { return start_value_; }
  std::span<const Segment> segments() const noexcept { return segments_; }
  Slope tail_slope() const noexcept { return tail_slope_; }

  /// Interior breakpoints (the segment end points).
  std::vector<Dyadic> breakpoints() const;

  /// Throws std::invalid_argument for t < start_t.
  Dyadic eval(const Dyadic& t) const;

  /// Slope on (t - delta, t] for small delta; t must exceed start_t.
  Slope slope_left_of(const Dyadic& t) const;
  /// Slope on [t, t + delta).
  Slope slope_right_of(const Dyadic& t) const;

  /// Equal to this function up to t0 and constant afterwards.
  Trajectory frozen_after(const Dyadic& t0) const;

  Trajectory negated() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  Dyadic start_t_;
  Dyadic start_value_;
  std::vector<Segment> segments_;
  Slope tail_slope_;
};

struct Mast {
  Dyadic start;
  Dyadic value;

  friend bool operator==(const Mast&, const Mast&) = default;
};

Trajectory pointwise_max(const Trajectory& f, const Trajectory& g);
Trajectory pointwise_min(const Trajectory& f, const Trajectory& g);

/// g(t) = f(t) + slope_delta * t + offset. Throws std::invalid_argument if a
/// resulting slope leaves {-1, 0, 1} or slope_delta is not +-1.
Trajectory add_linear(const Trajectory& f, int slope_delta, const Dyadic& offset);

/// Least t with f(t) == g(t), and the common value there. Requires
/// f(start) > g(start); throws std::invalid_argument otherwise, or if the
/// two never meet.
std::pair<Dyadic, Dyadic> first_meet(const Trajectory& f, const Trajectory& g);

/// Requires a flat tail; throws std::invalid_argument otherwise.
Mast mast_of(const Trajectory& f);

}  // namespace thermocalc
