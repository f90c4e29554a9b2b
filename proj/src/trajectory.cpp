#include "thermocalc/trajectory.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace thermocalc {

namespace {

Dyadic shift(const Dyadic& value, Slope slope, const Dyadic& dt) {
  switch (slope) {
    case Slope::down: return value - dt;
    case Slope::flat: return value;
    case Slope::up: return value + dt;
  }
  return value;
}

// Accumulates pieces left to right, dropping empty pieces and merging
// equal slopes; the Trajectory constructor does the final tidy-up.
class Builder {
 public:
  Builder(Dyadic start_t, Dyadic start_value) : start_t_(start_t), start_value_(start_value) {}

  void push(Slope slope, const Dyadic& end_t) {
    const Dyadic& last = segments_.empty() ? start_t_ : segments_.back().end_t;
    if (end_t <= last) return;
    if (!segments_.empty() && segments_.back().slope == slope) {
      segments_.back().end_t = end_t;
    } else {
      segments_.push_back({slope, end_t});
    }
  }

  Trajectory finish(Slope tail) { return Trajectory(start_t_, start_value_, std::move(segments_), tail); }

 private:
  Dyadic start_t_;
  Dyadic start_value_;
  std::vector<Trajectory::Segment> segments_;
};

struct Interval {
  Dyadic from;
  std::optional<Dyadic> to;  // nullopt: unbounded tail
};

std::vector<Interval> merged_intervals(const Trajectory& f, const Trajectory& g) {
  if (f.start_t() != g.start_t()) {
    throw std::invalid_argument("trajectories have different domains");
  }
  std::vector<Dyadic> points = f.breakpoints();
  for (const auto& b : g.breakpoints()) points.push_back(b);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Interval> out;
  Dyadic from = f.start_t();
  for (const auto& p : points) {
    out.push_back({from, p});
    from = p;
  }
  out.push_back({from, std::nullopt});
  return out;
}

// |d| / k for k in {1, 2}.
Dyadic divide_gap(const Dyadic& d, int k) {
  Dyadic a = d.abs();
  return k == 2 ? a.half() : a;
}

}  // namespace

Slope slope_from_int(int s) {
  if (s < -1 || s > 1) throw std::invalid_argument("slope " + std::to_string(s) + " outside {-1, 0, 1}");
  return static_cast<Slope>(s);
}

Trajectory::Trajectory(Dyadic start_t, Dyadic start_value, std::vector<Segment> segments, Slope tail_slope)
    : start_t_(start_t), start_value_(start_value), tail_slope_(tail_slope) {
  Dyadic last = start_t_;
  for (const auto& seg : segments) {
    if (seg.end_t <= last) throw std::invalid_argument("trajectory breakpoints must strictly increase");
    last = seg.end_t;
    if (!segments_.empty() && segments_.back().slope == seg.slope) {
      segments_.back().end_t = seg.end_t;
    } else {
      segments_.push_back(seg);
    }
  }
  if (!segments_.empty() && segments_.back().slope == tail_slope_) segments_.pop_back();
}

Trajectory Trajectory::constant(Dyadic start_t, Dyadic value) { return {start_t, value, {}, Slope::flat}; }

Trajectory Trajectory::line(Dyadic start_t, Dyadic value_at_start, Slope slope) {
  return {start_t, value_at_start, {}, slope};
}

std::vector<Dyadic> Trajectory::breakpoints() const {
  std::vector<Dyadic> out;
  out.reserve(segments_.size());
  for (const auto& seg : segments_) out.push_back(seg.end_t);
  return out;
}

Dyadic Trajectory::eval(const Dyadic& t) const {
  if (t < start_t_) {
    throw std::invalid_argument("eval at t=" + t.to_string() + " before domain start " + start_t_.to_string());
  }
  Dyadic at = start_t_;
  Dyadic value = start_value_;
  for (const auto& seg : segments_) {
    if (t <= seg.end_t) return shift(value, seg.slope, t - at);
    value = shift(value, seg.slope, seg.end_t - at);
    at = seg.end_t;
  }
  return shift(value, tail_slope_, t - at);
}

Slope Trajectory::slope_left_of(const Dyadic& t) const {
  if (t <= start_t_) throw std::invalid_argument("no left neighbourhood at the domain start");
  for (const auto& seg : segments_) {
    if (t <= seg.end_t) return seg.slope;
  }
  return tail_slope_;
}

Slope Trajectory::slope_right_of(const Dyadic& t) const {
  if (t < start_t_) throw std::invalid_argument("slope_right_of before domain start");
  for (const auto& seg : segments_) {
    if (t < seg.end_t) return seg.slope;
  }
  return tail_slope_;
}

Trajectory Trajectory::frozen_after(const Dyadic& t0) const {
  if (t0 < start_t_) throw std::invalid_argument("frozen_after before domain start");
  Builder b(start_t_, start_value_);
  for (const auto& seg : segments_) {
    if (seg.end_t < t0) {
      b.push(seg.slope, seg.end_t);
    } else {
      b.push(seg.slope, t0);
      return b.finish(Slope::flat);
    }
  }
  b.push(tail_slope_, t0);
  return b.finish(Slope::flat);
}

Trajectory Trajectory::negated() const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size());
  for (const auto& seg : segments_) segs.push_back({slope_from_int(-to_int(seg.slope)), seg.end_t});
  return {start_t_, -start_value_, std::move(segs), slope_from_int(-to_int(tail_slope_))};
}

Trajectory pointwise_max(const Trajectory& f, const Trajectory& g) {
  const auto intervals = merged_intervals(f, g);
  Builder out(f.start_t(), max(f.start_value(), g.start_value()));
  Slope tail = Slope::flat;
  for (const auto& iv : intervals) {
    const Dyadic d = f.eval(iv.from) - g.eval(iv.from);
    const Slope sf = f.slope_right_of(iv.from);
    const Slope sg = g.slope_right_of(iv.from);
    const bool f_on_top = d.sign() > 0 || (d.is_zero() && to_int(sf) >= to_int(sg));
    const Slope top = f_on_top ? sf : sg;
    const Slope other = f_on_top ? sg : sf;
    Slope last = top;
    if (to_int(other) > to_int(top)) {
      // The lower function catches up at from + |d| / (slope gap).
      const Dyadic cross = iv.from + divide_gap(d, to_int(other) - to_int(top));
      if (!iv.to || cross < *iv.to) {
        out.push(top, cross);
        last = other;
      }
    }
    if (iv.to) {
      out.push(last, *iv.to);
    } else {
      tail = last;
    }
  }
  return out.finish(tail);
}

Trajectory pointwise_min(const Trajectory& f, const Trajectory& g) {
  return pointwise_max(f.negated(), g.negated()).negated();
}

Trajectory add_linear(const Trajectory& f, int slope_delta, const Dyadic& offset) {
  if (slope_delta != 1 && slope_delta != -1) throw std::invalid_argument("slope_delta must be +1 or -1");
  std::vector<Trajectory::Segment> segs;
  segs.reserve(f.segments().size());
  for (const auto& seg : f.segments()) segs.push_back({slope_from_int(to_int(seg.slope) + slope_delta), seg.end_t});
  const Dyadic start_value = f.start_value() + f.start_t() * slope_delta + offset;
  return {f.start_t(), start_value, std::move(segs), slope_from_int(to_int(f.tail_slope()) + slope_delta)};
}

std::pair<Dyadic, Dyadic> first_meet(const Trajectory& f, const Trajectory& g) {
  if (f.eval(f.start_t()) <= g.eval(g.start_t())) {
    throw std::invalid_argument("first_meet: f must start strictly above g");
  }
  for (const auto& iv : merged_intervals(f, g)) {
    const Dyadic fv = f.eval(iv.from);
    const Dyadic d = fv - g.eval(iv.from);
    if (d.is_zero()) return {iv.from, fv};
    const int gap = to_int(g.slope_right_of(iv.from)) - to_int(f.slope_right_of(iv.from));
    if (d.sign() > 0 && gap > 0) {
      const Dyadic meet = iv.from + divide_gap(d, gap);
      if (!iv.to || meet <= *iv.to) return {meet, f.eval(meet)};
    }
    if (d.sign() < 0) throw std::logic_error("first_meet: crossing missed");
  }
  throw std::invalid_argument("first_meet: trajectories never meet");
}

Mast mast_of(const Trajectory& f) {
  if (f.tail_slope() != Slope::flat) throw std::invalid_argument("mast_of: trajectory has no mast");
  const Dyadic start = f.segments().empty() ? f.start_t() : f.segments().back().end_t;
  return {start, f.eval(start)};
}

}  // namespace thermocalc
