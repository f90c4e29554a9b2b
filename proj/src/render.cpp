#include "thermocalc/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace thermocalc {

Json trajectory_to_json(const Trajectory& f) {
  Json segments = Json::array();
  for (const auto& seg : f.segments()) {
    segments.push_back(Json{{"slope", to_int(seg.slope)}, {"end_t", seg.end_t.to_string()}});
  }
  return Json{{"start_t", f.start_t().to_string()},
              {"start_value", f.start_value().to_string()},
              {"segments", segments},
              {"tail_slope", to_int(f.tail_slope())}};
}

Trajectory trajectory_from_json(const Json& j) {
  std::vector<Trajectory::Segment> segments;
  for (const auto& seg : j.at("segments")) {
    segments.push_back({slope_from_int(seg.at("slope").get<int>()), Dyadic::parse(seg.at("end_t").get<std::string>())});
  }
  return {Dyadic::parse(j.at("start_t").get<std::string>()), Dyadic::parse(j.at("start_value").get<std::string>()),
          std::move(segments), slope_from_int(j.at("tail_slope").get<int>())};
}

Json thermograph_to_json(const Thermograph& tg) {
  return Json{{"temp", tg.temp.to_string()},
              {"mast", tg.mast_value.to_string()},
              {"left", trajectory_to_json(tg.left)},
              {"right", trajectory_to_json(tg.right)}};
}

Thermograph thermograph_from_json(const Json& j) {
  return {trajectory_from_json(j.at("left")), trajectory_from_json(j.at("right")),
          ExtendedDyadic::parse(j.at("temp").get<std::string>()), Dyadic::parse(j.at("mast").get<std::string>())};
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected ascii, svg or json)");
}

namespace {

// Plot window shared by the two graphical renderers. Values run from
// `value_hi` on the left to `value_lo` on the right.
struct Frame {
  Dyadic t_lo;
  Dyadic t_hi;
  Dyadic value_hi;
  Dyadic value_lo;
  std::optional<Dyadic> temp;
};

Frame frame_of(const Thermograph& tg) {
  Frame f;
  f.t_lo = tg.left.start_t();
  f.temp = tg.temp.is_finite() ? std::optional<Dyadic>(tg.temp.value()) : std::nullopt;
  f.t_hi = (f.temp ? max(*f.temp, f.t_lo) : f.t_lo) + 1;
  const Dyadic pad = Dyadic::from_parts(1, 1);
  f.value_hi = max(tg.left.eval(f.t_lo), tg.mast_value) + pad;
  f.value_lo = min(tg.right.eval(f.t_lo), tg.mast_value) - pad;
  return f;
}

// Sample points of a trajectory on [t_lo, end]: the ends and every breakpoint.
std::vector<Dyadic> knots(const Trajectory& f, const Dyadic& t_lo, const Dyadic& end) {
  std::vector<Dyadic> ts{t_lo};
  for (const auto& b : f.breakpoints()) {
    if (t_lo < b && b < end) ts.push_back(b);
  }
  if (t_lo < end) ts.push_back(end);
  return ts;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class SvgCanvas {
 public:
  SvgCanvas(const Frame& frame, const RenderOptions& opt) : frame_(frame), opt_(opt) {
    if (opt.svg_scale <= 0 || opt.svg_margin < 0) throw std::invalid_argument("invalid SVG scale or margin");
  }

  std::string x(const Dyadic& value) const {
    return (Dyadic(opt_.svg_margin) + (frame_.value_hi - value) * opt_.svg_scale).to_decimal();
  }
  std::string y(const Dyadic& t) const {
    return (Dyadic(opt_.svg_margin) + (frame_.t_hi - t) * opt_.svg_scale).to_decimal();
  }
  std::string width() const {
    return (Dyadic(2 * opt_.svg_margin) + (frame_.value_hi - frame_.value_lo) * opt_.svg_scale).to_decimal();
  }
  std::string height() const {
    return (Dyadic(2 * opt_.svg_margin) + (frame_.t_hi - frame_.t_lo) * opt_.svg_scale).to_decimal();
  }

 private:
  const Frame& frame_;
  const RenderOptions& opt_;
};

std::string render_svg(const Thermograph& tg, const RenderOptions& opt) {
  const Frame fr = frame_of(tg);
  const SvgCanvas c(fr, opt);
  const Dyadic solid_end = fr.temp ? max(*fr.temp, fr.t_lo) : fr.t_hi;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
      << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
  out << "  <title>thermograph: temperature " << xml_escape(tg.temp.to_string()) << ", mast "
      << xml_escape(tg.mast_value.to_string()) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << c.width() << "\" height=\"" << c.height() << "\" fill=\"white\"/>\n";

  // Temperature axis ticks at the domain start, zero (if visible) and t(G).
  std::vector<Dyadic> t_ticks{fr.t_lo};
  if (fr.t_lo < Dyadic(0) && Dyadic(0) < fr.t_hi) t_ticks.push_back(0);
  if (fr.temp && fr.t_lo < *fr.temp && std::find(t_ticks.begin(), t_ticks.end(), *fr.temp) == t_ticks.end()) {
    t_ticks.push_back(*fr.temp);
  }
  for (const auto& t : t_ticks) {
    out << "  <line class=\"grid\" x1=\"" << c.x(fr.value_hi) << "\" y1=\"" << c.y(t) << "\" x2=\"" << c.x(fr.value_lo)
        << "\" y2=\"" << c.y(t) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    out << "  <text class=\"t-label\" x=\"" << c.x(fr.value_lo) << "\" y=\"" << c.y(t)
        << "\" font-size=\"12\" dx=\"4\">" << xml_escape(t.to_string()) << "</text>\n";
  }

  auto polyline = [&](const Trajectory& f, const char* cls, const char* colour) {
    out << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& t : knots(f, fr.t_lo, solid_end)) {
      out << (first ? "" : " ") << c.x(f.eval(t)) << ',' << c.y(t);
      first = false;
    }
    if (first || solid_end == fr.t_lo) out << ' ' << c.x(f.eval(fr.t_lo)) << ',' << c.y(fr.t_lo);
    out << "\"/>\n";
  };
  polyline(tg.left, "left", "#1f4e9c");
  polyline(tg.right, "right", "#b3261e");

  if (fr.temp) {
    out << "  <line class=\"mast\" x1=\"" << c.x(tg.mast_value) << "\" y1=\"" << c.y(solid_end) << "\" x2=\""
        << c.x(tg.mast_value) << "\" y2=\"" << c.y(fr.t_hi) << "\" stroke=\"black\" stroke-width=\"2\""
        << " stroke-dasharray=\"6,4\"/>\n";
  }

  // Value ticks along the bottom: both scaffold ends and the mast.
  std::vector<Dyadic> v_ticks{tg.left.eval(fr.t_lo), tg.right.eval(fr.t_lo), tg.mast_value};
  std::sort(v_ticks.begin(), v_ticks.end());
  v_ticks.erase(std::unique(v_ticks.begin(), v_ticks.end()), v_ticks.end());
  for (const auto& v : v_ticks) {
    out << "  <text class=\"v-label\" x=\"" << c.x(v) << "\" y=\"" << c.y(fr.t_lo)
        << "\" font-size=\"12\" dy=\"16\" text-anchor=\"middle\">" << xml_escape(v.to_string()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const Thermograph& tg) {
  const Frame fr = frame_of(tg);
  const Dyadic step = Dyadic::from_parts(1, 2);
  const std::int64_t rows = ((fr.t_hi - fr.t_lo) * 4).floor() + 1;
  const std::int64_t cols = ((fr.value_hi - fr.value_lo) * 4).floor() + 1;

  const int gutter = 7;
  const std::int64_t max_cols = kAsciiWidth - gutter;
  const std::int64_t max_rows = kAsciiHeight - 2;  // footer and status lines
  const std::int64_t shown_rows = std::min(rows, max_rows);
  const std::int64_t shown_cols = std::min(cols, max_cols);

  // Clipping keeps the top of the plot (temperature and mast) and centres
  // the columns on the mast.
  const std::int64_t mast_col = ((fr.value_hi - tg.mast_value) * 4).floor();
  std::int64_t col0 = 0;
  if (cols > max_cols) col0 = std::clamp<std::int64_t>(mast_col - max_cols / 2, 0, cols - max_cols);

  auto column = [&](const Dyadic& v) { return ((fr.value_hi - v) * 4).floor() - col0; };

  std::ostringstream out;
  for (std::int64_t r = 0; r < shown_rows; ++r) {
    const Dyadic t = fr.t_hi - step * r;
    std::string line(static_cast<std::size_t>(shown_cols), t == Dyadic(0) ? '.' : ' ');
    auto plot = [&](const Dyadic& v, char ch) {
      const std::int64_t col = column(v);
      if (col < 0 || col >= shown_cols) return;
      char& cell = line[static_cast<std::size_t>(col)];
      cell = (cell == 'L' || cell == 'R') && cell != ch ? '*' : ch;
    };
    const Dyadic lv = tg.left.eval(t);
    const Dyadic rv = tg.right.eval(t);
    const bool on_mast = fr.temp ? *fr.temp < t : false;
    if (on_mast) {
      plot(lv, '|');
    } else {
      plot(lv, 'L');
      plot(rv, 'R');
    }
    std::string label = t.to_string();
    if (label.size() < static_cast<std::size_t>(gutter - 1)) label.insert(0, gutter - 1 - label.size(), ' ');
    out << label << ' ' << line << '\n';
  }
  out << "t(G)=" << tg.temp.to_string() << " mast=" << tg.mast_value.to_string() << " values "
      << (fr.value_hi - Dyadic::from_parts(1, 1)).to_string() << " (left) .. "
      << (fr.value_lo + Dyadic::from_parts(1, 1)).to_string() << " (right), 1/4 per cell\n";
  if (shown_rows < rows || shown_cols < cols) {
    out << "clipped to " << kAsciiWidth << 'x' << kAsciiHeight << " viewport: showing " << shown_rows << " of " << rows
        << " rows, " << shown_cols << " of " << cols << " columns\n";
  }
  return out.str();
}

}  // namespace

std::string render_thermograph(const Thermograph& tg, RenderFormat format, const RenderOptions& options) {
  switch (format) {
    case RenderFormat::json: return thermograph_to_json(tg).dump(options.pretty ? 2 : -1) + "\n";
    case RenderFormat::svg: return render_svg(tg, options);
    case RenderFormat::ascii: return render_ascii(tg);
  }
  throw std::invalid_argument("unknown render format");
}

}  // namespace thermocalc
