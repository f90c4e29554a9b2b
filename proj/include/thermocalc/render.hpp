#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "thermocalc/thermo.hpp"
#include "thermocalc/trajectory.hpp"

namespace thermocalc {

using Json = nlohmann::ordered_json;

// Wire format: dyadics are strings in "k/2^m" text form, slopes are -1/0/1.
Json trajectory_to_json(const Trajectory& f);
Trajectory trajectory_from_json(const Json& j);
Json thermograph_to_json(const Thermograph& tg);
Thermograph thermograph_from_json(const Json& j);

enum class RenderFormat { ascii, svg, json };

/// Throws std::invalid_argument for unknown names.
RenderFormat parse_render_format(std::string_view name);

struct RenderOptions {
  std::int64_t svg_scale = 64;   // pixels per unit of value or temperature
  std::int64_t svg_margin = 48;  // pixels around the plot area
  bool pretty = false;           // multi-line JSON
};

inline constexpr int kAsciiWidth = 80;
inline constexpr int kAsciiHeight = 24;

std::string render_thermograph(const Thermograph& tg, RenderFormat format, const RenderOptions& options = {});

}  // namespace thermocalc
