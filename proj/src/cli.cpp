#include "thermocalc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "thermocalc/memo.hpp"
#include "thermocalc/notation.hpp"
#include "thermocalc/thermo.hpp"

namespace thermocalc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t positive_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v <= 0) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be a positive integer, got '" + text + "'");
  }
}

// Config file < environment; flags are applied afterwards by the caller.
void apply_config(const std::optional<std::string>& path, RenderOptions& render) {
  if (path) {
    std::ifstream in(*path);
    if (!in) throw UsageError("cannot read config file '" + *path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError("malformed config file '" + *path + "': " + e.what());
    }
    if (j.contains("svg_scale")) render.svg_scale = j.at("svg_scale").get<std::int64_t>();
    if (j.contains("svg_margin")) render.svg_margin = j.at("svg_margin").get<std::int64_t>();
  }
  if (const char* env = std::getenv("THERMOCALC_SVG_SCALE")) {
    render.svg_scale = positive_integer(env, "THERMOCALC_SVG_SCALE");
  }
  if (const char* env = std::getenv("THERMOCALC_SVG_MARGIN")) {
    render.svg_margin = positive_integer(env, "THERMOCALC_SVG_MARGIN");
  }
}

std::string describe_class(TempClass c) {
  switch (c) {
    case TempClass::number: return "number";
    case TempClass::numberish_not_number: return "numberish";
    case TempClass::hot: return "hot";
  }
  return "?";
}

}  // namespace

Parsed parse_command_line(const std::vector<std::string>& args) {
  Parsed parsed;
  Command cmd;
  CLI::App app{"Exact thermographs, cooling and temperature of short games", "thermocalc"};
  app.require_subcommand(1);
  std::optional<std::string> config_path;
  std::size_t cache_limit = 0;
  app.add_option("--config", config_path, "JSON file with svg_scale / svg_margin");
  app.add_option("--cache-limit", cache_limit, "Flush a memo table once it holds this many entries (0 = unbounded)");

  std::vector<std::string> games;
  bool raw = false;
  auto game_args = [&](CLI::App* sub, std::size_t count) {
    auto* opt = sub->add_option("games", games, "Game in brace notation")->required();
    opt->expected(static_cast<int>(count));
    return sub;
  };

  auto* eval = game_args(app.add_subcommand("eval", "Print the game (canonical unless --raw)"), 1);
  eval->add_flag("--raw", raw, "Print the formal tree as given");
  game_args(app.add_subcommand("canonical", "Print the canonical form"), 1);
  game_args(app.add_subcommand("compare", "Compare two games: >, <, = or ||"), 2);
  game_args(app.add_subcommand("stops", "Print the left and right stops"), 1);
  game_args(app.add_subcommand("temp", "Print the temperature"), 1);
  game_args(app.add_subcommand("mean", "Print the mean value"), 1);
  game_args(app.add_subcommand("class", "Print number, numberish or hot"), 1);

  std::string cool_t;
  auto* cool = game_args(app.add_subcommand("cool", "Cool a game by t"), 1);
  cool->add_option("-t,--temperature", cool_t, "Cooling amount (dyadic, >= -1)")->required();
  cool->add_flag("--raw", raw, "Print the formal cooled tree");

  std::string format = "ascii";
  bool pretty = false;
  std::optional<std::int64_t> svg_scale;
  std::optional<std::int64_t> svg_margin;
  auto* thermo_cmd = game_args(app.add_subcommand("thermo", "Render the thermograph"), 1);
  thermo_cmd->add_option("-f,--format", format, "ascii, svg or json")->check(CLI::IsMember({"ascii", "svg", "json"}));
  thermo_cmd->add_flag("--pretty", pretty, "Multi-line JSON");
  thermo_cmd->add_option("--scale", svg_scale, "SVG pixels per unit");
  thermo_cmd->add_option("--margin", svg_margin, "SVG margin in pixels");

  game_args(app.add_subcommand("is-int", "Thermograph-based integer test"), 1);

  auto* selftest = app.add_subcommand("selftest", "Run the bounded property suites");
  selftest->add_option("--random", cmd.selftest.random_games, "Random games per unary suite");
  selftest->add_option("--birthday", cmd.selftest.random_birthday, "Birthday bound for random games");
  selftest->add_option("--pairs", cmd.selftest.random_pairs, "Random pairs for binary suites");
  selftest->add_option("--seed", cmd.selftest.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.early = {kExitOk, app.help(), ""};
    return parsed;
  } catch (const CLI::ParseError& e) {
    parsed.early = {kExitUsage, "", std::string(e.what()) + "\n"};
    return parsed;
  }

  static const std::vector<std::pair<std::string, Verb>> verbs{
      {"eval", Verb::eval},     {"canonical", Verb::canonical}, {"compare", Verb::compare}, {"stops", Verb::stops},
      {"temp", Verb::temp},     {"mean", Verb::mean},           {"cool", Verb::cool},       {"thermo", Verb::thermo},
      {"is-int", Verb::is_int}, {"selftest", Verb::selftest},   {"class", Verb::classify}};
  const std::string chosen = app.get_subcommands().front()->get_name();
  for (const auto& [name, verb] : verbs) {
    if (name == chosen) cmd.verb = verb;
  }

  try {
    apply_config(config_path, cmd.render);
  } catch (const UsageError& e) {
    parsed.early = {kExitUsage, "", std::string(e.what()) + "\n"};
    return parsed;
  }
  if (svg_scale) cmd.render.svg_scale = *svg_scale;
  if (svg_margin) cmd.render.svg_margin = *svg_margin;
  if (cmd.render.svg_scale <= 0 || cmd.render.svg_margin < 0) {
    parsed.early = {kExitUsage, "", "SVG scale must be positive and margin non-negative\n"};
    return parsed;
  }
  cmd.render.pretty = pretty;
  if (chosen == "thermo") cmd.format = parse_render_format(format);
  cmd.games = std::move(games);
  cmd.raw = raw;
  if (chosen == "cool") cmd.cool_t = cool_t;
  cmd.cache_limit = cache_limit;
  parsed.command = std::move(cmd);
  return parsed;
}

Result run(const Command& cmd) {
  set_cache_limit(cmd.cache_limit);

  // Every argument must parse before any computation starts.
  std::vector<Game> games;
  std::optional<Dyadic> t;
  try {
    for (const auto& text : cmd.games) games.push_back(parse_expression(text));
    if (cmd.cool_t) t = Dyadic::parse(*cmd.cool_t);
  } catch (const ParseError& e) {
    return {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const DyadicParseError& e) {
    return {kExitUsage, "", std::string("bad temperature: ") + e.what() + "\n"};
  }

  std::ostringstream out;
  try {
    switch (cmd.verb) {
      case Verb::eval:
        out << to_brace_notation(cmd.raw ? games[0] : canonicalize(games[0])) << '\n';
        break;
      case Verb::canonical:
        out << to_brace_notation(canonicalize(games[0])) << '\n';
        break;
      case Verb::compare:
        out << to_symbol(compare_games(games[0], games[1])) << '\n';
        break;
      case Verb::stops: {
        const Stops s = stops(games[0]);
        out << s.left.to_string() << ' ' << s.right.to_string() << '\n';
        break;
      }
      case Verb::temp:
        out << temperature(games[0]).to_string() << '\n';
        break;
      case Verb::classify:
        out << describe_class(classify(games[0])) << '\n';
        break;
      case Verb::mean:
        out << mean_value(games[0]).to_string() << '\n';
        break;
      case Verb::cool: {
        const Game c = cooled(games[0], *t);
        out << to_brace_notation(cmd.raw ? c : canonicalize(c)) << '\n';
        break;
      }
      case Verb::thermo:
        out << render_thermograph(thermograph(games[0]), cmd.format, cmd.render);
        break;
      case Verb::is_int: {
        const auto n = integer_decision(games[0]);
        out << (n ? std::to_string(*n) : std::string("not-an-integer")) << '\n';
        break;
      }
      case Verb::selftest: {
        std::uint64_t checked = 0;
        std::uint64_t failed = 0;
        for (const auto& report : run_selftest(cmd.selftest)) {
          out << report.summary() << '\n';
          for (const auto& s : report.samples) out << "  FAIL " << s << '\n';
          checked += report.checked;
          failed += report.failed;
        }
        out << "selftest: " << checked << " checks, " << failed << " failures\n";
        return {failed == 0 ? kExitOk : kExitPropertyFailure, out.str(), ""};
      }
    }
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, out.str(), std::string("error: ") + e.what() + "\n"};
  }
  return {kExitOk, out.str(), ""};
}

Result run_args(const std::vector<std::string>& args) {
  Parsed parsed = parse_command_line(args);
  if (!parsed.command) return parsed.early;
  return run(*parsed.command);
}

}  // namespace thermocalc::cli
