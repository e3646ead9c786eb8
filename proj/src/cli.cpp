#include "digifrac/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "digifrac/dimension.hpp"
#include "digifrac/errors.hpp"
#include "digifrac/fractal.hpp"
#include "digifrac/membership.hpp"
#include "digifrac/radix.hpp"
#include "digifrac/render.hpp"

namespace digifrac::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> base;
  int balance = 0;
  std::optional<int> depth;
  std::string point;
  std::string integer;
  std::string x;
  std::string y;
  std::string format;
  std::string out_path;
  std::uint64_t max_squares = 10'000'000;
};

DigitSystem system_of(const Options& o) {
  if (!o.base) throw UsageError("--base is required");
  return DigitSystem(*o.base, o.balance);
}

int depth_of(const Options& o) {
  if (!o.depth) throw UsageError("--depth is required");
  return *o.depth;
}

std::pair<Rational, Rational> point_of(const Options& o) {
  if (!o.point.empty()) {
    if (!o.x.empty() || !o.y.empty()) throw UsageError("give either --point or --x/--y, not both");
    const auto comma = o.point.find(',');
    if (comma == std::string::npos) throw ParseError("--point expects 'x,y'");
    return {Rational::parse(o.point.substr(0, comma)), Rational::parse(o.point.substr(comma + 1))};
  }
  if (o.x.empty() || o.y.empty()) throw UsageError("--point or both --x and --y are required");
  return {Rational::parse(o.x), Rational::parse(o.y)};
}

std::pair<DigitString, DigitString> numerals_of(const Options& o) {
  if (o.x.empty() || o.y.empty()) throw UsageError("--x and --y numerals are required");
  return {parse_numeral(o.x), parse_numeral(o.y)};
}

// Writes to --out when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& payload) {
  if (o.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + o.out_path + "' for writing");
  file << payload;
  if (!file) throw std::ios_base::failure("failed writing '" + o.out_path + "'");
}

std::string cmd_convert(const Options& o) {
  if (!o.integer.empty()) {
    if (!o.x.empty()) throw UsageError("give either --int or --x, not both");
    const auto sys = system_of(o);
    const auto value = Rational::parse(o.integer);
    if (!value.is_integer()) throw ParseError("--int expects an integer");
    return to_string(int_to_digits(value.numerator(), sys)) + "\n";
  }
  if (o.x.empty()) throw UsageError("convert needs --int or --x");
  if (o.x.front() == '[') return digits_to_rational(parse_numeral(o.x)).str() + "\n";
  const auto sys = system_of(o);
  const int depth = depth_of(o);
  std::string text;
  for (const auto& e : expansions(Rational::parse(o.x), sys, depth)) text += to_string(e) + "\n";
  return text;
}

std::string cmd_add(const Options& o) {
  const auto [x, y] = numerals_of(o);
  return to_string(add(x, y)) + "\n";
}

std::string cmd_carryfree(const Options& o) {
  const auto [x, y] = numerals_of(o);
  return carry_free(x, y) ? "true\n" : "false\n";
}

std::string cmd_member(const Options& o) {
  const auto sys = system_of(o);
  const auto [x, y] = point_of(o);
  return member(x, y, sys) ? "true\n" : "false\n";
}

std::string cmd_gen(const Options& o, const Limits& limits) {
  const auto sys = system_of(o);
  const int depth = depth_of(o);
  const auto p = generate(sys, depth, limits);
  if (o.format == "text") {
    std::ostringstream os;
    os << p.system().radix() << ' ' << p.system().balance() << ' ' << p.depth() << ' ' << p.size()
       << '\n';
    for (const auto& s : p.squares()) os << s.i << ' ' << s.j << '\n';
    return os.str();
  }
  return to_json(p) + "\n";
}

std::string cmd_dim(const Options& o, const Limits& limits) {
  return to_json_line(box_count_estimate(system_of(o), depth_of(o), limits)) + "\n";
}

std::string cmd_render(const Options& o, const Limits& limits) {
  const auto p = generate(system_of(o), depth_of(o), limits);
  if (o.format == "svg") return svg_string(p);
  return pbm_string(rasterize(p));
}

std::pair<int, std::string> cmd_verify(const Options& o, const Limits& limits) {
  const auto sys = system_of(o);
  const int depth = depth_of(o);
  const auto by_ifs = generate(sys, depth, limits);
  const auto by_digits = prefractal_by_digits(sys, depth, limits);
  if (by_ifs == by_digits) {
    return {0, "equivalence: ok (" + std::to_string(by_ifs.size()) + " squares)\n"};
  }
  return {1, "equivalence: MISMATCH (iterated " + std::to_string(by_ifs.size()) +
                 " squares, digit rule " + std::to_string(by_digits.size()) + " squares)\n"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact digit-system arithmetic and triangle/hexagon fractal prefractals", "digifrac"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-squares", o.max_squares, "Cap on generated squares")->capture_default_str();

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--base", o.base, "Radix m >= 2");
    sub->add_option("--balance", o.balance, "Balance b (0 = standard base)")->capture_default_str();
  };
  auto add_depth = [&](CLI::App* sub) { sub->add_option("--depth", o.depth, "Prefractal depth n")->check(CLI::NonNegativeNumber); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Output file (default stdout)"); };

  auto* convert = app.add_subcommand("convert", "Integer to numeral, numeral to rational, or rational to expansion prefixes");
  add_system(convert);
  add_depth(convert);
  convert->add_option("--int", o.integer, "Integer to convert");
  convert->add_option("--x", o.x, "Numeral like '[1 0 . 2]@3b0', or rational p/q");

  auto* add_cmd = app.add_subcommand("add", "Add two numerals of the same system");
  add_cmd->add_option("--x", o.x, "First numeral")->required();
  add_cmd->add_option("--y", o.y, "Second numeral")->required();

  auto* carry = app.add_subcommand("carryfree", "Whether two numerals add without carries");
  carry->add_option("--x", o.x, "First numeral")->required();
  carry->add_option("--y", o.y, "Second numeral")->required();

  auto* member_cmd = app.add_subcommand("member", "Exact membership of a rational point");
  add_system(member_cmd);
  member_cmd->add_option("--point", o.point, "Point as x,y with rationals p/q");
  member_cmd->add_option("--x", o.x, "x coordinate p/q");
  member_cmd->add_option("--y", o.y, "y coordinate p/q");

  auto* gen = app.add_subcommand("gen", "Generate the depth-n prefractal");
  add_system(gen);
  add_depth(gen);
  add_out(gen);
  gen->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* dim = app.add_subcommand("dim", "Box-count dimension report");
  add_system(dim);
  add_depth(dim);
  add_out(dim);

  auto* render = app.add_subcommand("render", "Render the depth-n prefractal");
  add_system(render);
  add_depth(render);
  add_out(render);
  render->add_option("--format", o.format, "pbm or svg")->check(CLI::IsMember({"pbm", "svg"}));

  auto* verify = app.add_subcommand("verify", "Check IFS and digit constructions agree");
  add_system(verify);
  add_depth(verify);

  std::vector<const char*> argv{"digifrac"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Limits limits{o.max_squares};
  try {
    std::string payload;
    int code = 0;
    if (convert->parsed()) {
      payload = cmd_convert(o);
    } else if (add_cmd->parsed()) {
      payload = cmd_add(o);
    } else if (carry->parsed()) {
      payload = cmd_carryfree(o);
    } else if (member_cmd->parsed()) {
      payload = cmd_member(o);
    } else if (gen->parsed()) {
      payload = cmd_gen(o, limits);
    } else if (dim->parsed()) {
      payload = cmd_dim(o, limits);
    } else if (render->parsed()) {
      payload = cmd_render(o, limits);
    } else if (verify->parsed()) {
      std::tie(code, payload) = cmd_verify(o, limits);
    }
    emit(o, out, payload);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace digifrac::cli
