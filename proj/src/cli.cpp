#include "qsc/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/bihom.hpp"
#include "qsc/error.hpp"
#include "qsc/pairs.hpp"
#include "qsc/render.hpp"
#include "qsc/sheafcalc.hpp"
#include "qsc/space_expr.hpp"
#include "qsc/stability.hpp"
#include "qsc/verify.hpp"

namespace qsc::cli {

using json = nlohmann::ordered_json;

namespace {

std::optional<Format> format_from(const std::string& name) {
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

// "2,3" or "(2, 3)".
Bidegree parse_pair(const std::string& text, const std::string& what) {
  std::string s;
  for (const char c : text) {
    if (c != ' ' && c != '(' && c != ')') s += c;
  }
  const auto comma = s.find(',');
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (part.empty() || used != part.size()) {
      throw Error(ErrorKind::Parse, what + ": expected two integers \"a,b\", got \"" + text + "\"");
    }
    return v;
  };
  if (comma == std::string::npos) number("");
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::InvariantViolation ? 3 : 2; }

std::string lines(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += p + "\n";
  return s;
}

Outcome run_hilbert(const Command& cmd) {
  using namespace sheafcalc;
  HilbertPoly p;
  if (cmd.kclass) {
    p = chi(parse_kclass(*cmd.kclass));
  } else {
    p = structure_sheaf_poly(parse_pair(*cmd.bidegree, "--bidegree"));
  }
  if (cmd.twist) p = twist(p, parse_pair(*cmd.twist, "--twist"));

  if (cmd.format == Format::Json) {
    json j;
    j["poly"] = p.str(PrintStyle::Compact);
    if (cmd.slope) j["slope"] = slope(p).fraction();
    return {j.dump() + "\n", "", 0};
  }
  std::string out = p.str() + "\n";
  if (cmd.slope) out += "slope " + slope(p).str() + "\n";
  return {out, "", 0};
}

Outcome run_slope(const Command& cmd) {
  const auto p = sheafcalc::parse_hilbert(*cmd.poly);
  Rational value;
  if (cmd.gamma) {
    value = pairs::pair_slope({*cmd.gamma, p}, Rational::parse(*cmd.alpha));
  } else {
    value = sheafcalc::slope(p);
  }
  if (cmd.format == Format::Json) return {json{{"slope", value.fraction()}}.dump() + "\n", "", 0};
  return {value.str() + "\n", "", 0};
}

Outcome run_tables(const Command& cmd) {
  const stability::Table t = cmd.which == 1   ? stability::table1()
                             : cmd.which == 2 ? stability::table2()
                                              : stability::table3();
  if (cmd.format == Format::Json) return {render::table_json(t) + "\n", "", 0};
  return {render::table_markdown(t), "", 0};
}

Outcome run_walls(const Command& cmd) {
  const auto p = sheafcalc::parse_hilbert(*cmd.poly);
  const auto walls = pairs::find_walls(p);
  if (cmd.format == Format::Json) return {render::walls_json(walls) + "\n", "", 0};
  return {render::walls_markdown(p, walls), "", 0};
}

Outcome run_poincare(const Command& cmd) {
  const auto v = space::evaluate_space(space::parse(*cmd.expr));
  if (cmd.format == Format::Json) return {render::poincare_json(v) + "\n", "", 0};
  return {render::poincare_markdown(v), "", 0};
}

Outcome run_verify(const Command& cmd) {
  const auto report = verify::verify_all();
  const int code = report.all_pass() ? 0 : 1;
  if (cmd.format == Format::Json) return {verify::report_json(report) + "\n", "", code};
  return {verify::report_markdown(report), "", code};
}

Outcome run_minors(const Command& cmd) {
  std::optional<std::vector<Bidegree>> rows;
  std::optional<std::vector<Bidegree>> cols;
  if (cmd.rows) rows = bihom::parse_labels(*cmd.rows);
  if (cmd.cols) cols = bihom::parse_labels(*cmd.cols);
  const auto m = bihom::parse_matrix(*cmd.matrix, rows, cols);
  const auto k = bihom::classify_kernel(m);

  if (cmd.format == Format::Json) {
    json j;
    json minors = json::array();
    for (const auto& f : k.minors) minors.push_back(f.str(true, PrintStyle::Compact));
    j["minors"] = minors;
    j["rank_deficient"] = k.rank_deficient;
    if (!k.rank_deficient) {
      j["gcd"] = k.gcd.str(true, PrintStyle::Compact);
      j["kernel"] = json::array({k.kernel.a, k.kernel.b});
      j["inclusion"] = k.inclusion.str(true);
    }
    return {j.dump() + "\n", "", 0};
  }

  std::string minors;
  for (std::size_t i = 0; i < k.minors.size(); ++i) {
    minors += (i ? ", " : "") + (k.minors[i].is_zero() ? std::string("0") : k.minors[i].str());
  }
  if (k.rank_deficient) {
    return {lines({"minors: " + minors, "rank deficient: every maximal minor vanishes"}), "", 0};
  }
  return {lines({"minors: " + minors, "gcd: " + k.gcd.str(true),
                 "kernel: O" + k.kernel.str(true), "inclusion: " + k.inclusion.str()}),
          "", 0};
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  Command cmd;
  std::string format = "markdown";

  CLI::App app{"Exact calculus for moduli of sheaves on P^1 x P^1", "qsc"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"markdown", "md", "json"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of a K-class or curve");
  auto* kclass = hilbert->add_option("--kclass", cmd.kclass, "e.g. \"O(0,0) - 4 O(-1,-2)\"");
  auto* bideg = hilbert->add_option("--bidegree", cmd.bidegree, "s,r for O_C, C of bidegree (s,r)");
  hilbert->add_option("--twist", cmd.twist, "i,j");
  hilbert->add_flag("--slope", cmd.slope, "Also print the slope");
  kclass->excludes(bideg);

  auto* slope = app.add_subcommand("slope", "Slope of a Hilbert polynomial, or alpha-slope of a pair");
  slope->add_option("--poly", cmd.poly)->required();
  auto* gamma = slope->add_option("--gamma", cmd.gamma, "Dimension of the space of sections");
  auto* alpha = slope->add_option("--alpha", cmd.alpha, "Stability parameter");
  gamma->needs(alpha);
  alpha->needs(gamma);

  auto* tables = app.add_subcommand("tables", "Slope case tables");
  tables->add_option("--which", cmd.which)->required()->check(CLI::Range(1, 3));

  auto* walls = app.add_subcommand("walls", "Walls for coherent pairs");
  walls->add_option("--poly", cmd.poly)->required();

  auto* poincare = app.add_subcommand("poincare", "Evaluate a space expression");
  poincare->add_option("--expr", cmd.expr)->required();

  auto* verify = app.add_subcommand("verify", "Run every reproducibility check");
  verify->add_flag("--all", cmd.all)->required();

  auto* minors = app.add_subcommand("minors", "Maximal minors and kernel of a k x (k+1) matrix");
  minors->add_option("--matrix", cmd.matrix)->required();
  minors->add_option("--rows", cmd.rows, "Row labels, e.g. \"(0,0), (0,0)\"");
  minors->add_option("--cols", cmd.cols);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError{"", app.help()};
  } catch (const CLI::ParseError& e) {
    std::string usage = app.help();
    for (auto* sub : app.get_subcommands()) usage = sub->help();
    throw UsageError{e.what(), usage};
  }

  const std::vector<std::pair<CLI::App*, Subcommand>> subs{
      {hilbert, Subcommand::Hilbert}, {slope, Subcommand::Slope},   {tables, Subcommand::Tables},
      {walls, Subcommand::Walls},     {poincare, Subcommand::Poincare},
      {verify, Subcommand::Verify},   {minors, Subcommand::Minors}};
  for (const auto& [app_ptr, sub] : subs) {
    if (app_ptr->parsed()) cmd.sub = sub;
  }
  if (cmd.sub == Subcommand::Hilbert && !cmd.kclass && !cmd.bidegree) {
    throw UsageError{"hilbert needs --kclass or --bidegree", hilbert->help()};
  }
  cmd.format = *format_from(format);
  return cmd;
}

Outcome run(const Command& cmd) {
  try {
    switch (cmd.sub) {
      case Subcommand::Hilbert: return run_hilbert(cmd);
      case Subcommand::Slope: return run_slope(cmd);
      case Subcommand::Tables: return run_tables(cmd);
      case Subcommand::Walls: return run_walls(cmd);
      case Subcommand::Poincare: return run_poincare(cmd);
      case Subcommand::Verify: return run_verify(cmd);
      case Subcommand::Minors: return run_minors(cmd);
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (cmd.format == Format::Json) {
      return {render::error_json(to_string(e.kind()), e.what(), e.position()) + "\n", "", code};
    }
    std::string msg = std::string("error (") + to_string(e.kind()) + ")";
    if (e.position()) msg += " at position " + std::to_string(*e.position());
    return {"", msg + ": " + e.what() + "\n", code};
  }
  return {"", "unknown subcommand\n", 2};
}

Outcome main_entry(const std::vector<std::string>& args,
                   const std::optional<std::string>& env_format) {
  std::optional<Format> forced;
  if (env_format && !env_format->empty()) {
    forced = format_from(*env_format);
    if (!forced) return {"", "QSC_FORMAT must be markdown or json, got \"" + *env_format + "\"\n", 2};
  }

  Command cmd;
  try {
    cmd = parse(args);
  } catch (const UsageError& e) {
    if (e.message.empty()) return {e.usage, "", 0};
    if (forced == Format::Json) {
      return {render::error_json("usage", e.message) + "\n", e.usage, 2};
    }
    return {"", "error: " + e.message + "\n\n" + e.usage, 2};
  }
  if (forced) cmd.format = *forced;
  return run(cmd);
}

}  // namespace qsc::cli
