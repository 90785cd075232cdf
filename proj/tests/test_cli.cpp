#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsc/cli.hpp"
#include "qsc/sheafcalc.hpp"

using qsc::cli::Format;
using qsc::cli::main_entry;
using qsc::cli::Subcommand;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qsc::cli::Outcome run(std::vector<std::string> args,
                      std::optional<std::string> env = std::nullopt) {
  return main_entry(args, env);
}

}  // namespace

TEST_CASE("argument parsing") {
  auto cmd = qsc::cli::parse({"hilbert", "--kclass", "O(0,0) - 4 O(-1,-2) + O(-2,-2) + 2 O(-1,-3)"});
  CHECK(cmd.sub == Subcommand::Hilbert);
  CHECK(*cmd.kclass == "O(0,0) - 4 O(-1,-2) + O(-2,-2) + 2 O(-1,-3)");

  cmd = qsc::cli::parse({"walls", "--poly", "3m+2n+1"});
  CHECK(cmd.sub == Subcommand::Walls);
  CHECK(*cmd.poly == "3m+2n+1");

  cmd = qsc::cli::parse({"verify", "--all", "--format", "json"});
  CHECK(cmd.sub == Subcommand::Verify);
  CHECK(cmd.all);
  CHECK(cmd.format == Format::Json);

  cmd = qsc::cli::parse({"--format", "json", "tables", "--which", "2"});
  CHECK(cmd.which == 2);
  CHECK(cmd.format == Format::Json);

  CHECK_THROWS_AS(qsc::cli::parse({"bogus"}), qsc::cli::UsageError);
  CHECK_THROWS_AS(qsc::cli::parse({"walls", "--poly", "m", "--nope"}), qsc::cli::UsageError);
  CHECK_THROWS_AS(qsc::cli::parse({"tables", "--which", "4"}), qsc::cli::UsageError);
  CHECK_THROWS_AS(qsc::cli::parse({"hilbert"}), qsc::cli::UsageError);
  CHECK_THROWS_AS(qsc::cli::parse({"hilbert", "--kclass", "O", "--bidegree", "1,1"}),
                  qsc::cli::UsageError);
  CHECK_THROWS_AS(qsc::cli::parse({}), qsc::cli::UsageError);
}

TEST_CASE("hilbert") {
  const auto z = run({"hilbert", "--kclass", "O(0,0) - 4 O(-1,-2) + O(-2,-2) + 2 O(-1,-3)"});
  CHECK(z.exit_code == 0);
  CHECK(z.out == "2\n");

  const auto c = run({"hilbert", "--bidegree", "2,3", "--twist", "0,1", "--slope"});
  CHECK(c.out == "3m + 2n + 1\nslope 1/5\n");

  const auto j = run({"hilbert", "--bidegree", "(2, 3)", "--slope", "--format", "json"});
  CHECK(j.out == "{\"poly\":\"3m+2n-1\",\"slope\":\"-1/5\"}\n");
}

TEST_CASE("slope") {
  CHECK(run({"slope", "--poly", "3m+2n+1"}).out == "1/5\n");
  CHECK(run({"slope", "--poly", "2m+2n", "--gamma", "1", "--alpha", "4"}).out == "1\n");
  CHECK(run({"slope", "--poly", "2m+2n", "--gamma", "1"}).exit_code == 2);
}

TEST_CASE("tables match the golden files") {
  for (const char* which : {"1", "2", "3"}) {
    const auto out = run({"tables", "--which", which});
    CHECK(out.exit_code == 0);
    CHECK(out.out == slurp(std::string(QSC_GOLDEN_DIR) + "/table" + which + ".md"));
  }
  const auto j = nlohmann::json::parse(run({"tables", "--which", "3", "--format", "json"}).out);
  REQUIRE(j.size() == 4);
  CHECK(j[1]["twist"] == nlohmann::json::array({-2, -2}));
  CHECK(j[1]["verdict"] == "allowed");
  CHECK(j[0]["slopes"][0] == "1/4");
}

TEST_CASE("walls") {
  const auto w = run({"walls", "--poly", "3m+2n+1", "--format", "json"});
  CHECK(w.out ==
        "[{\"alpha\":\"4/1\",\"destabilizer\":{\"gamma\":1,\"poly\":\"2m+2n\"},"
        "\"complement\":{\"gamma\":0,\"poly\":\"m+1\"}}]\n");
  CHECK(run({"walls", "--poly", "m+n+1"}).out == "No walls for m + n + 1.\n");
}

TEST_CASE("poincare") {
  const auto p = run({"poincare", "--expr",
                      "blowdown(flip(bundle(Hilb(2,(1,0,2,0,1)),9), P8*P1, 2, 1), P11, 2)",
                      "--format", "json"});
  CHECK(p.out ==
        "{\"coeffs\":[1,3,8,10,11,11,11,11,11,11,10,8,3,1],\"euler\":110,\"palindromic\":true,"
        "\"dim\":13}\n");
  const auto bad = run({"poincare", "--expr", "blowup(P3, P2, 2)", "--format", "json"});
  CHECK(bad.exit_code == 3);
  const auto err = nlohmann::json::parse(bad.out);
  CHECK(err["error"]["kind"] == "invariant_violation");
}

TEST_CASE("minors") {
  const auto m = run({"minors", "--matrix", "[[x, y, x, y], [z, w, 0, 0], [0, 0, z, w]]", "--rows",
                      "(0,-1), (-1,0), (-1,0)", "--cols", "4*(-1,-1)"});
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("gcd: xw - yz @(1,1)\n") != std::string::npos);
  CHECK(m.out.find("kernel: O(-1,-2)\n") != std::string::npos);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--all"});
  CHECK(v.exit_code == 0);
  REQUIRE(v.out.size() > 16);
  CHECK(v.out.substr(v.out.size() - 15) == "PASS 110 = 110\n");
  for (int id = 1; id <= 11; ++id) {
    CHECK(v.out.find("[" + std::to_string(id) + "] ") != std::string::npos);
  }
  const auto j = nlohmann::json::parse(run({"verify", "--all", "--format", "json"}).out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 11);
  CHECK(run({"verify"}).exit_code == 2);
}

TEST_CASE("errors and exit codes") {
  const auto parse_md = run({"hilbert", "--kclass", "O(0,"});
  CHECK(parse_md.exit_code == 2);
  CHECK(parse_md.out.empty());
  CHECK(parse_md.err.find("position 4") != std::string::npos);

  const auto parse_json = run({"walls", "--poly", "3m + * 1", "--format", "json"});
  CHECK(parse_json.exit_code == 2);
  const auto e = nlohmann::json::parse(parse_json.out);
  CHECK(e["error"]["kind"] == "parse");
  CHECK(e["error"]["position"] == 5);

  const auto unknown = run({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);

  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("QSC_FORMAT overrides --format") {
  const auto j = run({"walls", "--poly", "3m+2n+1", "--format", "markdown"}, "json");
  CHECK(j.out.front() == '[');
  const auto md = run({"walls", "--poly", "3m+2n+1", "--format", "json"}, "markdown");
  CHECK(md.out.rfind("Walls for", 0) == 0);
  CHECK(run({"walls", "--poly", "m"}, "yaml").exit_code == 2);
  const auto usage = run({"frobnicate"}, "json");
  CHECK(nlohmann::json::parse(usage.out)["error"]["kind"] == "usage");
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--all"}, {"tables", "--which", "1", "--format", "json"},
        {"walls", "--poly", "4m+3n+2"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("printed polynomials parse back") {
  for (const char* which : {"1", "2", "3"}) {
    const auto j = nlohmann::json::parse(run({"tables", "--which", which, "--format", "json"}).out);
    for (const auto& row : j) {
      for (const auto& p : row["polys"]) {
        const auto text = p.get<std::string>();
        CHECK(qsc::sheafcalc::parse_hilbert(text).str(qsc::PrintStyle::Compact) == text);
      }
    }
  }
}
