#pragma once

#include <optional>
#include <string>
#include <vector>

/// The one-shot check of every quantitative claim the library reproduces.
namespace qsc::verify {

struct Check {
  int id = 0;
  std::string claim;
  std::string computed;
  std::optional<std::string> expected;
  bool pass = false;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  bool all_pass() const;
};

struct PropertyTally {
  std::string name;
  int instances = 0;
  int failures = 0;
};

/// Randomized identity suites (ring axioms, gcd and division, Laplace
/// expansion of minors, twist and dual involutions, Euler bookkeeping of
/// flips and blow-ups). Deterministic for a given seed.
std::vector<PropertyTally> run_property_suites(unsigned seed, int instances);

/// Checks 1..11. The Euler characteristic check comes last so the report
/// ends with it.
Report verify_all();

/// "[n] claim: PASS computed = expected" per check, after a summary line.
std::string report_markdown(const Report& r);
std::string report_json(const Report& r);

}  // namespace qsc::verify
