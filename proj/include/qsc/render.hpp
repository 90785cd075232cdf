#pragma once

#include <string>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/pairs.hpp"
#include "qsc/space_expr.hpp"
#include "qsc/stability.hpp"

/// Deterministic markdown and JSON renderings. JSON is compact, keys keep
/// insertion order, rationals are "num/den" strings and polynomials use
/// the compact style ("2m+2n").
namespace qsc::render {

/// Title line, the table, then one verdict line.
std::string table_markdown(const stability::Table& t);
std::string table_json(const stability::Table& t);
/// The verdict line alone, e.g.
/// "Verdict (slope <= 1/5): allowed only for deg(C) = (2, 3) with (i, j) = (0, -1)."
std::string verdict_line(const stability::Table& t);

std::string walls_markdown(const sheafcalc::HilbertPoly& p, const std::vector<pairs::Wall>& walls);
std::string walls_json(const std::vector<pairs::Wall>& walls);

std::string poincare_markdown(const space::Value& v);
std::string poincare_json(const space::Value& v);

/// {"error":{"kind":...,"message":...,"position":N}}
std::string error_json(const std::string& kind, const std::string& message,
                       std::optional<std::size_t> position = std::nullopt);

}  // namespace qsc::render
