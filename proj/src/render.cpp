#include "qsc/render.hpp"

#include <json.hpp>

namespace qsc::render {

using json = nlohmann::ordered_json;

namespace {

json pair_json(Bidegree d) { return json::array({d.a, d.b}); }

json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(to_string(v));
}

std::vector<std::string> row_cells(const stability::Table& t, const stability::TableRow& row) {
  std::vector<std::string> cells{row.label.str()};
  if (row.twist) cells.push_back(row.twist->str());
  for (const auto& p : row.polys) cells.push_back(p.str());
  for (const auto& s : row.slopes) cells.push_back(s.str());
  cells.resize(t.headers.size());
  return cells;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s + "\n";
}

}  // namespace

std::string verdict_line(const stability::Table& t) {
  const char* relation = t.mode == stability::TieMode::Semistable ? "<=" : "<";
  const std::string label = t.headers.front();

  std::vector<std::string> allowed;
  std::size_t allowed_rows = 0;
  for (const auto& row : t.rows) {
    if (row.verdict == stability::Verdict::Allowed) ++allowed_rows;
    for (std::size_t c = 0; c < row.verdicts.size(); ++c) {
      if (row.verdicts[c] != stability::Verdict::Allowed) continue;
      std::string item = label + " = " + row.label.str();
      if (row.twist) item += " with (i, j) = " + row.twist->str();
      if (c < t.column_cases.size() && t.column_cases[c]) {
        item += " with (i, j) = " + t.column_cases[c]->str();
      }
      allowed.push_back(item);
    }
  }

  std::string s = "Verdict (slope " + std::string(relation) + " " + t.bound.str() + "): ";
  if (allowed_rows == t.rows.size()) {
    return s + "all " + std::to_string(t.rows.size()) + " rows allowed.";
  }
  if (allowed.empty()) return s + "every row destabilizes.";
  s += "allowed only for ";
  for (std::size_t k = 0; k < allowed.size(); ++k) {
    if (k) s += "; ";
    s += allowed[k];
  }
  return s + ".";
}

std::string table_markdown(const stability::Table& t) {
  std::string s = "Table " + std::to_string(t.number) + ". " + t.title + "\n\n";
  s += markdown_row(t.headers);
  s += "|";
  for (std::size_t k = 0; k < t.headers.size(); ++k) s += "---|";
  s += "\n";
  for (const auto& row : t.rows) s += markdown_row(row_cells(t, row));
  s += "\n" + verdict_line(t) + "\n";
  return s;
}

std::string table_json(const stability::Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["label"] = pair_json(row.label);
    if (row.twist) r["twist"] = pair_json(*row.twist);
    json polys = json::array();
    for (const auto& p : row.polys) polys.push_back(p.str(PrintStyle::Compact));
    r["polys"] = polys;
    json slopes = json::array();
    for (const auto& q : row.slopes) slopes.push_back(q.fraction());
    r["slopes"] = slopes;
    json verdicts = json::array();
    for (const auto v : row.verdicts) verdicts.push_back(stability::to_string(v));
    r["verdicts"] = verdicts;
    r["verdict"] = stability::to_string(row.verdict);
    rows.push_back(r);
  }
  return rows.dump();
}

std::string walls_markdown(const sheafcalc::HilbertPoly& p, const std::vector<pairs::Wall>& walls) {
  if (walls.empty()) return "No walls for " + p.str() + ".\n";
  std::string s = "Walls for " + p.str() + ":\n\n";
  s += markdown_row({"alpha", "destabilizer", "complement"});
  s += "|---|---|---|\n";
  for (const auto& w : walls) {
    s += markdown_row({w.alpha.str(),
                       "(" + std::to_string(w.destabilizer.gamma_dim) + ", " +
                           w.destabilizer.poly.str() + ")",
                       "(" + std::to_string(w.complement.gamma_dim) + ", " +
                           w.complement.poly.str() + ")"});
  }
  return s;
}

std::string walls_json(const std::vector<pairs::Wall>& walls) {
  json out = json::array();
  for (const auto& w : walls) {
    json j;
    j["alpha"] = w.alpha.fraction();
    j["destabilizer"] = {{"gamma", w.destabilizer.gamma_dim},
                         {"poly", w.destabilizer.poly.str(PrintStyle::Compact)}};
    j["complement"] = {{"gamma", w.complement.gamma_dim},
                       {"poly", w.complement.poly.str(PrintStyle::Compact)}};
    out.push_back(j);
  }
  return out.dump();
}

std::string poincare_markdown(const space::Value& v) {
  std::string coeffs;
  for (std::size_t k = 0; k < v.poincare.coeffs().size(); ++k) {
    coeffs += (k ? ", " : "") + to_string(v.poincare.coeffs()[k]);
  }
  std::string s = "P = " + v.poincare.str() + "\n\n";
  s += "| degree 0.." + std::to_string(v.poincare.degree()) + " | euler | dim | palindromic |\n";
  s += "|---|---|---|---|\n";
  s += "| " + coeffs + " | " + to_string(topology::euler(v.poincare)) + " | " +
       std::to_string(v.dim) + " | " +
       (topology::is_palindromic(v.poincare, v.dim) ? "yes" : "no") + " |\n";
  return s;
}

std::string poincare_json(const space::Value& v) {
  json coeffs = json::array();
  for (const auto& c : v.poincare.coeffs()) coeffs.push_back(bigint_json(c));
  json out;
  out["coeffs"] = coeffs;
  out["euler"] = bigint_json(topology::euler(v.poincare));
  out["palindromic"] = topology::is_palindromic(v.poincare, v.dim);
  out["dim"] = v.dim;
  return out.dump();
}

std::string error_json(const std::string& kind, const std::string& message,
                       std::optional<std::size_t> position) {
  json e;
  e["kind"] = kind;
  e["message"] = message;
  if (position) e["position"] = *position;
  return json{{"error", e}}.dump();
}

}  // namespace qsc::render
