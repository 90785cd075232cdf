#include <string>

#include "cursor.hpp"
#include "qsc/bihom.hpp"
#include "qsc/error.hpp"

namespace qsc::bihom {
namespace {

Bidegree read_pair(detail::Cursor& cur) {
  cur.expect('(');
  const long a = cur.signed_integer();
  cur.expect(',');
  const long b = cur.signed_integer();
  cur.expect(')');
  return {static_cast<int>(a), static_cast<int>(b)};
}

// A form occupying text[begin, end). Zero without annotation yields nullopt.
std::optional<BihomForm> parse_entry(std::string_view text, std::size_t begin, std::size_t end) {
  const std::string_view slice = text.substr(begin, end - begin);
  const std::size_t at = slice.find('@');
  const std::string_view body = slice.substr(0, at);
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    detail::Cursor cur(text);
    cur.set_pos(begin);
    cur.fail("expected a form");
  }
  const Poly p = detail::parse_poly_slice(body, form_variables(), begin);

  std::optional<Bidegree> bidegree;
  if (at != std::string_view::npos) {
    detail::Cursor cur(text.substr(0, end));
    cur.set_pos(begin + at + 1);
    bidegree = read_pair(cur);
    if (!cur.at_end()) cur.fail("unexpected text after the bidegree");
    if (!bidegree->nonnegative() && !p.is_zero()) {
      cur.set_pos(begin + at);
      cur.fail("a nonzero form needs a nonnegative bidegree");
    }
  }
  if (p.is_zero() && !bidegree) return std::nullopt;
  try {
    return BihomForm::from_poly(p, bidegree);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string(e.what()) + " at position " + std::to_string(begin),
                begin);
  }
}

}  // namespace

BihomForm parse_form(std::string_view text) {
  const auto f = parse_entry(text, 0, text.size());
  if (!f) reject("the zero form needs a bidegree annotation such as 0 @(1,0)");
  return *f;
}

BihomMatrix parse_matrix(std::string_view text, std::optional<std::vector<Bidegree>> row_labels,
                         std::optional<std::vector<Bidegree>> col_labels) {
  detail::Cursor cur(text);
  std::vector<std::vector<std::optional<BihomForm>>> grid;
  cur.expect('[');
  do {
    cur.expect('[');
    std::vector<std::optional<BihomForm>> row;
    while (true) {
      cur.skip_ws();
      const std::size_t begin = cur.pos();
      int depth = 0;
      std::size_t p = begin;
      for (; p < text.size(); ++p) {
        const char c = text[p];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == ',' || c == ']' || c == '[')) break;
      }
      if (p >= text.size() || text[p] == '[') {
        cur.set_pos(p);
        cur.fail("expected ',' or ']'");
      }
      row.push_back(parse_entry(text, begin, p));
      cur.set_pos(p + 1);
      if (text[p] == ']') break;
    }
    grid.push_back(std::move(row));
  } while (cur.consume(','));
  cur.expect(']');
  if (!cur.at_end()) cur.fail("unexpected text after the matrix");

  for (const auto& row : grid) {
    if (row.size() != grid.front().size()) reject("matrix rows have different lengths");
  }

  if (!row_labels && !col_labels) return BihomMatrix::infer(grid);

  // With one side given, each label on the other side follows from any
  // nonzero entry in its line.
  const std::size_t nr = grid.size();
  const std::size_t nc = grid.front().size();
  std::vector<Bidegree> rl;
  std::vector<Bidegree> cl;
  if (row_labels) {
    rl = *row_labels;
    if (rl.size() != nr) reject("row labels do not match the row count");
  }
  if (col_labels) {
    cl = *col_labels;
    if (cl.size() != nc) reject("column labels do not match the column count");
  }
  if (!col_labels) {
    for (std::size_t l = 0; l < nc; ++l) {
      std::size_t k = 0;
      while (k < nr && !grid[k][l]) ++k;
      if (k == nr) reject("column " + std::to_string(l + 1) + " is zero; give column labels");
      cl.push_back(rl[k] - grid[k][l]->bidegree());
    }
  }
  if (!row_labels) {
    for (std::size_t k = 0; k < nr; ++k) {
      std::size_t l = 0;
      while (l < nc && !grid[k][l]) ++l;
      if (l == nc) reject("row " + std::to_string(k + 1) + " is zero; give row labels");
      rl.push_back(cl[l] + grid[k][l]->bidegree());
    }
  }

  BihomMatrix m(rl, cl);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (std::size_t l = 0; l < grid[k].size(); ++l) {
      if (grid[k][l]) m.set(k, l, *grid[k][l]);
    }
  }
  return m;
}

std::vector<Bidegree> parse_labels(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Bidegree> out;
  do {
    long count = 1;
    if (cur.at_digit()) {
      count = cur.small_natural();
      cur.consume('*');
    }
    const Bidegree d = read_pair(cur);
    for (long k = 0; k < count; ++k) out.push_back(d);
  } while (cur.consume(','));
  if (!cur.at_end()) cur.fail("expected ',' between labels");
  if (out.empty()) reject("no labels given");
  return out;
}

}  // namespace qsc::bihom
