#include <algorithm>

#include "cursor.hpp"
#include "qsc/poly.hpp"

namespace qsc {

namespace {

/// Longest variable name matching at the cursor (no blanks skipped), or -1.
long match_variable(const detail::Cursor& cur, const std::vector<std::string>& vars) {
  long best = -1;
  std::size_t best_len = 0;
  const auto rest = cur.rest();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (rest.substr(0, vars[k].size()) == vars[k] && vars[k].size() > best_len) {
      best = static_cast<long>(k);
      best_len = vars[k].size();
    }
  }
  return best;
}

Poly parse_term(detail::Cursor& cur, const std::vector<std::string>& vars) {
  Rational coefficient(1);
  bool have_coefficient = false;
  if (cur.at_digit()) {
    const BigInt num = cur.natural();
    BigInt den(1);
    if (cur.consume('/')) den = cur.natural();
    if (den == 0) cur.fail("zero denominator");
    coefficient = Rational(num, den);
    have_coefficient = true;
    cur.consume('*');
  }

  Exponents e(vars.size(), 0);
  bool have_factor = false;
  while (true) {
    cur.skip_ws();
    const long k = match_variable(cur, vars);
    if (k < 0) break;
    cur.set_pos(cur.pos() + vars[static_cast<std::size_t>(k)].size());
    unsigned power = 1;
    if (cur.consume('^')) power = static_cast<unsigned>(cur.small_natural());
    e[static_cast<std::size_t>(k)] += power;
    have_factor = true;
    const std::size_t before = cur.pos();
    if (cur.consume('*')) {
      cur.skip_ws();
      if (match_variable(cur, vars) < 0) {
        cur.set_pos(before);
        cur.fail("expected a variable after '*'");
      }
    }
  }
  if (!have_coefficient && !have_factor) cur.fail("expected a term");
  return Poly::monomial(vars, e, coefficient);
}

}  // namespace

Poly detail::parse_poly_slice(std::string_view text, const std::vector<std::string>& variables,
                              std::size_t base) {
  detail::Cursor cur(text, base);
  Poly out(variables);
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.consume('-')) {
      sign = -1;
    } else if (!cur.consume('+') && !first) {
      if (cur.at_end()) break;
      cur.fail("expected '+' or '-'");
    }
    if (first && cur.at_end()) cur.fail("empty polynomial");
    first = false;
    Poly term = parse_term(cur, variables);
    out += sign < 0 ? -term : term;
    if (cur.at_end()) break;
  }
  return out;
}

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return detail::parse_poly_slice(text, variables, 0);
}

}  // namespace qsc
