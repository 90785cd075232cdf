#include "qsc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsc/error.hpp"

namespace qsc {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0UL);
  const auto db = std::accumulate(b.begin(), b.end(), 0UL);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !seen.insert(v).second) reject("duplicate or empty variable name");
  }
}

Poly::Poly(std::vector<std::string> variables, TermMap terms) : Poly(std::move(variables)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

Poly Poly::constant(std::vector<std::string> variables, const Rational& value) {
  Poly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, const std::string& name) {
  Poly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(std::vector<std::string> variables, Exponents exponents,
                    const Rational& coefficient) {
  Poly p(std::move(variables));
  p.add_term(exponents, coefficient);
  return p;
}

void Poly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != vars_.size()) reject("exponent vector arity mismatch");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<long>(std::accumulate(e.begin(), e.end(), 0UL));
}

long Poly::degree_in(const std::string& name) const {
  const auto k = index_of(name);
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[k]));
  return d;
}

std::size_t Poly::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) reject("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

std::pair<Exponents, Rational> Poly::leading_term() const {
  if (terms_.empty()) reject("leading term of the zero polynomial");
  return *terms_.begin();
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(vars_, Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly Poly::scaled(const Rational& factor) const {
  Poly out(vars_);
  if (factor.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

void Poly::require_same_variables(const Poly& other) const {
  if (vars_ != other.vars_) reject("variable sets differ");
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  require_same_variables(other);
  Poly out(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

std::string Poly::str(PrintStyle style) const {
  if (terms_.empty()) return "0";
  const bool spaced = style == PrintStyle::Spaced;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else if (spaced) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;

    const Rational mag = negative ? -c : c;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mono += vars_[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else if (mag.is_integer()) {
      out += mag.str() + mono;
    } else {
      out += mag.str() + (spaced ? " " : "") + mono;
    }
  }
  return out;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly shift(const Poly& p, const std::map<std::string, long>& offsets) {
  const auto& vars = p.variables();
  std::vector<long> offset(vars.size(), 0);
  for (const auto& [name, o] : offsets) offset[p.index_of(name)] = o;

  // (v + o) for each variable, raised on demand.
  std::vector<Poly> linear;
  linear.reserve(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    linear.push_back(Poly::variable(vars, vars[k]) +
                     Poly::constant(vars, Rational(offset[k])));
  }

  Poly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(vars, c);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (e[k] == 0) continue;
      if (offset[k] != 0) {
        term *= linear[k].pow(e[k]);
        continue;
      }
      Exponents power(vars.size(), 0);
      power[k] = e[k];
      term *= Poly::monomial(vars, power, Rational(1));
    }
    out += term;
  }
  return out;
}

Rational eval(const Poly& p, const std::map<std::string, Rational>& point) {
  const auto& vars = p.variables();
  std::vector<Rational> values;
  values.reserve(vars.size());
  for (const auto& v : vars) {
    const auto it = point.find(v);
    if (it == point.end()) reject("no value assigned to variable '" + v + "'");
    values.push_back(it->second);
  }
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned i = 0; i < e[k]; ++i) term *= values[k];
    }
    total += term;
  }
  return total;
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor) {
  if (p.variables() != divisor.variables()) reject("variable sets differ");
  if (divisor.is_zero()) reject("division by the zero polynomial");
  const auto& vars = p.variables();
  const auto [de, dc] = divisor.leading_term();
  Poly quotient(vars);
  Poly rest = p;
  while (!rest.is_zero()) {
    const auto [re, rc] = rest.leading_term();
    Exponents qe(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (re[k] < de[k]) return std::nullopt;
      qe[k] = re[k] - de[k];
    }
    const Poly step = Poly::monomial(vars, qe, rc / dc);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

}  // namespace qsc
