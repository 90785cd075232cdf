#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order with the greater monomial first, so that
/// iterating a term map visits terms in printing order (3m + 2n + 1).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class PrintStyle { Spaced, Compact };

/// Sparse polynomial over the rationals in a fixed list of named, commuting
/// variables. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables);
  Poly(std::vector<std::string> variables, TermMap terms);

  static Poly constant(std::vector<std::string> variables, const Rational& value);
  static Poly variable(std::vector<std::string> variables, const std::string& name);
  static Poly monomial(std::vector<std::string> variables, Exponents exponents,
                       const Rational& coefficient);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& exponents) const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  std::pair<Exponents, Rational> leading_term() const;

  Poly pow(unsigned k) const;
  Poly scaled(const Rational& factor) const;

  Poly operator-() const { return scaled(Rational(-1)); }
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string str(PrintStyle style = PrintStyle::Spaced) const;

 private:
  void require_same_variables(const Poly& other) const;
  void add_term(const Exponents& exponents, const Rational& coefficient);

  std::vector<std::string> vars_;
  TermMap terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// p evaluated at (v + offset[v]) for every listed variable.
Poly shift(const Poly& p, const std::map<std::string, long>& offsets);

Rational eval(const Poly& p, const std::map<std::string, Rational>& point);

/// The quotient q with p == q * divisor, or nullopt when the division leaves
/// a remainder.
std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor);

/// Reads the textual syntax produced by Poly::str: `3m + 2n - 1`, `mn`,
/// `xi^4 + 3xi^3`, `1/2 m`. Variable names are matched longest-first.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace qsc
