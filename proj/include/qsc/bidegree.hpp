#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace qsc {

/// An integer pair (a, b). Used for bidegrees of forms and curves, for line
/// bundles O(a, b) and for twists (i, j).
struct Bidegree {
  int a = 0;
  int b = 0;

  friend Bidegree operator+(Bidegree p, Bidegree q) { return {p.a + q.a, p.b + q.b}; }
  friend Bidegree operator-(Bidegree p, Bidegree q) { return {p.a - q.a, p.b - q.b}; }
  friend Bidegree operator-(Bidegree p) { return {-p.a, -p.b}; }
  friend Bidegree operator*(int k, Bidegree p) { return {k * p.a, k * p.b}; }
  friend bool operator==(Bidegree, Bidegree) = default;
  friend auto operator<=>(Bidegree, Bidegree) = default;

  bool is_zero() const { return a == 0 && b == 0; }
  bool nonnegative() const { return a >= 0 && b >= 0; }
  /// Componentwise <=.
  bool fits_in(Bidegree outer) const { return a <= outer.a && b <= outer.b; }

  /// "(2, 3)" or, compact, "(2,3)".
  std::string str(bool compact = false) const {
    return "(" + std::to_string(a) + (compact ? "," : ", ") + std::to_string(b) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, Bidegree d) { return os << d.str(); }

}  // namespace qsc
