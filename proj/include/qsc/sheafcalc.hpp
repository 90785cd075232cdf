#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/bidegree.hpp"
#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

/// Euler characteristics of line-bundle classes on P^1 x P^1, Hilbert
/// polynomials of one-dimensional sheaves and the slope calculus on them.
///
/// Bidegree convention: a curve of bidegree (s, r) has Hilbert polynomial
/// r m + s n + t, i.e. the pair is (coefficient of n, coefficient of m).
/// Every (s, r) in this module is read that way.
namespace qsc::sheafcalc {

using LineBundle = Bidegree;

/// O(-2,-2), the canonical bundle.
inline constexpr LineBundle CANONICAL{-2, -2};

/// Variables m, n of Hilbert polynomials.
const std::vector<std::string>& hilbert_variables();

/// Formal integer combination of line bundles O(a, b).
class KClass {
 public:
  using Terms = std::map<LineBundle, long>;

  KClass() = default;
  explicit KClass(LineBundle bundle, long multiplicity = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long multiplicity(LineBundle bundle) const;

  KClass& add(LineBundle bundle, long multiplicity);
  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(long k, const KClass& c);
  friend bool operator==(const KClass&, const KClass&) = default;

  /// Tensor with O(i, j): every O(a, b) becomes O(a+i, b+j).
  KClass twisted(Bidegree by) const;

  /// "O(0,0) - 4 O(-1,-2)", bundles in descending (a, b) order; "0" if empty.
  std::string str() const;

 private:
  Terms terms_;
};

/// Reads `O(0,0) - 4 O(-1,-2) + O(-2,-2) + 2 O(-1,-3)`. A bare `O` is
/// O(0,0); multiplicities may be written `4 O(..)`, `4O(..)` or `4*O(..)`.
KClass parse_kclass(std::string_view text);

/// Polynomial in m, n; for one-dimensional sheaves r m + s n + t.
class HilbertPoly {
 public:
  HilbertPoly();
  explicit HilbertPoly(Poly p);
  static HilbertPoly linear(const Rational& r, const Rational& s, const Rational& t);

  const Poly& poly() const { return p_; }
  /// Total degree at most one.
  bool is_linear() const { return p_.total_degree() <= 1; }
  Rational r() const;  // coefficient of m
  Rational s() const;  // coefficient of n
  Rational t() const;  // constant term
  Rational at(long m, long n) const;

  HilbertPoly& operator+=(const HilbertPoly& other);
  HilbertPoly& operator-=(const HilbertPoly& other);
  friend HilbertPoly operator+(HilbertPoly a, const HilbertPoly& b) { return a += b; }
  friend HilbertPoly operator-(HilbertPoly a, const HilbertPoly& b) { return a -= b; }
  friend HilbertPoly operator*(const Rational& c, const HilbertPoly& p) {
    return HilbertPoly(c * p.p_);
  }
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;

  std::string str(PrintStyle style = PrintStyle::Spaced) const { return p_.str(style); }

 private:
  Poly p_;
};

HilbertPoly parse_hilbert(std::string_view text);

/// (m+a+1)(n+b+1).
HilbertPoly chi(LineBundle bundle);
HilbertPoly chi(const KClass& k);

/// Hilbert polynomial r m + s n + r + s - r s of O_C, C of bidegree (s, r).
HilbertPoly structure_sheaf_poly(Bidegree sr);

/// t / (r + s).
Rational slope(const HilbertPoly& p);
/// P(m + i, n + j).
HilbertPoly twist(const HilbertPoly& p, Bidegree ij);
/// r m + s n - t.
HilbertPoly dual(const HilbertPoly& p);

/// Sufficient conditions for H^0(F(i,j)) = 0, resp. H^1(F(i,j)) = 0, for
/// every semistable F with polynomial p:
///   max(i, j) < 1 - (r s + t)/(r + s),   min(i, j) > -1 + (r s - t)/(r + s).
/// false means "not implied", never "nonzero".
bool h0_vanishes(const HilbertPoly& p, Bidegree ij);
bool h1_vanishes(const HilbertPoly& p, Bidegree ij);

/// (s, r) = (coefficient of n, coefficient of m). Note the transposition.
Bidegree support_bidegree(const HilbertPoly& p);

/// h^0 and h^1 of F(i, j) at the four twists the Beilinson tableau uses.
struct CohomologyTable {
  struct Cell {
    long h0 = 0;
    long h1 = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  /// (0,0), (-1,0), (0,-1), (-1,-1).
  static constexpr std::array<Bidegree, 4> twists{{{0, 0}, {-1, 0}, {0, -1}, {-1, -1}}};

  std::array<Cell, 4> cells{};

  Cell& at(Bidegree twist);
  const Cell& at(Bidegree twist) const;

  /// Nonnegative entries whose h^0 - h^1 equals chi of the matching twist.
  /// On failure, `why` (when given) receives the first offending twist.
  bool consistent_with(const HilbertPoly& p, std::string* why = nullptr) const;
};

struct BeilinsonResult {
  /// E_1^{i,j} for i in {0,-1,-2}, j in {0,1}, keyed (i, j).
  std::map<std::pair<int, int>, KClass> cells;
  /// p - sum (-1)^(i+j) chi(E_1^{i,j}).
  HilbertPoly residual;
};

/// Throws InvariantViolation when the table is inconsistent with p.
BeilinsonResult beilinson_identity(const CohomologyTable& table, const HilbertPoly& p);

}  // namespace qsc::sheafcalc
