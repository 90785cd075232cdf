#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/bidegree.hpp"
#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

/// Bihomogeneous forms in (x, y; z, w) on P^1 x P^1 and matrices of them,
/// i.e. morphisms between direct sums of line bundles.
namespace qsc::bihom {

/// Variables of the ambient coordinate ring, in this order.
const std::vector<std::string>& form_variables();
/// Affine chart y = w = 1.
const std::vector<std::string>& affine_variables();

/// A form of bidegree (a, b). Coefficient (i, j) multiplies
/// x^i y^(a-i) z^j w^(b-j). The zero form keeps its bidegree, which may then
/// be negative (a zero entry between bundles with no nonzero maps).
class BihomForm {
 public:
  using Coefficients = std::map<std::pair<unsigned, unsigned>, Rational>;

  BihomForm() = default;
  explicit BihomForm(Bidegree bidegree);
  BihomForm(Bidegree bidegree, Coefficients coefficients);

  static BihomForm monomial(Bidegree bidegree, unsigned i, unsigned j,
                            const Rational& c = Rational(1));
  static BihomForm constant(const Rational& c);
  static BihomForm x();
  static BihomForm y();
  static BihomForm z();
  static BihomForm w();

  /// From a polynomial in x, y, z, w. Without an explicit bidegree the
  /// polynomial must be nonzero and bihomogeneous.
  static BihomForm from_poly(const Poly& p, std::optional<Bidegree> bidegree = std::nullopt);
  Poly to_poly() const;

  Bidegree bidegree() const { return bidegree_; }
  bool is_zero() const { return coefficients_.empty(); }
  const Coefficients& coefficients() const { return coefficients_; }
  Rational coefficient(unsigned i, unsigned j) const;

  BihomForm scaled(const Rational& c) const;
  BihomForm operator-() const { return scaled(Rational(-1)); }
  BihomForm& operator+=(const BihomForm& other);
  BihomForm& operator-=(const BihomForm& other);
  friend BihomForm operator+(BihomForm f, const BihomForm& g) { return f += g; }
  friend BihomForm operator-(BihomForm f, const BihomForm& g) { return f -= g; }
  friend BihomForm operator*(const BihomForm& f, const BihomForm& g);
  friend bool operator==(const BihomForm&, const BihomForm&) = default;

  /// "x^2zw + xyw^2"; with `annotate`, " @(2,2)" is appended.
  std::string str(bool annotate = false, PrintStyle style = PrintStyle::Spaced) const;

 private:
  Bidegree bidegree_;
  Coefficients coefficients_;
};

BihomForm form_mul(const BihomForm& f, const BihomForm& g);

/// Sets y = w = 1; the result is a polynomial in x, z.
Poly dehomogenize(const BihomForm& f);
/// Inverse of dehomogenize for a target bidegree that bounds the x- and
/// z-degrees of `affine`.
BihomForm rehomogenize(const Poly& affine, Bidegree bidegree);

/// Power of y (first) and of w (second) dividing f.
std::pair<unsigned, unsigned> yw_multiplicity(const BihomForm& f);

/// Scales f so its leading coefficient under graded-lex order on
/// (x, y, z, w) is 1. Zero stays zero.
BihomForm make_monic(const BihomForm& f);

/// Morphism  sum_l O(col_l) -> sum_k O(row_k)  written as a matrix whose
/// rows are target summands and columns source summands. Entry (k, l) has
/// bidegree row_k - col_l.
class BihomMatrix {
 public:
  BihomMatrix() = default;
  BihomMatrix(std::vector<Bidegree> row_labels, std::vector<Bidegree> col_labels);
  BihomMatrix(std::vector<Bidegree> row_labels, std::vector<Bidegree> col_labels,
              std::vector<std::vector<BihomForm>> entries);

  /// Infers labels from the entry bidegrees (fixing the first label of each
  /// connected block to (0,0)). nullopt entries are zeros of unknown bidegree.
  static BihomMatrix infer(const std::vector<std::vector<std::optional<BihomForm>>>& entries);
  static BihomMatrix from_entries(const std::vector<std::vector<BihomForm>>& entries);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<Bidegree>& row_labels() const { return row_labels_; }
  const std::vector<Bidegree>& col_labels() const { return col_labels_; }
  Bidegree entry_bidegree(std::size_t k, std::size_t l) const {
    return row_labels_[k] - col_labels_[l];
  }
  const BihomForm& operator()(std::size_t k, std::size_t l) const { return entries_[k][l]; }
  void set(std::size_t k, std::size_t l, const BihomForm& f);

  BihomMatrix without_column(std::size_t l) const;
  bool is_zero() const;

  /// Row-major bracketed list: [[x, y], [z, w]].
  std::string str(bool annotate = false) const;

  friend bool operator==(const BihomMatrix&, const BihomMatrix&) = default;

 private:
  std::vector<Bidegree> row_labels_;
  std::vector<Bidegree> col_labels_;
  std::vector<std::vector<BihomForm>> entries_;
};

/// Determinant of a square matrix (Leibniz expansion).
BihomForm det(const BihomMatrix& m);
BihomForm det2(const BihomMatrix& m);
/// f11 f22 - f12 f21, rejecting entries whose diagonal products disagree in
/// bidegree.
BihomForm det2(const BihomForm& f11, const BihomForm& f12, const BihomForm& f21,
               const BihomForm& f22);

/// For a k x (k+1) matrix: (zeta_1, -zeta_2, zeta_3, ...), zeta_j being the
/// minor with column j deleted.
std::vector<BihomForm> maximal_minors(const BihomMatrix& m);

/// The signed minors as a (k+1) x 1 matrix O(K) -> sum O(col_l), where K is
/// the sum of the column labels minus the sum of the row labels.
BihomMatrix minor_column(const BihomMatrix& m);

/// Monic gcd of the nonzero inputs.
BihomForm gcd_forms(const std::vector<BihomForm>& forms);

BihomForm divide_exact(const BihomForm& f, const BihomForm& g);

BihomMatrix multiply(const BihomMatrix& a, const BihomMatrix& b);
bool compose_zero(const BihomMatrix& a, const BihomMatrix& b);

/// Kernel of a k x (k+1) morphism via its maximal minors.
struct KernelClassification {
  std::vector<BihomForm> minors;  // signed
  bool rank_deficient = false;    // every minor vanishes
  BihomForm gcd;                  // monic; meaningful unless rank_deficient
  Bidegree kernel;                // O(kernel) -> source, the twist (i, j)
  BihomMatrix inclusion;          // the column (zeta_l / g)
};

KernelClassification classify_kernel(const BihomMatrix& m);

/// `x^2 z - y^2 w`, optionally followed by `@(a,b)`; required for zero.
BihomForm parse_form(std::string_view text);
/// `[[x, y], [z, w]]`. Row and column labels, when given, are checked
/// against the entries; otherwise they are inferred.
BihomMatrix parse_matrix(std::string_view text,
                         std::optional<std::vector<Bidegree>> row_labels = std::nullopt,
                         std::optional<std::vector<Bidegree>> col_labels = std::nullopt);
/// `(0,-1), (-1,0), (-1,0)`; a label may carry a repeat count: `4*(-1,-1)`.
std::vector<Bidegree> parse_labels(std::string_view text);

}  // namespace qsc::bihom
