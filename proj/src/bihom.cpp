#include "qsc/bihom.hpp"

#include <algorithm>
#include <numeric>

#include "qsc/error.hpp"

namespace qsc::bihom {

const std::vector<std::string>& form_variables() {
  static const std::vector<std::string> vars{"x", "y", "z", "w"};
  return vars;
}

const std::vector<std::string>& affine_variables() {
  static const std::vector<std::string> vars{"x", "z"};
  return vars;
}

BihomForm::BihomForm(Bidegree bidegree) : bidegree_(bidegree) {}

BihomForm::BihomForm(Bidegree bidegree, Coefficients coefficients) : bidegree_(bidegree) {
  for (auto& [ij, c] : coefficients) {
    if (c.is_zero()) continue;
    if (!bidegree.nonnegative() || ij.first > static_cast<unsigned>(bidegree.a) ||
        ij.second > static_cast<unsigned>(bidegree.b)) {
      reject("coefficient index outside the bidegree box " + bidegree.str());
    }
    coefficients_.emplace(ij, c);
  }
}

BihomForm BihomForm::monomial(Bidegree bidegree, unsigned i, unsigned j, const Rational& c) {
  return BihomForm(bidegree, {{{i, j}, c}});
}

BihomForm BihomForm::constant(const Rational& c) { return monomial({0, 0}, 0, 0, c); }
BihomForm BihomForm::x() { return monomial({1, 0}, 1, 0); }
BihomForm BihomForm::y() { return monomial({1, 0}, 0, 0); }
BihomForm BihomForm::z() { return monomial({0, 1}, 0, 1); }
BihomForm BihomForm::w() { return monomial({0, 1}, 0, 0); }

BihomForm BihomForm::from_poly(const Poly& p, std::optional<Bidegree> bidegree) {
  if (p.variables() != form_variables()) reject("forms are polynomials in x, y, z, w");
  if (!bidegree) {
    if (p.is_zero()) reject("the zero form needs an explicit bidegree");
    const auto& e = p.terms().begin()->first;
    bidegree = Bidegree{static_cast<int>(e[0] + e[1]), static_cast<int>(e[2] + e[3])};
  }
  Coefficients coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e[0] + e[1]) != bidegree->a ||
        static_cast<int>(e[2] + e[3]) != bidegree->b) {
      reject("polynomial is not bihomogeneous of bidegree " + bidegree->str());
    }
    coeffs.emplace(std::make_pair(e[0], e[2]), c);
  }
  return BihomForm(*bidegree, std::move(coeffs));
}

Poly BihomForm::to_poly() const {
  Poly::TermMap terms;
  for (const auto& [ij, c] : coefficients_) {
    const auto [i, j] = ij;
    terms.emplace(Exponents{i, static_cast<unsigned>(bidegree_.a) - i, j,
                            static_cast<unsigned>(bidegree_.b) - j},
                  c);
  }
  return Poly(form_variables(), std::move(terms));
}

Rational BihomForm::coefficient(unsigned i, unsigned j) const {
  const auto it = coefficients_.find({i, j});
  return it == coefficients_.end() ? Rational(0) : it->second;
}

BihomForm BihomForm::scaled(const Rational& c) const {
  BihomForm out(bidegree_);
  if (c.is_zero()) return out;
  for (const auto& [ij, v] : coefficients_) out.coefficients_.emplace(ij, v * c);
  return out;
}

BihomForm& BihomForm::operator+=(const BihomForm& other) {
  if (other.bidegree_ != bidegree_) {
    reject("adding forms of bidegrees " + bidegree_.str() + " and " + other.bidegree_.str());
  }
  for (const auto& [ij, c] : other.coefficients_) {
    auto [it, inserted] = coefficients_.try_emplace(ij, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coefficients_.erase(it);
    }
  }
  return *this;
}

BihomForm& BihomForm::operator-=(const BihomForm& other) { return *this += -other; }

BihomForm operator*(const BihomForm& f, const BihomForm& g) {
  BihomForm out(f.bidegree_ + g.bidegree_);
  for (const auto& [fij, fc] : f.coefficients_) {
    for (const auto& [gij, gc] : g.coefficients_) {
      const std::pair<unsigned, unsigned> ij{fij.first + gij.first, fij.second + gij.second};
      auto [it, inserted] = out.coefficients_.try_emplace(ij, fc * gc);
      if (!inserted) {
        it->second += fc * gc;
        if (it->second.is_zero()) out.coefficients_.erase(it);
      }
    }
  }
  return out;
}

std::string BihomForm::str(bool annotate, PrintStyle style) const {
  std::string s = to_poly().str(style);
  if (annotate) s += " @" + bidegree_.str(true);
  return s;
}

BihomForm form_mul(const BihomForm& f, const BihomForm& g) { return f * g; }

Poly dehomogenize(const BihomForm& f) {
  Poly::TermMap terms;
  for (const auto& [ij, c] : f.coefficients()) terms.emplace(Exponents{ij.first, ij.second}, c);
  return Poly(affine_variables(), std::move(terms));
}

BihomForm rehomogenize(const Poly& affine, Bidegree bidegree) {
  if (affine.variables() != affine_variables()) reject("affine forms are polynomials in x, z");
  BihomForm::Coefficients coeffs;
  for (const auto& [e, c] : affine.terms()) {
    if (static_cast<int>(e[0]) > bidegree.a || static_cast<int>(e[1]) > bidegree.b) {
      reject("affine degree exceeds the target bidegree " + bidegree.str());
    }
    coeffs.emplace(std::make_pair(e[0], e[1]), c);
  }
  return BihomForm(bidegree, std::move(coeffs));
}

std::pair<unsigned, unsigned> yw_multiplicity(const BihomForm& f) {
  if (f.is_zero()) reject("multiplicity of the zero form");
  unsigned max_i = 0;
  unsigned max_j = 0;
  for (const auto& [ij, c] : f.coefficients()) {
    max_i = std::max(max_i, ij.first);
    max_j = std::max(max_j, ij.second);
  }
  return {static_cast<unsigned>(f.bidegree().a) - max_i,
          static_cast<unsigned>(f.bidegree().b) - max_j};
}

BihomForm make_monic(const BihomForm& f) {
  if (f.is_zero()) return f;
  const auto lead = f.to_poly().leading_term().second;
  return f.scaled(Rational(1) / lead);
}

// ---------------------------------------------------------------------------

BihomMatrix::BihomMatrix(std::vector<Bidegree> row_labels, std::vector<Bidegree> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  entries_.resize(row_labels_.size());
  for (std::size_t k = 0; k < rows(); ++k) {
    for (std::size_t l = 0; l < cols(); ++l) entries_[k].emplace_back(entry_bidegree(k, l));
  }
}

BihomMatrix::BihomMatrix(std::vector<Bidegree> row_labels, std::vector<Bidegree> col_labels,
                         std::vector<std::vector<BihomForm>> entries)
    : BihomMatrix(std::move(row_labels), std::move(col_labels)) {
  if (entries.size() != rows()) reject("row count does not match the row labels");
  for (std::size_t k = 0; k < rows(); ++k) {
    if (entries[k].size() != cols()) reject("column count does not match the column labels");
    for (std::size_t l = 0; l < cols(); ++l) {
      const auto& f = entries[k][l];
      if (f.is_zero()) continue;
      set(k, l, f);
    }
  }
}

void BihomMatrix::set(std::size_t k, std::size_t l, const BihomForm& f) {
  if (k >= rows() || l >= cols()) reject("matrix index out of range");
  const Bidegree expected = entry_bidegree(k, l);
  if (f.is_zero()) {
    entries_[k][l] = BihomForm(expected);
    return;
  }
  if (f.bidegree() != expected) {
    throw Error(ErrorKind::IllFormedMorphism,
                "entry (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                    ") has bidegree " + f.bidegree().str() + " but the labels require " +
                    expected.str());
  }
  entries_[k][l] = f;
}

BihomMatrix BihomMatrix::infer(
    const std::vector<std::vector<std::optional<BihomForm>>>& entries) {
  const std::size_t nr = entries.size();
  if (nr == 0) reject("empty matrix");
  const std::size_t nc = entries[0].size();
  for (const auto& row : entries) {
    if (row.size() != nc) reject("ragged matrix rows");
  }

  // Nodes 0..nr-1 are rows, nr..nr+nc-1 columns; edge weight r_k - c_l.
  std::vector<std::optional<Bidegree>> label(nr + nc);
  for (std::size_t seed = 0; seed < nr + nc; ++seed) {
    if (label[seed]) continue;
    label[seed] = Bidegree{0, 0};
    std::vector<std::size_t> stack{seed};
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      const bool is_row = node < nr;
      const std::size_t count = is_row ? nc : nr;
      for (std::size_t other = 0; other < count; ++other) {
        const std::size_t k = is_row ? node : other;
        const std::size_t l = is_row ? other : node - nr;
        const auto& e = entries[k][l];
        if (!e) continue;
        const std::size_t peer = is_row ? nr + l : k;
        const Bidegree implied = is_row ? *label[node] - e->bidegree() : *label[node] + e->bidegree();
        if (!label[peer]) {
          label[peer] = implied;
          stack.push_back(peer);
        } else if (*label[peer] != implied) {
          throw Error(ErrorKind::IllFormedMorphism,
                      "entry bidegrees are inconsistent with any choice of row and column "
                      "labels (at entry (" + std::to_string(k + 1) + "," +
                          std::to_string(l + 1) + "))");
        }
      }
    }
  }

  std::vector<Bidegree> rl(nr);
  std::vector<Bidegree> cl(nc);
  for (std::size_t k = 0; k < nr; ++k) rl[k] = *label[k];
  for (std::size_t l = 0; l < nc; ++l) cl[l] = *label[nr + l];
  BihomMatrix m(rl, cl);
  for (std::size_t k = 0; k < nr; ++k) {
    for (std::size_t l = 0; l < nc; ++l) {
      if (entries[k][l]) m.set(k, l, *entries[k][l]);
    }
  }
  return m;
}

BihomMatrix BihomMatrix::from_entries(const std::vector<std::vector<BihomForm>>& entries) {
  std::vector<std::vector<std::optional<BihomForm>>> grid;
  grid.reserve(entries.size());
  for (const auto& row : entries) grid.emplace_back(row.begin(), row.end());
  return infer(grid);
}

BihomMatrix BihomMatrix::without_column(std::size_t l) const {
  if (l >= cols()) reject("column index out of range");
  auto cl = col_labels_;
  cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(l));
  BihomMatrix out(row_labels_, cl);
  for (std::size_t k = 0; k < rows(); ++k) {
    for (std::size_t c = 0, d = 0; c < cols(); ++c) {
      if (c == l) continue;
      out.entries_[k][d++] = entries_[k][c];
    }
  }
  return out;
}

bool BihomMatrix::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& f : row) {
      if (!f.is_zero()) return false;
    }
  }
  return true;
}

std::string BihomMatrix::str(bool annotate) const {
  std::string s = "[";
  for (std::size_t k = 0; k < rows(); ++k) {
    s += k ? ", [" : "[";
    for (std::size_t l = 0; l < cols(); ++l) {
      if (l) s += ", ";
      s += entries_[k][l].str(annotate);
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

namespace {

Bidegree sum(const std::vector<Bidegree>& labels) {
  return std::accumulate(labels.begin(), labels.end(), Bidegree{0, 0});
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

BihomForm det(const BihomMatrix& m) {
  if (m.rows() != m.cols()) reject("determinant of a non-square matrix");
  if (m.rows() == 0) reject("determinant of an empty matrix");
  const Bidegree bidegree = sum(m.row_labels()) - sum(m.col_labels());
  BihomForm total(bidegree);
  std::vector<std::size_t> perm(m.cols());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    BihomForm product = BihomForm::constant(Rational(permutation_sign(perm)));
    bool zero = false;
    for (std::size_t k = 0; k < m.rows() && !zero; ++k) {
      const auto& f = m(k, perm[k]);
      if (f.is_zero()) zero = true;
      else product = product * f;
    }
    if (!zero) total += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BihomForm det2(const BihomMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) reject("det2 expects a 2x2 matrix");
  return det(m);
}

BihomForm det2(const BihomForm& f11, const BihomForm& f12, const BihomForm& f21,
               const BihomForm& f22) {
  const Bidegree diagonal = f11.bidegree() + f22.bidegree();
  const Bidegree anti = f12.bidegree() + f21.bidegree();
  if (diagonal != anti) {
    throw Error(ErrorKind::IllFormedMorphism,
                "diagonal products have bidegrees " + diagonal.str() + " and " + anti.str());
  }
  return f11 * f22 - f12 * f21;
}

std::vector<BihomForm> maximal_minors(const BihomMatrix& m) {
  if (m.rows() == 0 || m.cols() != m.rows() + 1) {
    reject("maximal minors expect a k x (k+1) matrix, got " + std::to_string(m.rows()) + "x" +
           std::to_string(m.cols()));
  }
  std::vector<BihomForm> minors;
  minors.reserve(m.cols());
  for (std::size_t l = 0; l < m.cols(); ++l) {
    BihomForm zeta = det(m.without_column(l));
    minors.push_back(l % 2 == 0 ? zeta : -zeta);
  }
  return minors;
}

BihomMatrix minor_column(const BihomMatrix& m) {
  const auto minors = maximal_minors(m);
  const Bidegree kernel = sum(m.col_labels()) - sum(m.row_labels());
  BihomMatrix column(m.col_labels(), {kernel});
  for (std::size_t l = 0; l < minors.size(); ++l) column.set(l, 0, minors[l]);
  return column;
}

BihomForm divide_exact(const BihomForm& f, const BihomForm& g) {
  if (g.is_zero()) reject("division by the zero form");
  const Bidegree q = f.bidegree() - g.bidegree();
  if (f.is_zero()) return BihomForm(q);
  const auto quotient = qsc::divide_exact(f.to_poly(), g.to_poly());
  if (!quotient || !q.nonnegative()) {
    throw Error(ErrorKind::Divisibility, g.str() + " does not divide " + f.str());
  }
  return BihomForm::from_poly(*quotient, q);
}

BihomMatrix multiply(const BihomMatrix& a, const BihomMatrix& b) {
  if (a.cols() != b.rows()) {
    reject("cannot compose a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
           " matrix with a " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
           " matrix");
  }
  if (a.col_labels() != b.row_labels()) {
    throw Error(ErrorKind::IllFormedMorphism,
                "source bundles of the left factor differ from the target bundles of the right");
  }
  BihomMatrix out(a.row_labels(), b.col_labels());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      BihomForm acc(out.entry_bidegree(k, l));
      for (std::size_t t = 0; t < a.cols(); ++t) {
        if (a(k, t).is_zero() || b(t, l).is_zero()) continue;
        acc += a(k, t) * b(t, l);
      }
      out.set(k, l, acc);
    }
  }
  return out;
}

bool compose_zero(const BihomMatrix& a, const BihomMatrix& b) { return multiply(a, b).is_zero(); }

KernelClassification classify_kernel(const BihomMatrix& m) {
  KernelClassification out;
  out.minors = maximal_minors(m);
  const Bidegree base_kernel = sum(m.col_labels()) - sum(m.row_labels());
  out.rank_deficient = std::all_of(out.minors.begin(), out.minors.end(),
                                   [](const BihomForm& f) { return f.is_zero(); });
  if (out.rank_deficient) {
    out.kernel = base_kernel;
    return out;
  }
  out.gcd = gcd_forms(out.minors);
  out.kernel = base_kernel + out.gcd.bidegree();
  out.inclusion = BihomMatrix(m.col_labels(), {out.kernel});
  for (std::size_t l = 0; l < out.minors.size(); ++l) {
    out.inclusion.set(l, 0, divide_exact(out.minors[l], out.gcd));
  }
  return out;
}

}  // namespace qsc::bihom
