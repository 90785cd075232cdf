#include "qsc/sheafcalc.hpp"

#include <algorithm>

#include "cursor.hpp"
#include "qsc/error.hpp"

namespace qsc::sheafcalc {

const std::vector<std::string>& hilbert_variables() {
  static const std::vector<std::string> vars{"m", "n"};
  return vars;
}

// --- KClass ----------------------------------------------------------------

KClass::KClass(LineBundle bundle, long multiplicity) { add(bundle, multiplicity); }

long KClass::multiplicity(LineBundle bundle) const {
  const auto it = terms_.find(bundle);
  return it == terms_.end() ? 0 : it->second;
}

KClass& KClass::add(LineBundle bundle, long multiplicity) {
  if (multiplicity == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(bundle, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

KClass& KClass::operator+=(const KClass& other) {
  for (const auto& [b, k] : other.terms_) add(b, k);
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  for (const auto& [b, k] : other.terms_) add(b, -k);
  return *this;
}

KClass operator*(long k, const KClass& c) {
  KClass out;
  for (const auto& [b, m] : c.terms_) out.add(b, k * m);
  return out;
}

KClass KClass::twisted(Bidegree by) const {
  KClass out;
  for (const auto& [b, k] : terms_) out.add(b + by, k);
  return out;
}

std::string KClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [b, k] = *it;
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    first = false;
    const long mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += "O" + b.str(true);
  }
  return out;
}

KClass parse_kclass(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.at_end()) cur.fail("empty class");
  KClass out;
  bool first = true;
  while (!cur.at_end()) {
    long sign = 1;
    if (cur.consume('-')) {
      sign = -1;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    long count = 1;
    bool have_count = false;
    if (cur.at_digit()) {
      count = cur.small_natural();
      have_count = true;
      cur.consume('*');
    }
    if (!cur.consume('O')) {
      if (have_count && count == 0 && first && cur.at_end()) return out;
      cur.fail("expected 'O'");
    }
    Bidegree b{0, 0};
    if (cur.peek() == '(') {
      cur.expect('(');
      b.a = static_cast<int>(cur.signed_integer());
      cur.expect(',');
      b.b = static_cast<int>(cur.signed_integer());
      cur.expect(')');
    }
    out.add(b, sign * count);
    first = false;
  }
  return out;
}

// --- HilbertPoly -----------------------------------------------------------

HilbertPoly::HilbertPoly() : p_(hilbert_variables()) {}

HilbertPoly::HilbertPoly(Poly p) : p_(std::move(p)) {
  if (p_.variables() != hilbert_variables()) reject("Hilbert polynomials are polynomials in m, n");
}

HilbertPoly HilbertPoly::linear(const Rational& r, const Rational& s, const Rational& t) {
  const auto& v = hilbert_variables();
  return HilbertPoly(Poly::monomial(v, {1, 0}, r) + Poly::monomial(v, {0, 1}, s) +
                     Poly::constant(v, t));
}

Rational HilbertPoly::r() const { return p_.coefficient({1, 0}); }
Rational HilbertPoly::s() const { return p_.coefficient({0, 1}); }
Rational HilbertPoly::t() const { return p_.constant_term(); }

Rational HilbertPoly::at(long m, long n) const {
  return eval(p_, {{"m", Rational(m)}, {"n", Rational(n)}});
}

HilbertPoly& HilbertPoly::operator+=(const HilbertPoly& other) {
  p_ += other.p_;
  return *this;
}

HilbertPoly& HilbertPoly::operator-=(const HilbertPoly& other) {
  p_ -= other.p_;
  return *this;
}

HilbertPoly parse_hilbert(std::string_view text) {
  return HilbertPoly(parse_poly(text, hilbert_variables()));
}

// --- Euler characteristics and slopes --------------------------------------

HilbertPoly chi(LineBundle bundle) {
  const auto& v = hilbert_variables();
  const Poly m = Poly::variable(v, "m") + Poly::constant(v, Rational(bundle.a + 1));
  const Poly n = Poly::variable(v, "n") + Poly::constant(v, Rational(bundle.b + 1));
  return HilbertPoly(m * n);
}

HilbertPoly chi(const KClass& k) {
  HilbertPoly out;
  for (const auto& [b, mult] : k.terms()) out += Rational(mult) * chi(b);
  return out;
}

HilbertPoly structure_sheaf_poly(Bidegree sr) {
  const long s = sr.a;
  const long r = sr.b;
  if (s < 0 || r < 0 || (s == 0 && r == 0)) {
    reject("curve bidegree must be nonnegative and nonzero, got " + sr.str());
  }
  return HilbertPoly::linear(r, s, r + s - r * s);
}

namespace {

void require_linear(const HilbertPoly& p, const char* what) {
  if (!p.is_linear()) reject(std::string(what) + " needs a linear polynomial, got " + p.str());
}

Rational degree_sum(const HilbertPoly& p, const char* what) {
  require_linear(p, what);
  const Rational d = p.r() + p.s();
  if (d.is_zero()) reject(std::string(what) + " needs r + s != 0, got " + p.str());
  return d;
}

}  // namespace

Rational slope(const HilbertPoly& p) { return p.t() / degree_sum(p, "slope"); }

HilbertPoly twist(const HilbertPoly& p, Bidegree ij) {
  return HilbertPoly(shift(p.poly(), {{"m", ij.a}, {"n", ij.b}}));
}

HilbertPoly dual(const HilbertPoly& p) {
  require_linear(p, "dual");
  return HilbertPoly::linear(p.r(), p.s(), -p.t());
}

bool h0_vanishes(const HilbertPoly& p, Bidegree ij) {
  const Rational d = degree_sum(p, "h0_vanishes");
  return Rational(std::max(ij.a, ij.b)) < Rational(1) - (p.r() * p.s() + p.t()) / d;
}

bool h1_vanishes(const HilbertPoly& p, Bidegree ij) {
  const Rational d = degree_sum(p, "h1_vanishes");
  return Rational(std::min(ij.a, ij.b)) > Rational(-1) + (p.r() * p.s() - p.t()) / d;
}

Bidegree support_bidegree(const HilbertPoly& p) {
  require_linear(p, "support_bidegree");
  const Rational r = p.r();
  const Rational s = p.s();
  if (!r.is_integer() || !s.is_integer() || r.sign() < 0 || s.sign() < 0) {
    reject("support bidegree needs nonnegative integer coefficients, got " + p.str());
  }
  return {static_cast<int>(s.num().get_si()), static_cast<int>(r.num().get_si())};
}

// --- Beilinson tableau -----------------------------------------------------

namespace {

std::size_t twist_index(Bidegree twist) {
  const auto& t = CohomologyTable::twists;
  const auto it = std::find(t.begin(), t.end(), twist);
  if (it == t.end()) reject("the cohomology table has no twist " + twist.str());
  return static_cast<std::size_t>(it - t.begin());
}

}  // namespace

CohomologyTable::Cell& CohomologyTable::at(Bidegree twist) { return cells[twist_index(twist)]; }

const CohomologyTable::Cell& CohomologyTable::at(Bidegree twist) const {
  return cells[twist_index(twist)];
}

bool CohomologyTable::consistent_with(const HilbertPoly& p, std::string* why) const {
  for (std::size_t k = 0; k < twists.size(); ++k) {
    const Cell& c = cells[k];
    const Rational expected = twist(p, twists[k]).at(0, 0);
    if (c.h0 < 0 || c.h1 < 0 || Rational(c.h0 - c.h1) != expected) {
      if (why) {
        *why = "twist " + twists[k].str() + ": h0 - h1 = " + std::to_string(c.h0 - c.h1) +
               " but chi = " + expected.str();
      }
      return false;
    }
  }
  return true;
}

BeilinsonResult beilinson_identity(const CohomologyTable& table, const HilbertPoly& p) {
  std::string why;
  if (!table.consistent_with(p, &why)) {
    throw Error(ErrorKind::InvariantViolation, "cohomology table inconsistent with " + p.str() +
                                                   " (" + why + ")");
  }
  BeilinsonResult out;
  for (int j = 0; j <= 1; ++j) {
    const auto h = [&](Bidegree twist) {
      const auto& c = table.at(twist);
      return j == 0 ? c.h0 : c.h1;
    };
    out.cells[{0, j}] = KClass({0, 0}, h({0, 0}));
    out.cells[{-1, j}] = KClass({0, -1}, h({0, -1})) + KClass({-1, 0}, h({-1, 0}));
    out.cells[{-2, j}] = KClass({-1, -1}, h({-1, -1}));
  }
  HilbertPoly total;
  for (const auto& [ij, k] : out.cells) {
    const int sign = (ij.first + ij.second) % 2 == 0 ? 1 : -1;
    total += Rational(sign) * chi(k);
  }
  out.residual = p - total;
  return out;
}

}  // namespace qsc::sheafcalc
