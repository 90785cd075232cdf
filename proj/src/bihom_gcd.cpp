// gcd of bihomogeneous forms through the affine chart y = w = 1.
//
// A nonzero form f of bidegree (a, b) factors as y^e w^d * hom(f|_{y=w=1}),
// with e = a - deg_x and d = b - deg_z of the dehomogenized polynomial, so
// the gcd is hom(gcd of the affine parts) times y^min(e) w^min(d). The
// affine gcd is computed in Q[z][x] with a primitive remainder sequence.

#include <algorithm>
#include <vector>

#include "qsc/bihom.hpp"
#include "qsc/error.hpp"

namespace qsc::bihom {
namespace {

// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;
// Polynomial in x with coefficients in Q[z], index = x-degree.
using ZXPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(ZXPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

long deg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly scale(const UPoly& a, const Rational& c) {
  UPoly out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(v * c);
  return out;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) reject("univariate division by zero");
  UPoly q;
  if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && deg(a) >= deg(b)) {
    const auto shift = static_cast<std::size_t>(deg(a) - deg(b));
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly monic(const UPoly& a) { return a.empty() ? a : scale(a, Rational(1) / a.back()); }

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly content(const ZXPoly& p) {
  UPoly c;
  for (const auto& coeff : p) {
    c = gcd(c, coeff);
    if (c.size() == 1) break;
  }
  return c;
}

ZXPoly divide_content(const ZXPoly& p, const UPoly& c) {
  ZXPoly out;
  out.reserve(p.size());
  for (const auto& coeff : p) {
    auto [q, r] = divmod(coeff, c);
    if (!r.empty()) throw Error(ErrorKind::InvariantViolation, "content does not divide");
    out.push_back(std::move(q));
  }
  return out;
}

ZXPoly primitive_part(const ZXPoly& p) {
  if (p.empty()) return p;
  return divide_content(p, content(p));
}

// lc(b)^k * a = q * b + r with deg_x r < deg_x b.
ZXPoly pseudo_remainder(ZXPoly a, const ZXPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const UPoly la = a.back();
    for (auto& coeff : a) coeff = mul(coeff, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
  }
  return a;
}

ZXPoly zx_gcd(const ZXPoly& f, const ZXPoly& g) {
  const UPoly c = gcd(content(f), content(g));
  ZXPoly a = primitive_part(f);
  ZXPoly b = primitive_part(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZXPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  ZXPoly out = primitive_part(a);
  for (auto& coeff : out) coeff = mul(coeff, c);
  return out;
}

ZXPoly to_zx(const BihomForm& f) {
  ZXPoly out;
  for (const auto& [ij, c] : f.coefficients()) {
    const auto [i, j] = ij;
    if (out.size() <= i) out.resize(i + 1);
    if (out[i].size() <= j) out[i].resize(j + 1, Rational(0));
    out[i][j] = c;
  }
  for (auto& coeff : out) trim(coeff);
  trim(out);
  return out;
}

BihomForm::Coefficients from_zx(const ZXPoly& p) {
  BihomForm::Coefficients out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (!p[i][j].is_zero()) {
        out.emplace(std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(j)), p[i][j]);
      }
    }
  }
  return out;
}

unsigned z_degree(const ZXPoly& p) {
  std::size_t d = 0;
  for (const auto& coeff : p) d = std::max(d, coeff.size());
  return static_cast<unsigned>(d - 1);
}

}  // namespace

BihomForm gcd_forms(const std::vector<BihomForm>& forms) {
  ZXPoly acc;
  bool any = false;
  unsigned min_y = 0;
  unsigned min_w = 0;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const auto [ey, ew] = yw_multiplicity(f);
    if (!any) {
      acc = to_zx(f);
      min_y = ey;
      min_w = ew;
      any = true;
      continue;
    }
    acc = zx_gcd(acc, to_zx(f));
    min_y = std::min(min_y, ey);
    min_w = std::min(min_w, ew);
  }
  if (!any) throw Error(ErrorKind::UndefinedGcd, "gcd of forms that are all zero");

  const Bidegree bidegree{static_cast<int>(acc.size() - 1 + min_y),
                          static_cast<int>(z_degree(acc) + min_w)};
  return make_monic(BihomForm(bidegree, from_zx(acc)));
}

}  // namespace qsc::bihom
