#include "qsc/stability.hpp"

#include <algorithm>

#include "qsc/error.hpp"

namespace qsc::stability {

using sheafcalc::chi;
using sheafcalc::slope;
using sheafcalc::structure_sheaf_poly;
using sheafcalc::twist;

const char* to_string(Verdict v) { return v == Verdict::Allowed ? "allowed" : "destabilizes"; }

const char* to_string(StructureVerdict v) {
  switch (v) {
    case StructureVerdict::Stable: return "stable";
    case StructureVerdict::Semistable: return "semistable";
    case StructureVerdict::Unstable: return "unstable";
  }
  return "?";
}

std::vector<Bidegree> sub_bidegrees(Bidegree ambient, bool include_ambient) {
  std::vector<Bidegree> out;
  for (int s = 0; s <= ambient.a; ++s) {
    for (int r = 0; r <= ambient.b; ++r) {
      const Bidegree d{s, r};
      if (d.is_zero() || (!include_ambient && d == ambient)) continue;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](Bidegree p, Bidegree q) {
    if (p.a + p.b != q.a + q.b) return p.a + p.b > q.a + q.b;
    return p.a > q.a;
  });
  return out;
}

Verdict compare(const Rational& value, const Rational& bound, TieMode mode) {
  const bool ok = mode == TieMode::Semistable ? value <= bound : value < bound;
  return ok ? Verdict::Allowed : Verdict::Destabilizes;
}

namespace {

const Bidegree kAmbient{2, 3};
const Rational kSlopeF(1, 5);

void finish_row(TableRow& row, const Rational& bound, TieMode mode) {
  row.verdicts.clear();
  for (const auto& p : row.slopes) row.verdicts.push_back(compare(p, bound, mode));
  row.verdict = std::any_of(row.verdicts.begin(), row.verdicts.end(),
                            [](Verdict v) { return v == Verdict::Allowed; })
                    ? Verdict::Allowed
                    : Verdict::Destabilizes;
}

}  // namespace

Table table1(TieMode mode) {
  Table t;
  t.number = 1;
  t.title = "Possibilities for C.";
  t.headers = {"deg(C)", "P_{O_C}", "p(O_C(1, 0))", "p(O_C(0, 1))"};
  // O_C(-i,-j) sits inside F, so column O_C(1,0) is the case (i, j) = (-1, 0).
  t.column_cases = {Bidegree{-1, 0}, Bidegree{0, -1}};
  t.bound = kSlopeF;
  t.mode = mode;
  for (const Bidegree c : sub_bidegrees(kAmbient, true)) {
    TableRow row;
    row.label = c;
    const HilbertPoly p = structure_sheaf_poly(c);
    row.polys = {p};
    row.slopes = {slope(twist(p, {1, 0})), slope(twist(p, {0, 1}))};
    finish_row(row, t.bound, mode);
    t.rows.push_back(std::move(row));
  }
  return t;
}

HilbertPoly ideal_poly(Bidegree ambient, Bidegree sub, long colength) {
  if (!sub.fits_in(ambient) || sub == ambient) {
    reject("sub-bidegree " + sub.str() + " is not proper in " + ambient.str());
  }
  if (colength < 0) reject("negative colength");
  HilbertPoly p = structure_sheaf_poly(ambient);
  if (!sub.is_zero()) p -= structure_sheaf_poly(sub);
  return p - HilbertPoly::linear(0, 0, colength);
}

Table table2(TieMode mode) {
  Table t;
  t.number = 2;
  t.title = "Possibilities for C'.";
  t.headers = {"deg(C')", "P_{O_C'}", "P_{I'}", "p(I'(0, 1))"};
  t.column_cases = {std::nullopt};
  t.bound = slope(twist(structure_sheaf_poly(kAmbient), {0, 1}));
  t.mode = mode;
  for (const Bidegree c : sub_bidegrees(kAmbient, false)) {
    TableRow row;
    row.label = c;
    const HilbertPoly ideal = ideal_poly(kAmbient, c, 0);
    row.polys = {structure_sheaf_poly(c), ideal};
    row.slopes = {slope(twist(ideal, {0, 1}))};
    finish_row(row, t.bound, mode);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table3(TieMode mode) {
  Table t;
  t.number = 3;
  t.title = "Kernel of phi_1.";
  t.headers = {"deg(g)", "(i, j)", "P_{Coker(phi_5)}"};
  t.column_cases = {std::nullopt};
  t.bound = kSlopeF;
  t.mode = mode;
  // Without a common factor the kernel is O(-2,-3); a factor g of bidegree
  // (g1, g2) enlarges it to O(g1 - 2, g2 - 3).
  const Bidegree base_kernel{-2, -3};
  for (const Bidegree g : {Bidegree{1, 0}, Bidegree{0, 1}, Bidegree{0, 2}, Bidegree{1, 1}}) {
    TableRow row;
    row.label = g;
    row.twist = base_kernel + g;
    const HilbertPoly coker =
        chi(sheafcalc::KClass({0, 0})) - chi(sheafcalc::KClass(*row.twist));
    row.polys = {coker};
    row.slopes = {slope(coker)};
    finish_row(row, t.bound, mode);
    t.rows.push_back(std::move(row));
  }
  return t;
}

StructureVerdict structure_semistable(Bidegree sr) {
  const HilbertPoly whole = structure_sheaf_poly(sr);
  const Rational p = slope(whole);
  bool strict = true;
  for (const Bidegree sub : sub_bidegrees(sr, false)) {
    const Rational q = slope(ideal_poly(sr, sub, 0));
    if (q > p) return StructureVerdict::Unstable;
    if (q == p) strict = false;
  }
  return strict ? StructureVerdict::Stable : StructureVerdict::Semistable;
}

bool closed_form_inequality(Bidegree ambient, Bidegree sub) {
  const long s = ambient.a;
  const long r = ambient.b;
  const long s1 = sub.a;
  const long r1 = sub.b;
  return 0 <= r * r1 * (s - s1) + s * s1 * (r - r1);
}

bool inequality_equivalence_check(int range) {
  if (range < 1) reject("range must be at least 1");
  for (const Bidegree ambient : sub_bidegrees({range, range}, true)) {
    const Rational p = slope(structure_sheaf_poly(ambient));
    for (const Bidegree sub : sub_bidegrees(ambient, false)) {
      const bool by_slope = slope(ideal_poly(ambient, sub, 0)) <= p;
      if (by_slope != closed_form_inequality(ambient, sub)) return false;
    }
  }
  return true;
}

bool empty_moduli(long r, long t) {
  if (r < 2 || t <= 0 || t >= r) {
    reject("empty_moduli needs r >= 2 and 0 < t < r, got r = " + std::to_string(r) +
           ", t = " + std::to_string(t));
  }
  const HilbertPoly p = HilbertPoly::linear(r, 0, t);
  return sheafcalc::h0_vanishes(p, {0, 0}) && sheafcalc::h1_vanishes(p, {0, 0});
}

}  // namespace qsc::stability
