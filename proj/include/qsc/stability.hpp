#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsc/bidegree.hpp"
#include "qsc/rational.hpp"
#include "qsc/sheafcalc.hpp"

/// The slope case analyses behind the semistability arguments for
/// M(3m+2n+1): candidate curves, ideal-sheaf quotients, kernel bundles.
namespace qsc::stability {

using sheafcalc::HilbertPoly;

enum class Verdict { Destabilizes, Allowed };

/// Semistable: a slope equal to the bound is allowed. Stable: it is not.
enum class TieMode { Semistable, Stable };

const char* to_string(Verdict v);

struct TableRow {
  Bidegree label;                 // deg(C), deg(C') or deg(g)
  std::optional<Bidegree> twist;  // Table 3: the kernel bundle O(i, j)
  std::vector<HilbertPoly> polys;
  std::vector<Rational> slopes;
  std::vector<Verdict> verdicts;  // one per slope column
  Verdict verdict;                // Allowed iff some slope column is
};

struct Table {
  int number = 0;
  std::string title;
  std::vector<std::string> headers;
  /// For each slope column, the twist (i, j) it stands for (Table 1) or
  /// absent.
  std::vector<std::optional<Bidegree>> column_cases;
  Rational bound;  // the slope of F, or of O_C(0,1)
  TieMode mode = TieMode::Semistable;
  std::vector<TableRow> rows;
};

/// Nonzero bidegrees (s', r') <= ambient, ordered by s'+r' then s'
/// descending.
std::vector<Bidegree> sub_bidegrees(Bidegree ambient, bool include_ambient);

Verdict compare(const Rational& slope, const Rational& bound, TieMode mode);

/// Curves C of bidegree <= (2, 3) with O_C -> F(i, j); slopes of O_C(1,0)
/// and O_C(0,1) against p(F) = 1/5.
Table table1(TieMode mode = TieMode::Semistable);
/// Proper curves C' inside C of bidegree (2, 3): P_{I'} and p(I'(0,1))
/// against p(O_C(0,1)) = 1/5.
Table table2(TieMode mode = TieMode::Stable);
/// Kernel bundle O(g1 - 2, g2 - 3) of phi_1 for each gcd bidegree and the
/// Hilbert polynomial of Coker(phi_5) = O / O(i, j). The verdict is the
/// slope test alone.
Table table3(TieMode mode = TieMode::Semistable);

/// P_{O_C} - P_{O_C'} - t for C' of bidegree sub inside C of bidegree ambient.
HilbertPoly ideal_poly(Bidegree ambient, Bidegree sub, long colength);

enum class StructureVerdict { Stable, Semistable, Unstable };
const char* to_string(StructureVerdict v);

/// Semistability of O_C by enumerating proper sub-bidegrees at colength 0.
StructureVerdict structure_semistable(Bidegree sr);

/// 0 <= r r'(s - s') + s s'(r - r'), the closed form of p(I') <= p(O_C).
bool closed_form_inequality(Bidegree ambient, Bidegree sub);

/// Brute-force slope comparison versus the closed form over all ambient
/// bidegrees with entries <= range and every proper nonzero sub-bidegree.
bool inequality_equivalence_check(int range);

/// Whether the vanishing criteria force H^0(F) = H^1(F) = 0 for
/// P = r m + t, which contradicts chi = t != 0.
bool empty_moduli(long r, long t);

}  // namespace qsc::stability
