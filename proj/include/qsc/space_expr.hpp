#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "qsc/poly.hpp"
#include "qsc/topology.hpp"

/// A small expression language for spaces built from projective spaces by
/// products, projective bundles, blow-ups, blow-downs, flips and Hilbert
/// schemes of points, evaluated to Poincare polynomials.
///
///   expr    := product (('+' | '-') product)*
///   product := atom ('*' atom)*
///   atom    := 'P' nat | 'Hilb(' nat ',' betti ')' | 'bundle(' expr ',' nat ')'
///            | 'blowup(' expr ',' expr ',' nat ')' | 'blowdown(' expr ',' expr ',' nat ')'
///            | 'flip(' expr ',' expr ',' nat ',' nat ')' | literal | '(' expr ')'
///   betti   := '(' int ',' int ',' int ',' int ',' int ')'   (or [...])
///   literal := nat | [nat] 'xi' ['^' nat]
///
/// '*' binds tighter than '+' and '-'. Sums and differences are formal:
/// intermediate values may have negative coefficients, the final value may
/// not.
namespace qsc::space {

struct Node;
using Expr = std::shared_ptr<const Node>;

struct ProjectiveSpace { long n; };
struct Product { Expr left, right; };
struct Sum { Expr left, right; };
struct Difference { Expr left, right; };
struct Bundle { Expr base; long fiber_dim; };
struct Blowup { Expr total, center; long codim; };
struct Blowdown { Expr total, center; long codim; };
struct Flip { Expr total, base; long old_fiber, new_fiber; };
struct HilbSurface { topology::Betti betti; long n; };
/// A polynomial in xi written directly (`1`, `xi`, `3xi^2`).
struct Literal { Poly value; };

struct Node {
  std::variant<ProjectiveSpace, Product, Sum, Difference, Bundle, Blowup, Blowdown, Flip,
               HilbSurface, Literal>
      node;
};

Expr projective(long n);
Expr product(Expr a, Expr b);
Expr sum(Expr a, Expr b);
Expr difference(Expr a, Expr b);
Expr bundle(Expr base, long fiber_dim);
Expr blowup(Expr total, Expr center, long codim);
Expr blowdown(Expr total, Expr center, long codim);
Expr flip(Expr total, Expr base, long old_fiber, long new_fiber);
Expr hilb(const topology::Betti& betti, long n);
Expr literal(Poly value);

/// The expression M is assembled from: the P^9-bundle over Hilb^2 of
/// P^1 x P^1, flipped over P^8 x P^1 (fibers P^2 -> P^1), blown down along
/// P^11 (codimension 2).
Expr moduli_pipeline();

Expr parse(std::string_view text);
/// Canonical text; parse(to_string(e)) evaluates to the same value.
std::string to_string(const Expr& e);

struct Value {
  topology::PoincarePoly poincare;
  long dim = 0;
};

/// Evaluates e, checking the dimension bookkeeping of every blow-up,
/// blow-down and flip. InvariantViolation messages carry the path of the
/// offending node, e.g. "blowdown/total/flip".
Value evaluate_space(const Expr& e);

}  // namespace qsc::space
