#include "qsc/pairs.hpp"

#include <algorithm>

#include "qsc/error.hpp"

namespace qsc::pairs {

Rational pair_slope(const PairClass& pc, const Rational& alpha) {
  const Rational d = pc.poly.r() + pc.poly.s();
  if (!pc.poly.is_linear() || d.is_zero()) {
    reject("pair slope needs a linear polynomial with r + s != 0, got " + pc.poly.str());
  }
  return (Rational(pc.gamma_dim) * alpha + pc.poly.t()) / d;
}

namespace {

long as_long(const Rational& v, const char* what, const HilbertPoly& p) {
  if (!v.is_integer()) reject(std::string(what) + " of " + p.str() + " is not an integer");
  return v.num().get_si();
}

// Solves p_alpha(1, sub) = p_alpha(1, whole) for alpha.
std::optional<Rational> wall_alpha(long d, long t, long d1, long t1) {
  if (d1 == d) {
    if (t1 == t) {
      throw Error(ErrorKind::DegenerateWall,
                  "sub-pair with the same degree and Euler characteristic: every alpha is a wall");
    }
    return std::nullopt;
  }
  return Rational(t * d1 - t1 * d, d - d1);
}

}  // namespace

std::vector<Wall> find_walls(const HilbertPoly& p) {
  if (!p.is_linear()) reject("find_walls needs a linear polynomial, got " + p.str());
  const long r = as_long(p.r(), "coefficient of m", p);
  const long s = as_long(p.s(), "coefficient of n", p);
  const long t = as_long(p.t(), "constant term", p);
  if (r < 0 || s < 0 || r + s == 0) {
    reject("find_walls needs nonnegative r, s with r + s > 0, got " + p.str());
  }
  const long d = r + s;

  std::vector<Wall> walls;
  for (long r1 = 0; r1 <= r; ++r1) {
    for (long s1 = 0; s1 <= s; ++s1) {
      if ((r1 == 0 && s1 == 0) || (r1 == r && s1 == s)) continue;
      const long d1 = r1 + s1;
      const long t_min = r1 + s1 - r1 * s1;
      // alpha > 0 needs t1 * d < t * d1; beyond this bound alpha <= 0.
      const long t_max = Rational(t * d1, d).ceil().get_si() + 1;
      for (long t1 = t_min; t1 <= t_max; ++t1) {
        const auto alpha = wall_alpha(d, t, d1, t1);
        if (!alpha || alpha->sign() <= 0) continue;
        const PairClass sub{1, HilbertPoly::linear(r1, s1, t1)};
        const PairClass rest{0, HilbertPoly::linear(r - r1, s - s1, t - t1)};
        walls.push_back({*alpha, sub, rest});
      }
      if (t_min <= t_max) {
        const auto beyond = wall_alpha(d, t, d1, t_max);
        if (beyond && beyond->sign() > 0) {
          throw Error(ErrorKind::InvariantViolation,
                      "wall search bound too small for " + p.str());
        }
      }
    }
  }

  std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.destabilizer.poly.str() < b.destabilizer.poly.str();
  });
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

WallCrossingData wall_crossing_data(const HilbertPoly& p) {
  if (p != sheafcalc::parse_hilbert("3m + 2n + 1")) {
    throw Error(ErrorKind::Unsupported,
                "wall-crossing data is only recorded for 3m + 2n + 1, got " + p.str());
  }
  const auto walls = find_walls(p);
  if (walls.size() != 1) {
    throw Error(ErrorKind::InvariantViolation, "expected a single wall for " + p.str());
  }
  const Wall& wall = walls.front();

  // Pairs on 2m + 2n with a section form P(H^0(O(2,2))) = P^8, lines of
  // bidegree (0,1) form P^1. The Ext^1 groups across the wall have
  // dimensions 3 and 2.
  WallCrossingData out;
  out.wall = wall.alpha;
  out.base_poincare = topology::p_product(topology::p_projective(8), topology::p_projective(1));
  const long ext_infty = 3;
  const long ext_zero = 2;
  out.infty_fiber = ext_infty - 1;
  out.zero_fiber = ext_zero - 1;

  // The two projective bundles over the base have complementary fibers in
  // the 13-dimensional moduli of pairs.
  const long total = topology::moduli_dimension(3, 2);
  if (out.base_poincare.degree() + out.infty_fiber + out.zero_fiber + 1 != total) {
    throw Error(ErrorKind::InvariantViolation, "flip dimensions do not add up");
  }
  return out;
}

}  // namespace qsc::pairs
