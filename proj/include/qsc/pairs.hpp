#pragma once

#include <vector>

#include "qsc/rational.hpp"
#include "qsc/sheafcalc.hpp"
#include "qsc/topology.hpp"

/// alpha-slopes of coherent pairs (Gamma, F) and the walls where a sub-pair
/// attains the slope of the whole.
namespace qsc::pairs {

using sheafcalc::HilbertPoly;

struct PairClass {
  long gamma_dim = 0;
  HilbertPoly poly;
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

struct Wall {
  Rational alpha;
  PairClass destabilizer;  // Gamma-dimension 1 side
  PairClass complement;    // Gamma-dimension 0 side
  friend bool operator==(const Wall&, const Wall&) = default;
};

/// (gamma_dim * alpha + t) / (r + s).
Rational pair_slope(const PairClass& pc, const Rational& alpha);

/// Walls of pairs (1, P): sub-pairs (1, r'm + s'n + t') with
/// 0 <= r' <= r, 0 <= s' <= s, (r', s') proper and nonzero and
/// t' >= r' + s' - r's', solved for a positive alpha. Sorted by alpha, then
/// by destabilizer.
std::vector<Wall> find_walls(const HilbertPoly& p);

struct WallCrossingData {
  Rational wall;
  topology::PoincarePoly base_poincare;
  long infty_fiber = 0;  // projectivized Ext^1 on the alpha = infinity side
  long zero_fiber = 0;   // on the alpha = 0+ side
};

/// Flip data at the wall of 3m + 2n + 1; other polynomials are Unsupported.
WallCrossingData wall_crossing_data(const HilbertPoly& p);

}  // namespace qsc::pairs
