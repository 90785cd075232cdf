#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

/// Poincare polynomials in xi = t^2 (xi carries H^2) for spaces without odd
/// cohomology, and the operations used to assemble the Betti numbers of
/// M(3m+2n+1) from simpler pieces.
namespace qsc::topology {

/// {"xi"}: the variable of signed intermediate polynomials.
const std::vector<std::string>& xi_variables();

class PoincarePoly {
 public:
  /// The zero polynomial (empty space).
  PoincarePoly() = default;
  /// Coefficient k is dim H^{2k}. Rejects negative entries; trims zeros.
  explicit PoincarePoly(std::vector<BigInt> coeffs);
  PoincarePoly(std::initializer_list<long> coeffs);

  /// From a polynomial in xi with nonnegative integer coefficients;
  /// anything else is an InvariantViolation naming `context`.
  static PoincarePoly from_poly(const Poly& p, const std::string& context = "result");
  Poly to_poly() const;

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const;

  /// Descending powers: "xi^2 + 2xi + 1".
  std::string str() const { return to_poly().str(); }

  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

PoincarePoly p_projective(long n);
PoincarePoly p_product(const PoincarePoly& a, const PoincarePoly& b);
/// P(base) P(P^fiber_dim).
PoincarePoly p_bundle(const PoincarePoly& base, long fiber_dim);
/// P(X) + (P(P^(codim-1)) - 1) P(Z).
PoincarePoly p_blowup(const PoincarePoly& total, const PoincarePoly& center, long codim);
/// Inverse of p_blowup: P(X) - (P(P^(codim-1)) - 1) P(Z).
PoincarePoly p_blowdown(const PoincarePoly& total, const PoincarePoly& center, long codim);
/// total_inf + (P(P^new_fiber) - P(P^old_fiber)) base.
PoincarePoly p_flip(const PoincarePoly& total_inf, const PoincarePoly& base, long old_fiber,
                    long new_fiber);

using Betti = std::array<long, 5>;

/// Coefficient of x^n in the Goettsche product for a surface with Betti
/// numbers b0..b4, as a polynomial in t (full Betti numbers of Hilb^n).
/// Factors with k <= truncation (default n) are used.
Poly gottsche_t(const Betti& betti, long n, std::optional<long> truncation = std::nullopt);
/// The same in xi; rejected when an odd power of t survives.
PoincarePoly gottsche(const Betti& betti, long n, std::optional<long> truncation = std::nullopt);

BigInt euler(const PoincarePoly& p);
/// Coefficient k equals coefficient dim - k for all k (and degree <= dim).
bool is_palindromic(const PoincarePoly& p, long dim);

/// 2 r s + 1.
long moduli_dimension(long r, long s);

struct Stratum {
  std::string name;
  std::string description;
  long codim = 0;
  long dim = 0;
  /// Absent for the open stratum, which is not compact.
  std::optional<PoincarePoly> poincare;
  /// K-class of the defining resolution, in the KClass syntax, when the
  /// stratum is described by one.
  std::optional<std::string> resolution;
};

/// The strata M_0..M_3 of M(3m+2n+1), followed by the dual strata of
/// M(3m+2n-1), which share their numerics.
std::vector<Stratum> stratum_ledger();

}  // namespace qsc::topology
