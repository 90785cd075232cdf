#include "qsc/topology.hpp"

#include "qsc/error.hpp"

namespace qsc::topology {

const std::vector<std::string>& xi_variables() {
  static const std::vector<std::string> vars{"xi"};
  return vars;
}

PoincarePoly::PoincarePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) reject("Poincare polynomials have nonnegative coefficients");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePoly::PoincarePoly(std::initializer_list<long> coeffs)
    : PoincarePoly(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

PoincarePoly PoincarePoly::from_poly(const Poly& p, const std::string& context) {
  if (p.variables() != xi_variables()) reject("Poincare polynomials are polynomials in xi");
  const long d = p.total_degree();
  std::vector<BigInt> coeffs(d < 0 ? 0 : static_cast<std::size_t>(d + 1), BigInt(0));
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integer() || c.sign() < 0) {
      throw Error(ErrorKind::InvariantViolation,
                  context + ": coefficient " + c.str() + " of xi^" + std::to_string(e[0]) +
                      " is not a nonnegative integer (" + p.str() + ")");
    }
    coeffs[e[0]] = c.num();
  }
  return PoincarePoly(std::move(coeffs));
}

Poly PoincarePoly::to_poly() const {
  Poly::TermMap terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) terms.emplace(Exponents{static_cast<unsigned>(k)}, Rational(coeffs_[k]));
  }
  return Poly(xi_variables(), std::move(terms));
}

BigInt PoincarePoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

// ---------------------------------------------------------------------------

namespace {

Poly projective_poly(long n) { return p_projective(n).to_poly(); }

Poly xi_constant(long c) { return Poly::constant(xi_variables(), Rational(c)); }

}  // namespace

PoincarePoly p_projective(long n) {
  if (n < 0) reject("projective space of negative dimension " + std::to_string(n));
  return PoincarePoly(std::vector<BigInt>(static_cast<std::size_t>(n + 1), BigInt(1)));
}

PoincarePoly p_product(const PoincarePoly& a, const PoincarePoly& b) {
  if (a.coeffs().empty() || b.coeffs().empty()) return {};
  std::vector<BigInt> out(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return PoincarePoly(std::move(out));
}

PoincarePoly p_bundle(const PoincarePoly& base, long fiber_dim) {
  if (fiber_dim < 0) reject("negative fiber dimension");
  return p_product(base, p_projective(fiber_dim));
}

PoincarePoly p_blowup(const PoincarePoly& total, const PoincarePoly& center, long codim) {
  if (codim < 1) reject("blow-up codimension must be at least 1");
  const Poly gain = (projective_poly(codim - 1) - xi_constant(1)) * center.to_poly();
  return PoincarePoly::from_poly(total.to_poly() + gain, "blowup");
}

PoincarePoly p_blowdown(const PoincarePoly& total, const PoincarePoly& center, long codim) {
  if (codim < 1) reject("blow-down codimension must be at least 1");
  const Poly loss = (projective_poly(codim - 1) - xi_constant(1)) * center.to_poly();
  return PoincarePoly::from_poly(total.to_poly() - loss, "blowdown");
}

PoincarePoly p_flip(const PoincarePoly& total_inf, const PoincarePoly& base, long old_fiber,
                    long new_fiber) {
  if (old_fiber < 0 || new_fiber < 0) reject("negative fiber dimension in flip");
  const Poly change = (projective_poly(new_fiber) - projective_poly(old_fiber)) * base.to_poly();
  return PoincarePoly::from_poly(total_inf.to_poly() + change, "flip");
}

// ---------------------------------------------------------------------------

namespace {

// Power series in x truncated above x^n, coefficients dense in t.
using TPoly = std::vector<BigInt>;
using Series = std::vector<TPoly>;

void add_into(TPoly& acc, const TPoly& p, std::size_t shift, const BigInt& factor) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += factor * p[i];
}

// s * (1 + t^tdeg x^k) when geometric is false, s / (1 - t^tdeg x^k)
// otherwise.
Series apply_factor(const Series& s, long k, long tdeg, bool geometric) {
  const std::size_t n = s.size() - 1;
  Series out = s;
  const auto uk = static_cast<std::size_t>(k);
  const auto ut = static_cast<std::size_t>(tdeg);
  if (!geometric) {
    for (std::size_t d = n; d + 1 > uk; --d) add_into(out[d], s[d - uk], ut, BigInt(1));
    return out;
  }
  // out[d] = s[d] + t^tdeg out[d-k], ascending so out[d-k] is final.
  for (std::size_t d = uk; d <= n; ++d) add_into(out[d], out[d - uk], ut, BigInt(1));
  return out;
}

}  // namespace

Poly gottsche_t(const Betti& betti, long n, std::optional<long> truncation) {
  if (n < 0) reject("number of points must be nonnegative");
  const long trunc = truncation.value_or(n);
  if (trunc < n) reject("truncation " + std::to_string(trunc) + " is below n = " + std::to_string(n));
  for (const long b : betti) {
    if (b < 0) reject("Betti numbers must be nonnegative");
  }

  Series s(static_cast<std::size_t>(n + 1));
  s[0] = {BigInt(1)};
  for (long k = 1; k <= trunc; ++k) {
    for (long i = 0; i < betti[1]; ++i) s = apply_factor(s, k, 2 * k - 1, false);
    for (long i = 0; i < betti[3]; ++i) s = apply_factor(s, k, 2 * k + 1, false);
    for (long i = 0; i < betti[0]; ++i) s = apply_factor(s, k, 2 * k - 2, true);
    for (long i = 0; i < betti[2]; ++i) s = apply_factor(s, k, 2 * k, true);
    for (long i = 0; i < betti[4]; ++i) s = apply_factor(s, k, 2 * k + 2, true);
  }
  // Factors with k > n only touch x-degrees above n, so any truncation
  // >= n gives the same coefficient.

  static const std::vector<std::string> t_var{"t"};
  Poly::TermMap terms;
  const TPoly& top = s[static_cast<std::size_t>(n)];
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] != 0) terms.emplace(Exponents{static_cast<unsigned>(i)}, Rational(top[i]));
  }
  return Poly(t_var, std::move(terms));
}

PoincarePoly gottsche(const Betti& betti, long n, std::optional<long> truncation) {
  const Poly full = gottsche_t(betti, n, truncation);
  std::vector<BigInt> coeffs;
  for (const auto& [e, c] : full.terms()) {
    if (e[0] % 2 != 0) {
      reject("Hilb^" + std::to_string(n) + " has odd cohomology (t^" + std::to_string(e[0]) +
             "); it has no polynomial in xi");
    }
    const std::size_t k = e[0] / 2;
    if (coeffs.size() <= k) coeffs.resize(k + 1, BigInt(0));
    coeffs[k] = c.num();
  }
  return PoincarePoly(std::move(coeffs));
}

BigInt euler(const PoincarePoly& p) {
  BigInt total(0);
  for (const auto& c : p.coeffs()) total += c;
  return total;
}

bool is_palindromic(const PoincarePoly& p, long dim) {
  if (dim < 0 || p.degree() > dim) return false;
  for (long k = 0; k <= dim; ++k) {
    if (p.coefficient(static_cast<std::size_t>(k)) !=
        p.coefficient(static_cast<std::size_t>(dim - k))) {
      return false;
    }
  }
  return true;
}

long moduli_dimension(long r, long s) {
  if (r < 1 || s < 1) reject("moduli_dimension needs r, s >= 1");
  return 2 * r * s + 1;
}

std::vector<Stratum> stratum_ledger() {
  const long total = moduli_dimension(3, 2);
  const PoincarePoly m1 = p_bundle(p_product(p_projective(1), p_projective(2)), 9);
  const PoincarePoly m2 = p_projective(11);
  const PoincarePoly m3 = p_bundle(p_product(p_projective(8), p_projective(1)), 1);

  std::vector<Stratum> out{
      {"M_0", "open stratum: cokernels of 2 O(-1,-2) -> O(0,-1) + O whose first row cuts out a "
              "length-2 subscheme",
       0, total, std::nullopt, "O(0,-1) + O(0,0) - 2 O(-1,-2)"},
      {"M_1", "P^9-bundle over P^1 x P^2: cokernels of O(-2,-1) + O(-1,-3) -> O(-1,-1) + O",
       1, m1.degree(), m1, "O(-1,-1) + O(0,0) - O(-2,-1) - O(-1,-3)"},
      {"M_2", "twisted structure sheaves O_C(0,1), C of bidegree (2,3); isomorphic to P^11", 2,
       m2.degree(), m2, std::nullopt},
      {"M_3", "non-split extensions of O_L by O_Q, L a (0,1)-line, Q a (2,2)-quartic; P^1-bundle "
              "over P^8 x P^1",
       3, m3.degree(), m3, std::nullopt},
  };
  const std::vector<std::optional<std::string>> dual_resolutions{
      "2 O(-1,0) - O(-2,-2) - O(-2,-1)",
      "O(-1,1) + O(0,-1) - O(-2,-2) - O(-1,-1)",
      std::nullopt,
      std::nullopt,
  };
  for (std::size_t k = 0; k < 4; ++k) {
    Stratum d = out[k];
    d.name += "^D";
    d.description = "image of " + out[k].name + " under the duality M(3m+2n+1) -> M(3m+2n-1)";
    d.resolution = dual_resolutions[k];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace qsc::topology
