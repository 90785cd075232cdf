#include <doctest.h>

#include "oracles.hpp"
#include "qsc/error.hpp"
#include "qsc/space_expr.hpp"
#include "qsc/topology.hpp"

using namespace qsc;
using namespace qsc::topology;

namespace {

template <class F>
Error error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::InvariantViolation, "");
}

const PoincarePoly kM{1, 3, 8, 10, 11, 11, 11, 11, 11, 11, 10, 8, 3, 1};

PoincarePoly from_dense(const oracle::Dense& c) {
  std::vector<BigInt> v;
  for (const auto& x : c) v.push_back(x.num());
  return PoincarePoly(v);
}

oracle::Dense to_dense(const PoincarePoly& p) {
  oracle::Dense c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return c;
}

// P(Hilb^2 S) for S without odd cohomology: Sym^2 S blown up along the
// diagonal, P(Sym^2 S)(xi) = (P(xi)^2 + P(xi^2)) / 2.
PoincarePoly hilb2_oracle(const Betti& b) {
  const oracle::Dense p{Rational(b[0]), Rational(b[2]), Rational(b[4])};
  const auto sq = oracle::convolve(p, p);
  oracle::Dense out(5, Rational(0));
  for (std::size_t k = 0; k < sq.size(); ++k) out[k] += sq[k] / Rational(2);
  for (std::size_t k = 0; k < 3; ++k) out[2 * k] += p[k] / Rational(2);
  for (std::size_t k = 0; k < 3; ++k) out[k + 1] += p[k];
  return from_dense(out);
}

// Euler characteristic of Hilb^n: coefficient of x^n in prod (1 - x^k)^(-e).
BigInt hilb_euler_oracle(long e, long n) {
  std::vector<BigInt> series(static_cast<std::size_t>(n + 1), 0);
  series[0] = 1;
  for (long k = 1; k <= n; ++k) {
    // multiply by (1 - x^k)^(-e) = sum_j C(e + j - 1, j) x^(kj)
    std::vector<BigInt> next(series.size(), 0);
    for (long i = 0; i <= n; ++i) {
      BigInt binom = 1;
      for (long j = 0; i + k * j <= n; ++j) {
        next[static_cast<std::size_t>(i + k * j)] += series[static_cast<std::size_t>(i)] * binom;
        binom = binom * (e + j) / (j + 1);
      }
    }
    series = next;
  }
  return series[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("projective spaces and products") {
  CHECK(p_projective(0) == PoincarePoly{1});
  CHECK(p_projective(1) == PoincarePoly{1, 1});
  CHECK(euler(p_projective(11)) == 12);
  CHECK(error_of([] { p_projective(-1); }).kind() == ErrorKind::RejectedInput);

  CHECK(p_product(p_projective(8), p_projective(1)) == PoincarePoly{1, 2, 2, 2, 2, 2, 2, 2, 2, 1});
  CHECK(to_dense(p_product(p_projective(8), p_projective(1))) ==
        oracle::convolve(to_dense(p_projective(8)), to_dense(p_projective(1))));
  CHECK(p_product(kM, p_projective(0)) == kM);
  CHECK(p_product(p_projective(1), p_projective(1)) == PoincarePoly{1, 2, 1});
}

TEST_CASE("projective bundles") {
  const auto m1 = p_bundle(p_product(p_projective(1), p_projective(2)), 9);
  CHECK(m1.degree() == 12);
  CHECK(is_palindromic(m1, 12));
  const auto m3 = p_bundle(p_product(p_projective(8), p_projective(1)), 1);
  CHECK(m3.degree() == 10);
  CHECK(p_bundle(kM, 0) == kM);
  CHECK(error_of([] { p_bundle(kM, -1); }).kind() == ErrorKind::RejectedInput);
}

TEST_CASE("blow-ups and blow-downs") {
  CHECK(p_blowup(kM, p_projective(11), 2) == PoincarePoly::from_poly(
                                                  kM.to_poly() + PoincarePoly{0, 1}.to_poly() *
                                                                     p_projective(11).to_poly()));
  CHECK(p_blowup(kM, p_projective(12), 1) == kM);
  CHECK(p_blowup(p_projective(2), p_projective(0), 2) == PoincarePoly{1, 2, 1});
  CHECK(error_of([] { p_blowup(kM, kM, 0); }).kind() == ErrorKind::RejectedInput);
  CHECK(error_of([] { p_blowdown(PoincarePoly{1}, p_projective(3), 2); }).kind() ==
        ErrorKind::InvariantViolation);

  oracle::Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    std::vector<BigInt> x;
    std::vector<BigInt> z;
    for (long i = rng.range(0, 6); i >= 0; --i) x.emplace_back(rng.range(0, 4));
    for (long i = rng.range(0, 4); i >= 0; --i) z.emplace_back(rng.range(0, 4));
    x.back() = 1;
    z.back() = 1;
    const long codim = rng.range(1, 5);
    const PoincarePoly bx(x);
    const PoincarePoly bz(z);
    const auto bl = p_blowup(bx, bz, codim);
    CHECK(euler(bl) == euler(bx) + (euler(p_projective(codim - 1)) - 1) * euler(bz));
    CHECK(p_blowdown(bl, bz, codim) == bx);
  }
}

TEST_CASE("flips") {
  const auto base = p_product(p_projective(8), p_projective(1));
  const auto m_inf = p_bundle(gottsche({1, 0, 2, 0, 1}, 2), 9);
  CHECK(euler(m_inf) == 140);
  const auto m0 = p_flip(m_inf, base, 2, 1);
  CHECK(euler(m0) == 122);
  CHECK(p_flip(m_inf, base, 2, 2) == m_inf);
  CHECK(error_of([&] { p_flip(PoincarePoly{1}, base, 2, 1); }).kind() ==
        ErrorKind::InvariantViolation);
  CHECK(error_of([&] { p_flip(m_inf, base, -1, 1); }).kind() == ErrorKind::RejectedInput);

  oracle::Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    std::vector<BigInt> b;
    for (long i = rng.range(0, 3); i >= 0; --i) b.emplace_back(rng.range(0, 3));
    b.back() = 1;
    const PoincarePoly pb(b);
    const long fiber = rng.range(1, 4);
    const PoincarePoly total = p_bundle(pb, fiber);
    CHECK(euler(p_flip(total, pb, fiber, fiber - 1)) == euler(total) - euler(pb));
  }
}

TEST_CASE("Goettsche formula") {
  const Betti quadric{1, 0, 2, 0, 1};
  CHECK(gottsche(quadric, 2) == PoincarePoly{1, 3, 6, 3, 1});
  CHECK(gottsche(quadric, 0) == PoincarePoly{1});
  CHECK(gottsche(quadric, 1) == PoincarePoly{1, 2, 1});
  CHECK(euler(gottsche(quadric, 2)) == 14);
  CHECK(gottsche(quadric, 2, 4) == gottsche(quadric, 2));
  CHECK(gottsche({1, 0, 1, 0, 1}, 2) == PoincarePoly{1, 2, 3, 2, 1});
  CHECK(error_of([&] { gottsche(quadric, 3, 2); }).kind() == ErrorKind::RejectedInput);
  CHECK(error_of([] { gottsche({1, 2, 2, 2, 1}, 1); }).kind() == ErrorKind::RejectedInput);

  oracle::Rng rng(43);
  for (int k = 0; k < 150; ++k) {
    const Betti even{1, 0, rng.range(0, 6), 0, 1};
    CHECK(gottsche(even, 2) == hilb2_oracle(even));
    CHECK(gottsche(even, 1) == PoincarePoly{1, even[2], 1});
    const long n = rng.range(1, 4);
    CHECK(gottsche(even, n) == gottsche(even, n, n + 2));

    const Betti any{1, rng.range(0, 3), rng.range(0, 5), 0, 1};
    const Betti full{any[0], any[1], any[2], any[1], any[4]};
    const long e = full[0] - full[1] + full[2] - full[3] + full[4];
    const Poly pt = gottsche_t(full, n);
    CHECK(eval(pt, {{"t", -1}}) == Rational(hilb_euler_oracle(e, n)));
  }
}

TEST_CASE("Euler characteristic, palindromes and dimensions") {
  CHECK(euler(kM) == 110);
  CHECK(euler(p_projective(5)) == 6);
  CHECK(is_palindromic(kM, 13));
  CHECK(is_palindromic(p_projective(4), 4));
  CHECK_FALSE(is_palindromic(PoincarePoly{1, 2}, 2));
  CHECK(moduli_dimension(3, 2) == 13);
  CHECK(moduli_dimension(1, 1) == 3);
  CHECK(moduli_dimension(2, 2) == 9);
  CHECK(error_of([] { moduli_dimension(0, 2); }).kind() == ErrorKind::RejectedInput);
  CHECK(error_of([] { PoincarePoly{1, -1}; }).kind() == ErrorKind::RejectedInput);
}

TEST_CASE("strata") {
  const auto ledger = stratum_ledger();
  REQUIRE(ledger.size() == 8);
  const long dims[] = {13, 12, 11, 10};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(ledger[k].codim == static_cast<long>(k));
    CHECK(ledger[k].dim == dims[k]);
    CHECK(ledger[k + 4].codim == ledger[k].codim);
    CHECK(ledger[k + 4].dim == ledger[k].dim);
    CHECK(ledger[k + 4].poincare == ledger[k].poincare);
    if (ledger[k].poincare) CHECK(is_palindromic(*ledger[k].poincare, ledger[k].dim));
  }
  CHECK_FALSE(ledger[0].poincare);
  CHECK(*ledger[2].poincare == p_projective(11));
  CHECK(*ledger[1].poincare == p_bundle(p_product(p_projective(1), p_projective(2)), 9));
  CHECK(*ledger[3].poincare == p_bundle(p_product(p_projective(8), p_projective(1)), 1));
}

TEST_CASE("space expressions") {
  const auto v = space::evaluate_space(space::moduli_pipeline());
  CHECK(v.poincare == kM);
  CHECK(v.dim == 13);

  const auto parsed = space::evaluate_space(
      space::parse("blowdown(flip(bundle(Hilb(2,(1,0,2,0,1)),9), P8*P1, 2, 1), P11, 2)"));
  CHECK(parsed.poincare == kM);

  const auto identity = space::evaluate_space(
      space::parse("P9*Hilb(2,(1,0,2,0,1)) + (P1 - P2)*P8*P1 - xi*P11"));
  CHECK(identity.poincare == kM);

  CHECK(space::evaluate_space(space::parse("P9")).poincare == p_projective(9));
  const auto m1 = space::evaluate_space(space::parse("bundle(P1*P2, 9)"));
  CHECK(m1.dim == 12);
  CHECK(m1.poincare == p_bundle(p_product(p_projective(1), p_projective(2)), 9));
  CHECK(space::evaluate_space(space::parse("3xi^2 + xi + 1")).poincare == PoincarePoly{1, 1, 3});

  for (const char* text : {"blowdown(flip(bundle(Hilb(2,(1,0,2,0,1)),9), P8*P1, 2, 1), P11, 2)",
                           "P9*Hilb(2,[1,0,2,0,1]) + (P1 - P2)*P8*P1 - xi*P11", "P3*(P1 + xi)",
                           "blowup(P2, P0, 2)"}) {
    const auto e = space::parse(text);
    CHECK(space::evaluate_space(space::parse(space::to_string(e))).poincare ==
          space::evaluate_space(e).poincare);
  }
}

TEST_CASE("space expression errors") {
  const Error dims = error_of([] {
    space::evaluate_space(
        space::parse("blowdown(flip(bundle(Hilb(2,(1,0,2,0,1)),9), P8*P1, 2, 2), P11, 2)"));
  });
  CHECK(dims.kind() == ErrorKind::InvariantViolation);
  CHECK(std::string(dims.what()).rfind("blowdown/total/flip", 0) == 0);

  const Error center = error_of([] { space::evaluate_space(space::parse("blowup(P3, P2, 2)")); });
  CHECK(center.kind() == ErrorKind::InvariantViolation);
  CHECK(std::string(center.what()).rfind("blowup", 0) == 0);

  CHECK(error_of([] { space::evaluate_space(space::parse("P1 - P2")); }).kind() ==
        ErrorKind::InvariantViolation);

  const Error syntax = error_of([] { space::parse("bundle(P2, )"); });
  CHECK(syntax.kind() == ErrorKind::Parse);
  REQUIRE(syntax.position());
  CHECK(*syntax.position() == 11);
  CHECK(error_of([] { space::parse("Q3"); }).kind() == ErrorKind::Parse);
  CHECK(error_of([] { space::parse("P2 +"); }).kind() == ErrorKind::Parse);
}
