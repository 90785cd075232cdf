#include "qsc/verify.hpp"

#include <functional>
#include <random>

#include <json.hpp>

#include "qsc/bihom.hpp"
#include "qsc/pairs.hpp"
#include "qsc/render.hpp"
#include "qsc/sheafcalc.hpp"
#include "qsc/space_expr.hpp"
#include "qsc/stability.hpp"
#include "qsc/topology.hpp"

namespace qsc::verify {

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

// --- random instances ------------------------------------------------------

namespace {

using sheafcalc::HilbertPoly;
using sheafcalc::KClass;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() { return Rational(range(-5, 5), range(1, 3)); }

  Poly poly(const std::vector<std::string>& vars, long max_exp, int max_terms) {
    Poly p(vars);
    const long terms = range(0, max_terms);
    for (long k = 0; k < terms; ++k) {
      Exponents e(vars.size());
      for (auto& x : e) x = static_cast<unsigned>(range(0, max_exp));
      p += Poly::monomial(vars, e, rational());
    }
    return p;
  }

  bihom::BihomForm form(Bidegree d, bool nonzero) {
    while (true) {
      bihom::BihomForm f(d);
      for (int i = 0; i <= d.a; ++i) {
        for (int j = 0; j <= d.b; ++j) {
          if (range(0, 2) == 0) continue;
          f += bihom::BihomForm::monomial(d, static_cast<unsigned>(i), static_cast<unsigned>(j),
                                          Rational(range(-3, 3)));
        }
      }
      if (!nonzero || !f.is_zero()) return f;
    }
  }

  Bidegree small_bidegree(int max) {
    return {static_cast<int>(range(0, max)), static_cast<int>(range(0, max))};
  }

  HilbertPoly linear() {
    long r = 0;
    long s = 0;
    while (r + s == 0) {
      r = range(0, 4);
      s = range(0, 4);
    }
    return HilbertPoly::linear(r, s, range(-6, 6));
  }

  KClass kclass() {
    KClass k;
    const long terms = range(0, 4);
    for (long i = 0; i < terms; ++i) {
      k.add({static_cast<int>(range(-3, 1)), static_cast<int>(range(-3, 1))}, range(-4, 4));
    }
    return k;
  }

  topology::PoincarePoly poincare(long max_degree) {
    std::vector<BigInt> c;
    const long d = range(0, max_degree);
    for (long k = 0; k <= d; ++k) c.emplace_back(range(0, 3));
    c.back() = range(1, 3);
    return topology::PoincarePoly(std::move(c));
  }

 private:
  std::mt19937 rng_;
};

bool divides(const bihom::BihomForm& g, const bihom::BihomForm& f) {
  try {
    bihom::divide_exact(f, g);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Divisibility) return false;
    throw;
  }
}

PropertyTally tally(const std::string& name, int instances, const std::function<bool()>& trial) {
  PropertyTally t{name, instances, 0};
  for (int k = 0; k < instances; ++k) {
    bool ok = false;
    try {
      ok = trial();
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++t.failures;
  }
  return t;
}

}  // namespace

std::vector<PropertyTally> run_property_suites(unsigned seed, int instances) {
  Gen gen(seed);
  const std::vector<std::string> mn{"m", "n"};
  std::vector<PropertyTally> out;

  out.push_back(tally("polynomial ring axioms", instances, [&] {
    const Poly a = gen.poly(mn, 2, 4);
    const Poly b = gen.poly(mn, 2, 4);
    const Poly c = gen.poly(mn, 2, 4);
    const std::map<std::string, long> u{{"m", gen.range(-3, 3)}, {"n", gen.range(-3, 3)}};
    const std::map<std::string, long> v{{"m", gen.range(-3, 3)}, {"n", gen.range(-3, 3)}};
    const std::map<std::string, long> uv{{"m", u.at("m") + v.at("m")},
                                         {"n", u.at("n") + v.at("n")}};
    const std::map<std::string, Rational> pt{{"m", gen.rational()}, {"n", gen.rational()}};
    return a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
           (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
           shift(shift(a, u), v) == shift(a, uv) && eval(a * b, pt) == eval(a, pt) * eval(b, pt) &&
           eval(a + b, pt) == eval(a, pt) + eval(b, pt);
  }));

  out.push_back(tally("gcd and exact division", instances, [&] {
    const auto f = gen.form(gen.small_bidegree(1), true);
    const auto g = gen.form(gen.small_bidegree(1), true);
    const auto h = gen.form(gen.small_bidegree(1), true);
    const auto hf = h * f;
    const auto hg = h * g;
    const auto d = bihom::gcd_forms({hf, hg});
    return divides(d, hf) && divides(d, hg) && divides(h, d) &&
           bihom::divide_exact(f * g, g) == f && d == bihom::make_monic(d);
  }));

  out.push_back(tally("Laplace identity for maximal minors", instances, [&] {
    const auto k = static_cast<std::size_t>(gen.range(1, 3));
    std::vector<Bidegree> rows(k);
    std::vector<Bidegree> cols(k + 1);
    for (auto& r : rows) r = gen.small_bidegree(1);
    for (auto& c : cols) c = -gen.small_bidegree(1);
    bihom::BihomMatrix m(rows, cols);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j <= k; ++j) m.set(i, j, gen.form(m.entry_bidegree(i, j), false));
    }
    return bihom::multiply(m, bihom::minor_column(m)).is_zero();
  }));

  out.push_back(tally("twist and dual identities", instances, [&] {
    const HilbertPoly p = gen.linear();
    const Bidegree a{static_cast<int>(gen.range(-3, 3)), static_cast<int>(gen.range(-3, 3))};
    const Bidegree b{static_cast<int>(gen.range(-3, 3)), static_cast<int>(gen.range(-3, 3))};
    const KClass k = gen.kclass();
    using namespace sheafcalc;
    return dual(dual(p)) == p && slope(dual(p)) == -slope(p) &&
           twist(twist(p, a), b) == twist(p, a + b) &&
           chi(k.twisted(a)) == twist(chi(k), a) && twist(p, {0, 0}) == p;
  }));

  out.push_back(tally("flip and blow-up Euler bookkeeping", instances, [&] {
    using namespace topology;
    const PoincarePoly x = gen.poincare(6);
    const PoincarePoly z = gen.poincare(4);
    const long codim = gen.range(1, 4);
    const PoincarePoly bl = p_blowup(x, z, codim);
    const bool blow = euler(bl) == euler(x) + BigInt(codim - 1) * euler(z) &&
                      p_blowdown(bl, z, codim) == x;
    const long fiber = gen.range(1, 4);
    const PoincarePoly base = gen.poincare(3);
    const PoincarePoly total =
        PoincarePoly::from_poly(x.to_poly() + p_bundle(base, fiber).to_poly());
    const PoincarePoly flipped = p_flip(total, base, fiber, fiber - 1);
    return blow && euler(flipped) == euler(total) - euler(base);
  }));
  return out;
}

// --- the report --------------------------------------------------------------

namespace {

const char* const kExpectedPoincare =
    "xi^13 + 3xi^12 + 8xi^11 + 10xi^10 + 11xi^9 + 11xi^8 + 11xi^7 + 11xi^6 + 11xi^5 + 11xi^4 + "
    "10xi^3 + 8xi^2 + 3xi + 1";

using Rows = std::vector<std::vector<std::string>>;

const Rows kTable1{
    {"(2, 3)", "3m + 2n - 1", "2/5", "1/5"}, {"(2, 2)", "2m + 2n", "1/2", "1/2"},
    {"(1, 3)", "3m + n + 1", "1", "1/2"},    {"(2, 1)", "m + 2n + 1", "2/3", "1"},
    {"(1, 2)", "2m + n + 1", "1", "2/3"},    {"(0, 3)", "3m + 3", "2", "1"},
    {"(2, 0)", "2n + 2", "1", "2"},          {"(1, 1)", "m + n + 1", "1", "1"},
    {"(0, 2)", "2m + 2", "2", "1"},          {"(1, 0)", "n + 1", "1", "2"},
    {"(0, 1)", "m + 1", "2", "1"},
};

const Rows kTable2{
    {"(2, 2)", "2m + 2n", "m - 1", "-1"},          {"(1, 3)", "3m + n + 1", "n - 2", "-1"},
    {"(2, 1)", "m + 2n + 1", "2m - 2", "-1"},      {"(1, 2)", "2m + n + 1", "m + n - 2", "-1/2"},
    {"(0, 3)", "3m + 3", "2n - 4", "-1"},          {"(2, 0)", "2n + 2", "3m - 3", "-1"},
    {"(1, 1)", "m + n + 1", "2m + n - 2", "-1/3"}, {"(0, 2)", "2m + 2", "m + 2n - 3", "-1/3"},
    {"(1, 0)", "n + 1", "3m + n - 2", "-1/4"},     {"(0, 1)", "m + 1", "2m + 2n - 2", "0"},
};

const Rows kTable3{
    {"(1, 0)", "(-1, -3)", "3m + n + 1"},
    {"(0, 1)", "(-2, -2)", "2m + 2n"},
    {"(0, 2)", "(-2, -1)", "m + 2n + 1"},
    {"(1, 1)", "(-1, -2)", "2m + n + 1"},
};

std::size_t table_mismatches(const stability::Table& t, const Rows& expected) {
  std::size_t bad = t.rows.size() == expected.size() ? 0 : 1;
  for (std::size_t k = 0; k < std::min(t.rows.size(), expected.size()); ++k) {
    const auto& row = t.rows[k];
    std::vector<std::string> cells{row.label.str()};
    if (row.twist) cells.push_back(row.twist->str());
    for (const auto& p : row.polys) cells.push_back(p.str());
    for (const auto& s : row.slopes) cells.push_back(s.str());
    cells.resize(expected[k].size());
    if (cells != expected[k]) ++bad;
  }
  return bad;
}

Check make(int id, std::string claim, std::string computed, std::string expected) {
  const bool pass = computed == expected;
  return {id, std::move(claim), std::move(computed), std::move(expected), pass};
}

}  // namespace

Report verify_all() {
  using namespace topology;
  Report r;
  r.title = "Verification of M(3m+2n+1)";

  const space::Value m = space::evaluate_space(space::moduli_pipeline());

  r.checks.push_back(make(1, "Poincare polynomial of M", m.poincare.str(), kExpectedPoincare));

  const Betti quadric{1, 0, 2, 0, 1};
  r.checks.push_back(make(3, "Goettsche formula for Hilb^2 and Hilb^1 of P^1 x P^1",
                          gottsche(quadric, 2).str() + "; " + gottsche(quadric, 1).str(),
                          "xi^4 + 3xi^3 + 6xi^2 + 3xi + 1; xi^2 + 2xi + 1"));

  {
    const auto t1 = stability::table1();
    const auto t2 = stability::table2();
    const auto t3 = stability::table3();
    const std::size_t bad =
        table_mismatches(t1, kTable1) + table_mismatches(t2, kTable2) + table_mismatches(t3, kTable3);
    const std::string computed = std::to_string(t1.rows.size() + t2.rows.size() + t3.rows.size()) +
                                 " rows, " + std::to_string(bad) + " mismatches; " +
                                 render::verdict_line(t1) + " " + render::verdict_line(t2) + " " +
                                 render::verdict_line(t3);
    const std::string expected =
        "25 rows, 0 mismatches; "
        "Verdict (slope <= 1/5): allowed only for deg(C) = (2, 3) with (i, j) = (0, -1). "
        "Verdict (slope < 1/5): all 10 rows allowed. "
        "Verdict (slope <= 1/5): allowed only for deg(g) = (0, 1) with (i, j) = (-2, -2).";
    r.checks.push_back(make(4, "Tables 1, 2 and 3", computed, expected));
  }

  r.checks.push_back(make(5, "walls of 3m + 2n + 1",
                          render::walls_json(pairs::find_walls(sheafcalc::parse_hilbert("3m+2n+1"))),
                          R"([{"alpha":"4/1","destabilizer":{"gamma":1,"poly":"2m+2n"},)"
                          R"("complement":{"gamma":0,"poly":"m+1"}}])"));

  {
    using namespace sheafcalc;
    const HilbertPoly z = chi(parse_kclass("O(0,0) - 4 O(-1,-2) + O(-2,-2) + 2 O(-1,-3)"));
    const HilbertPoly f = parse_hilbert("3m + 2n + 1") - chi(KClass({0, 0})) +
                          Rational(4) * chi(KClass({-1, -1}));
    r.checks.push_back(make(6, "Euler characteristics of K-classes", z.str() + "; " + f.str(),
                            "2; 3mn + 2m + n"));
  }

  {
    using namespace sheafcalc;
    const HilbertPoly p = parse_hilbert("3m + 2n + 1");
    CohomologyTable generic;
    generic.at({0, 0}) = {1, 0};
    generic.at({-1, 0}) = {0, 2};
    generic.at({0, -1}) = {0, 1};
    generic.at({-1, -1}) = {0, 4};
    const auto g = beilinson_identity(generic, p);
    Gen gen(20240607);
    int zero = 0;
    for (int k = 0; k < 100; ++k) {
      const HilbertPoly q = gen.linear();
      CohomologyTable t;
      for (const auto tw : CohomologyTable::twists) {
        const long chi_value = twist(q, tw).at(0, 0).num().get_si();
        const long h1 = std::max(0L, -chi_value) + gen.range(0, 3);
        t.at(tw) = {chi_value + h1, h1};
      }
      if (beilinson_identity(t, q).residual.poly().is_zero()) ++zero;
    }
    r.checks.push_back(make(7, "Beilinson tableau identity",
                            "generic residual " + g.residual.str() + ", E_1^{-1,1} = " +
                                g.cells.at({-1, 1}).str() + ", " + std::to_string(zero) +
                                "/100 random residuals 0",
                            "generic residual 0, E_1^{-1,1} = O(0,-1) + 2 O(-1,0), 100/100 random "
                            "residuals 0"));
  }

  r.checks.push_back(make(8, "stability inequality equivalence up to 5",
                          stability::inequality_equivalence_check(5) ? "true" : "false", "true"));

  {
    int empty = 0;
    int cases = 0;
    for (long rr = 2; rr <= 6; ++rr) {
      for (long t = 1; t < rr; ++t) {
        ++cases;
        if (stability::empty_moduli(rr, t)) ++empty;
      }
    }
    r.checks.push_back(make(9, "empty moduli for 2 <= r <= 6, 0 < t < r",
                            std::to_string(empty) + "/" + std::to_string(cases), "15/15"));
  }

  {
    const auto ledger = stratum_ledger();
    std::string dims;
    std::string codims;
    int palindromic = is_palindromic(m.poincare, m.dim) ? 1 : 0;
    int compact = 1;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& s = ledger[k];
      dims += (k ? ", " : "") + std::to_string(s.dim);
      codims += (k ? ", " : "") + std::to_string(s.codim);
      if (s.poincare) {
        ++compact;
        if (is_palindromic(*s.poincare, s.dim)) ++palindromic;
      }
    }
    r.checks.push_back(make(10, "stratum ledger",
                            "dim M = " + std::to_string(moduli_dimension(3, 2)) + "; dims " + dims +
                                "; codims " + codims + "; palindromic " +
                                std::to_string(palindromic) + "/" + std::to_string(compact),
                            "dim M = 13; dims 13, 12, 11, 10; codims 0, 1, 2, 3; palindromic 4/4"));
  }

  {
    int total = 0;
    int failures = 0;
    for (const auto& t : run_property_suites(7, 100)) {
      total += t.instances;
      failures += t.failures;
    }
    r.checks.push_back(make(11, "randomized property suites",
                            std::to_string(total - failures) + "/" + std::to_string(total),
                            "500/500"));
  }

  r.checks.push_back(make(2, "Euler characteristic of M", to_string(euler(m.poincare)), "110"));
  return r;
}

std::string report_markdown(const Report& r) {
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  std::string s = r.title + ": " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
                  " checks passed\n\n";
  for (const auto& c : r.checks) {
    s += "[" + std::to_string(c.id) + "] " + c.claim + ": " + (c.pass ? "PASS " : "FAIL ") +
         c.computed;
    if (c.expected) s += (c.pass ? " = " : " != ") + *c.expected;
    s += "\n";
  }
  return s;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["claim"] = c.claim;
    j["computed"] = c.computed;
    j["expected"] = c.expected ? nlohmann::ordered_json(*c.expected) : nlohmann::ordered_json();
    j["pass"] = c.pass;
    checks.push_back(j);
  }
  nlohmann::ordered_json out;
  out["title"] = r.title;
  out["pass"] = r.all_pass();
  out["checks"] = checks;
  return out.dump();
}

}  // namespace qsc::verify
