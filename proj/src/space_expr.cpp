#include "qsc/space_expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cursor.hpp"
#include "qsc/error.hpp"

namespace qsc::space {

namespace {

Expr make(auto node) { return std::make_shared<const Node>(Node{std::move(node)}); }

void require_nonnegative(long v, const char* what) {
  if (v < 0) reject(std::string(what) + " must be nonnegative");
}

}  // namespace

Expr projective(long n) {
  require_nonnegative(n, "projective dimension");
  return make(ProjectiveSpace{n});
}
Expr product(Expr a, Expr b) { return make(Product{std::move(a), std::move(b)}); }
Expr sum(Expr a, Expr b) { return make(Sum{std::move(a), std::move(b)}); }
Expr difference(Expr a, Expr b) { return make(Difference{std::move(a), std::move(b)}); }
Expr bundle(Expr base, long fiber_dim) {
  require_nonnegative(fiber_dim, "fiber dimension");
  return make(Bundle{std::move(base), fiber_dim});
}
Expr blowup(Expr total, Expr center, long codim) {
  return make(Blowup{std::move(total), std::move(center), codim});
}
Expr blowdown(Expr total, Expr center, long codim) {
  return make(Blowdown{std::move(total), std::move(center), codim});
}
Expr flip(Expr total, Expr base, long old_fiber, long new_fiber) {
  require_nonnegative(old_fiber, "fiber dimension");
  require_nonnegative(new_fiber, "fiber dimension");
  return make(Flip{std::move(total), std::move(base), old_fiber, new_fiber});
}
Expr hilb(const topology::Betti& betti, long n) {
  require_nonnegative(n, "number of points");
  return make(HilbSurface{betti, n});
}
Expr literal(Poly value) {
  if (value.variables() != topology::xi_variables()) reject("literals are polynomials in xi");
  return make(Literal{std::move(value)});
}

Expr moduli_pipeline() {
  const Expr hilb2 = hilb({1, 0, 2, 0, 1}, 2);
  const Expr m_infty = bundle(hilb2, 9);
  const Expr m_zero = flip(m_infty, product(projective(8), projective(1)), 2, 1);
  return blowdown(m_zero, projective(11), 2);
}

// --- printing ----------------------------------------------------------------

namespace {

bool is_additive(const Expr& e) {
  return std::holds_alternative<Sum>(e->node) || std::holds_alternative<Difference>(e->node) ||
         (std::holds_alternative<Literal>(e->node) &&
          std::get<Literal>(e->node).value.size() > 1);
}

std::string wrapped(const Expr& e) {
  return is_additive(e) ? "(" + to_string(e) + ")" : to_string(e);
}

std::string betti_str(const topology::Betti& b) {
  std::string s = "(";
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s + ")";
}

}  // namespace

std::string to_string(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProjectiveSpace>) {
          return "P" + std::to_string(n.n);
        } else if constexpr (std::is_same_v<T, Product>) {
          return wrapped(n.left) + " * " + wrapped(n.right);
        } else if constexpr (std::is_same_v<T, Sum>) {
          return to_string(n.left) + " + " + to_string(n.right);
        } else if constexpr (std::is_same_v<T, Difference>) {
          return to_string(n.left) + " - " + wrapped(n.right);
        } else if constexpr (std::is_same_v<T, Bundle>) {
          return "bundle(" + to_string(n.base) + ", " + std::to_string(n.fiber_dim) + ")";
        } else if constexpr (std::is_same_v<T, Blowup>) {
          return "blowup(" + to_string(n.total) + ", " + to_string(n.center) + ", " +
                 std::to_string(n.codim) + ")";
        } else if constexpr (std::is_same_v<T, Blowdown>) {
          return "blowdown(" + to_string(n.total) + ", " + to_string(n.center) + ", " +
                 std::to_string(n.codim) + ")";
        } else if constexpr (std::is_same_v<T, Flip>) {
          return "flip(" + to_string(n.total) + ", " + to_string(n.base) + ", " +
                 std::to_string(n.old_fiber) + ", " + std::to_string(n.new_fiber) + ")";
        } else if constexpr (std::is_same_v<T, HilbSurface>) {
          return "Hilb(" + std::to_string(n.n) + ", " + betti_str(n.betti) + ")";
        } else {
          return n.value.str(PrintStyle::Compact);
        }
      },
      e->node);
}

// --- parsing -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_(text) {}

  Expr parse_all() {
    if (cur_.at_end()) cur_.fail("empty expression");
    Expr e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected input");
    return e;
  }

 private:
  Expr expr() {
    Expr e = product_expr();
    while (true) {
      if (cur_.consume('+')) e = sum(e, product_expr());
      else if (cur_.consume('-')) e = difference(e, product_expr());
      else return e;
    }
  }

  Expr product_expr() {
    Expr e = atom();
    while (cur_.consume('*')) e = product(e, atom());
    return e;
  }

  std::string word() {
    cur_.skip_ws();
    std::string w;
    while (std::isalpha(static_cast<unsigned char>(cur_.peek_raw())) != 0) {
      w += cur_.peek_raw();
      cur_.set_pos(cur_.pos() + 1);
    }
    return w;
  }

  long natural() { return cur_.small_natural(); }

  // xi or xi^k, after the word "xi" was read.
  unsigned xi_power() {
    if (cur_.peek_raw() == '^') {
      cur_.set_pos(cur_.pos() + 1);
      return static_cast<unsigned>(natural());
    }
    return 1;
  }

  topology::Betti betti() {
    const char open = cur_.peek();
    if (open != '(' && open != '[') cur_.fail("expected Betti numbers");
    cur_.set_pos(cur_.pos() + 1);
    topology::Betti b{};
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k > 0) cur_.expect(',');
      const std::size_t at = cur_.pos();
      b[k] = cur_.signed_integer();
      if (b[k] < 0) {
        cur_.set_pos(at);
        cur_.fail("Betti numbers must be nonnegative");
      }
    }
    cur_.expect(open == '(' ? ')' : ']');
    return b;
  }

  Expr atom() {
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    if (cur_.consume('(')) {
      Expr e = expr();
      cur_.expect(')');
      return e;
    }
    if (cur_.at_digit()) {
      const BigInt c = cur_.natural();
      const std::size_t after = cur_.pos();
      unsigned power = 0;
      if (word() == "xi") {
        power = xi_power();
      } else {
        cur_.set_pos(after);
      }
      return literal(Poly::monomial(topology::xi_variables(), {power}, Rational(c)));
    }
    const std::string w = word();
    if (w.empty()) cur_.fail("expected a space");
    if (w == "xi") {
      return literal(Poly::monomial(topology::xi_variables(), {xi_power()}, Rational(1)));
    }
    if (w == "P") {
      if (cur_.peek_raw() == '^') cur_.set_pos(cur_.pos() + 1);
      return projective(natural());
    }
    if (w == "Hilb") {
      cur_.expect('(');
      const long n = natural();
      cur_.expect(',');
      const topology::Betti b = betti();
      cur_.expect(')');
      return hilb(b, n);
    }
    if (w == "bundle") {
      cur_.expect('(');
      Expr base = expr();
      cur_.expect(',');
      const long f = natural();
      cur_.expect(')');
      return bundle(base, f);
    }
    if (w == "blowup" || w == "blowdown") {
      cur_.expect('(');
      Expr total = expr();
      cur_.expect(',');
      Expr center = expr();
      cur_.expect(',');
      const long c = natural();
      cur_.expect(')');
      return w == "blowup" ? blowup(total, center, c) : blowdown(total, center, c);
    }
    if (w == "flip") {
      cur_.expect('(');
      Expr total = expr();
      cur_.expect(',');
      Expr base = expr();
      cur_.expect(',');
      const long old_fiber = natural();
      cur_.expect(',');
      const long new_fiber = natural();
      cur_.expect(')');
      return flip(total, base, old_fiber, new_fiber);
    }
    cur_.set_pos(start);
    cur_.fail("unknown space '" + w + "'");
  }

  detail::Cursor cur_;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

// --- evaluation --------------------------------------------------------------

namespace {

struct Partial {
  Poly poly;  // in xi, possibly with negative coefficients
  long dim;
};

std::string join(const std::vector<std::string>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (const auto& p : path) s += (s.empty() ? "" : "/") + p;
  return s;
}

class Evaluator {
 public:
  Partial eval(const Expr& e) {
    return std::visit([this](const auto& n) { return on(n); }, e->node);
  }

 private:
  Partial child(const char* name, const Expr& e) {
    path_.emplace_back(name);
    Partial p = eval(e);
    path_.pop_back();
    return p;
  }

  // A child that must be an actual space.
  topology::PoincarePoly space_child(const char* name, const Expr& e, long* dim) {
    path_.emplace_back(name);
    Partial p = eval(e);
    auto out = topology::PoincarePoly::from_poly(p.poly, join(path_));
    path_.pop_back();
    *dim = p.dim;
    return out;
  }

  [[noreturn]] void inconsistent(const std::string& what) const {
    throw Error(ErrorKind::InvariantViolation, join(path_) + ": " + what);
  }

  Partial finish(const topology::PoincarePoly& p, long dim) { return {p.to_poly(), dim}; }

  Partial on(const ProjectiveSpace& n) { return finish(topology::p_projective(n.n), n.n); }

  Partial on(const Product& n) {
    Partial a = child("left", n.left);
    Partial b = child("right", n.right);
    return {a.poly * b.poly, a.dim + b.dim};
  }

  Partial on(const Sum& n) {
    Partial a = child("left", n.left);
    Partial b = child("right", n.right);
    return {a.poly + b.poly, std::max(a.dim, b.dim)};
  }

  Partial on(const Difference& n) {
    Partial a = child("left", n.left);
    Partial b = child("right", n.right);
    return {a.poly - b.poly, std::max(a.dim, b.dim)};
  }

  Partial on(const Bundle& n) {
    path_.emplace_back("bundle");
    long dim = 0;
    const auto base = space_child("base", n.base, &dim);
    Partial out = finish(topology::p_bundle(base, n.fiber_dim), dim + n.fiber_dim);
    path_.pop_back();
    return out;
  }

  template <class T>
  Partial modification(const T& n, const char* name, bool up) {
    path_.emplace_back(name);
    long total_dim = 0;
    long center_dim = 0;
    const auto total = space_child("total", n.total, &total_dim);
    const auto center = space_child("center", n.center, &center_dim);
    if (center_dim + n.codim != total_dim) {
      inconsistent("center of dimension " + std::to_string(center_dim) + " with codimension " +
                   std::to_string(n.codim) + " does not fit a space of dimension " +
                   std::to_string(total_dim));
    }
    try {
      const auto p = up ? topology::p_blowup(total, center, n.codim)
                        : topology::p_blowdown(total, center, n.codim);
      Partial out = finish(p, total_dim);
      path_.pop_back();
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) throw;
      inconsistent(e.what());
    }
  }

  Partial on(const Blowup& n) { return modification(n, "blowup", true); }
  Partial on(const Blowdown& n) { return modification(n, "blowdown", false); }

  Partial on(const Flip& n) {
    path_.emplace_back("flip");
    long total_dim = 0;
    long base_dim = 0;
    const auto total = space_child("total", n.total, &total_dim);
    const auto base = space_child("base", n.base, &base_dim);
    if (base_dim + n.old_fiber + n.new_fiber + 1 != total_dim) {
      inconsistent("base of dimension " + std::to_string(base_dim) + " with fibers P^" +
                   std::to_string(n.old_fiber) + " and P^" + std::to_string(n.new_fiber) +
                   " does not fit a space of dimension " + std::to_string(total_dim));
    }
    try {
      Partial out = finish(topology::p_flip(total, base, n.old_fiber, n.new_fiber), total_dim);
      path_.pop_back();
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) throw;
      inconsistent(e.what());
    }
  }

  Partial on(const HilbSurface& n) {
    return finish(topology::gottsche(n.betti, n.n), 2 * n.n);
  }

  Partial on(const Literal& n) { return {n.value, std::max(0L, n.value.total_degree())}; }

  std::vector<std::string> path_;
};

}  // namespace

Value evaluate_space(const Expr& e) {
  Partial p = Evaluator().eval(e);
  return {topology::PoincarePoly::from_poly(p.poly, "root"), p.dim};
}

}  // namespace qsc::space
