#include "qsc/rational.hpp"

#include <cctype>

#include "qsc/error.hpp"

namespace qsc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RejectedInput: return "rejected_input";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::IllFormedMorphism: return "ill_formed_morphism";
    case ErrorKind::UndefinedGcd: return "undefined_gcd";
    case ErrorKind::Divisibility: return "divisibility";
    case ErrorKind::InvariantViolation: return "invariant_violation";
    case ErrorKind::Unsupported: return "unsupported_instance";
    case ErrorKind::DegenerateWall: return "degenerate_wall";
  }
  return "unknown";
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::RejectedInput, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::RejectedInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::fraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'", 0);
  }
  const auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
  return Rational(BigInt(strip_plus(num)), BigInt(den));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qsc
