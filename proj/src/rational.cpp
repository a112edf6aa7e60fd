#include "fano/rational.hpp"

#include <cctype>
#include <ostream>

namespace fano {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) {
  v_ = make_canonical(mpz_class(num), mpz_class(den));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  v_ = make_canonical(num, den);
}

Rational Rational::from_string(std::string_view s) {
  const auto fail = [&] {
    throw ParseError("not a rational literal (expected p or p/q): \"" + std::string(s) + "\"");
  };
  size_t i = 0;
  auto scan_int = [&](bool allow_sign) -> std::string {
    std::string out;
    if (allow_sign && i < s.size() && s[i] == '-') out += s[i++];
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    if (i == start) fail();
    return out;
  };
  std::string num = scan_int(true);
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = scan_int(false);
  }
  if (i != s.size()) fail();
  mpz_class d(den);
  if (d == 0) throw ParseError("rational with zero denominator: \"" + std::string(s) + "\"");
  Rational q;
  q.v_ = make_canonical(mpz_class(num), d);
  return q;
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return out;
}

long Rational::floor_long() const {
  mpz_class f = floor();
  if (!f.fits_slong_p()) throw Error("floor out of range: " + str());
  return f.get_si();
}

std::string Rational::str() const {
  return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.v_ = -v_;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

Rational abs(const Rational& q) {
  return q.sign() < 0 ? -q : q;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace fano
