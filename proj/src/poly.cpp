#include "fano/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
  return Poly({c});
}

Poly Poly::from_roots(const Rational& leading, const std::vector<Rational>& roots) {
  Poly out = constant(leading);
  for (const Rational& r : roots) out *= Poly({-r, 1});
  return out;
}

std::optional<int> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return 0;
  return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const {
  return c_.empty() ? Rational(0) : c_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (Rational& c : c_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rational& c : out.c_) c = -c;
  return out;
}

std::string Poly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (a == Rational(1));
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << " ";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly divide_linear(const Poly& p, const Rational& root) {
  if (!(p(root) == Rational(0)))
    throw RootMismatch("cannot divide by (t - " + root.str() + "): p(" + root.str() +
                       ") = " + p(root).str() + " is nonzero");
  if (p.is_zero()) return Poly();
  const auto& c = p.coeffs();
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;  // synthetic division from the top coefficient down
  for (size_t k = c.size(); k-- > 1;) {
    carry = c[k] + carry * root;
    q[k - 1] = carry;
  }
  return Poly(std::move(q));
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
  const Poly inner({b, a});
  Poly acc;
  const auto& c = p.coeffs();
  for (size_t k = c.size(); k-- > 0;) acc = acc * inner + Poly::constant(c[k]);
  return acc;
}

Poly binomial_hilbert(int n, long shift) {
  if (n < 0) throw PreconditionViolated("binomial_hilbert requires n >= 0");
  std::vector<Rational> roots;
  roots.reserve(static_cast<size_t>(n));
  for (long k = 1; k <= n; ++k) roots.push_back(Rational(-shift - k));
  return Poly::from_roots(Rational(mpz_class(1), factorial(static_cast<unsigned long>(n))), roots);
}

Poly quadric_hilbert(int n) {
  if (n < 1) throw PreconditionViolated("quadric_hilbert requires n >= 1");
  return binomial_hilbert(n + 1, 0) - binomial_hilbert(n + 1, -2);
}

}  // namespace fano
