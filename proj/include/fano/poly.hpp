#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

/* Dense univariate polynomial over Rational.  Coefficients are stored in
   ascending degree with trailing zeros stripped, so equal polynomials have
   identical coefficient vectors and the zero polynomial is the empty
   vector (its degree is "none"). */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /* leading * prod_i (t - roots[i]) */
  static Poly from_roots(const Rational& leading, const std::vector<Rational>& roots);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  Rational coeff(int k) const;  // zero beyond the stored degree
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;     // coefficient of t^degree; zero for the zero polynomial

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const char* var = "t") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

/* exact quotient of p by (t - root); throws RootMismatch unless p(root) = 0 */
Poly divide_linear(const Poly& p, const Rational& root);

/* p(a t + b) */
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

/* chi(O_{P^n}(t + shift)) = C(t + shift + n, n), the degree-n polynomial
   prod_{k=1..n} (t + shift + k) / n! */
Poly binomial_hilbert(int n, long shift);

/* chi of the twisting sheaf on a smooth n-dimensional quadric:
   C(t+n+1, n+1) - C(t+n-1, n+1) */
Poly quadric_hilbert(int n);

}  // namespace fano
