#pragma once

#include "fano/rational.hpp"

namespace fano {

/* Numerical invariants of a polarized weak log Fano pair (X, B; H):
   n = dim X, d = H^n >= 1, delta = B . H^{n-1} >= 0, and the coindex
   r = n + 1 - index, where index is the largest t with -(K_X + B) == t H. */
struct FanoInvariants {
  int n = 1;
  Rational d = 1;
  Rational delta = 0;
  Rational r = 0;

  Rational index() const { return Rational(n + 1) - r; }
  long coindex_floor() const { return r.floor_long(); }

  static FanoInvariants from_coindex(int n, const Rational& d, const Rational& delta,
                                     const Rational& r);
  static FanoInvariants from_index(int n, const Rational& d, const Rational& delta,
                                   const Rational& index);
};

enum class MemberClass { WeakLogFano, LogCY, WeakLogGeneralType };

const char* to_string(MemberClass c);

/* A dimension-j ladder member carries the adjoint coefficient
   index_j = j - r + 1; its sign classifies the member. */
MemberClass classify_member(int j, const Rational& r);

}  // namespace fano
