#include "fano/invariants.hpp"

namespace fano {

FanoInvariants FanoInvariants::from_coindex(int n, const Rational& d, const Rational& delta,
                                            const Rational& r) {
  if (n < 1) throw PreconditionViolated("dimension must satisfy n >= 1");
  if (d < Rational(1)) throw InvalidDegree("degree must satisfy d >= 1, got d = " + d.str());
  if (delta < Rational(0))
    throw InvalidDelta("boundary degree must satisfy delta >= 0, got delta = " + delta.str());
  const Rational ind = Rational(n + 1) - r;
  if (!(ind > Rational(0)) || ind > Rational(n + 1))
    throw InvalidIndex("numerical index must satisfy 0 < index <= n+1, got index = " + ind.str() +
                       " (coindex r = " + r.str() + ")");
  FanoInvariants inv;
  inv.n = n;
  inv.d = d;
  inv.delta = delta;
  inv.r = r;
  return inv;
}

FanoInvariants FanoInvariants::from_index(int n, const Rational& d, const Rational& delta,
                                          const Rational& index) {
  return from_coindex(n, d, delta, Rational(n + 1) - index);
}

const char* to_string(MemberClass c) {
  switch (c) {
    case MemberClass::WeakLogFano: return "weak-log-fano";
    case MemberClass::LogCY: return "log-cy";
    case MemberClass::WeakLogGeneralType: return "weak-log-general-type";
  }
  return "?";
}

MemberClass classify_member(int j, const Rational& r) {
  const Rational coeff = Rational(j) - r + Rational(1);  // index_j
  if (coeff > Rational(0)) return MemberClass::WeakLogFano;
  if (coeff.is_zero()) return MemberClass::LogCY;
  return MemberClass::WeakLogGeneralType;
}

}  // namespace fano
