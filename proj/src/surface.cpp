#include "fano/surface.hpp"

namespace fano {

Rational ns_intersect(const RuledNS& s, const NSClass& a, const NSClass& b) {
  return Rational(-s.e) * a.x * b.x + a.x * b.y + b.x * a.y;
}

NSClass canonical_class(const RuledNS& s) {
  return NSClass{Rational(-2), Rational(2 * s.g - 2 - s.e)};
}

Rational lemma42_defect(const Rational& h2, const Rational& hk, const Rational& chi) {
  return chi + (h2 + hk) / Rational(2);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedPositive: return "certified-positive";
    case Verdict::CertifiedByTheorem: return "certified-by-theorem";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::Case1: return "case1";
    case SurfaceCase::Case2a: return "case2a";
    case SurfaceCase::Case2b: return "case2b";
    case SurfaceCase::Case2b_a1: return "case2b-a1";
  }
  return "?";
}

NVCertificate prop41_case1(const Rational& dh, const Rational& db, const Rational& chi) {
  if (chi < Rational(0))
    throw PreconditionViolated("case 1 requires chi(O_X) >= 0, got chi = " + chi.str());
  if (dh < Rational(0))
    throw PreconditionViolated("case 1 requires D.H >= 0, got D.H = " + dh.str());
  if (db < Rational(0))
    throw PreconditionViolated("case 1 requires D.B >= 0, got D.B = " + db.str());
  if (dh.is_zero()) return {Verdict::CertifiedPositive, Rational(1), SurfaceCase::Case1};
  // h^0(D) = D(H+B)/2 + chi, positive whenever D.H > 0
  return {Verdict::CertifiedPositive, (dh + db) / Rational(2) + chi, SurfaceCase::Case1};
}

NVCertificate prop41_case2a(const Rational& h2, const Rational& a) {
  if (a <= Rational(1) || h2 <= Rational(0))
    return {Verdict::Inconclusive, std::nullopt, SurfaceCase::Case2a};
  return {Verdict::CertifiedPositive, (a - Rational(1)) / (Rational(2) * a * a) * h2,
          SurfaceCase::Case2a};
}

NVCertificate prop41_case2b(const Rational& d2, const Rational& db, const Rational& a,
                            const Rational& c) {
  if (c <= Rational(1, 2))
    throw PreconditionViolated("case 2b requires c > 1/2 (H == cD), got c = " + c.str());
  if (!a.is_integer() || a < Rational(1))
    throw PreconditionViolated("case 2b requires the fibre degree a = D.F to be a positive "
                               "integer, got a = " + a.str());
  if (d2 < Rational(0))
    throw PreconditionViolated("case 2b requires D^2 >= 0, got D^2 = " + d2.str());
  const Rational bound = (a + Rational(1)) / (Rational(2) * a) * ((c - Rational(1) / a) * d2 + db);
  if (bound > Rational(0)) return {Verdict::CertifiedPositive, bound, SurfaceCase::Case2b};
  if (a == Rational(1))
    return {Verdict::CertifiedByTheorem, std::nullopt, SurfaceCase::Case2b_a1};
  return {Verdict::Inconclusive, std::nullopt, SurfaceCase::Case2b};
}

bool ne_cone_member_e_minus2(const NSClass& cls) {
  return cls.x + cls.y >= Rational(0);
}

Step2Numerology step2_numerology(long g, long e, const Rational& b) {
  Step2Numerology out;
  out.dk = Rational(e) - Rational(2) * b + Rational(2 * (g - 1));
  out.chi_d = Rational(-e) + b + Rational(2 * (1 - g));
  out.consistent = out.dk.is_zero() && out.chi_d.is_zero();
  return out;
}

}  // namespace fano
