#pragma once

#include <optional>

#include "fano/rational.hpp"

namespace fano {

/* Neron-Severi data of a P^1-bundle over a smooth curve of genus g:
   basis C0 (minimal section) and F (fibre), with C0^2 = -e, C0.F = 1,
   F^2 = 0. */
struct RuledNS {
  long g = 0;
  long e = 0;
};

/* x C0 + y F */
struct NSClass {
  Rational x;
  Rational y;
};

Rational ns_intersect(const RuledNS& s, const NSClass& a, const NSClass& b);

/* K = -2 C0 + (2g - 2 - e) F */
NSClass canonical_class(const RuledNS& s);

/* Slack of the ruled-surface Riemann-Roch bound chi(O_S) >= -H(H+K_S)/2,
   i.e. chi + (H^2 + H.K)/2.  Nonnegative certifies the bound; zero is the
   bundle equality case. */
Rational lemma42_defect(const Rational& h2, const Rational& hk, const Rational& chi);

enum class Verdict { CertifiedPositive, CertifiedByTheorem, Inconclusive };
enum class SurfaceCase { Case1, Case2a, Case2b, Case2b_a1 };
const char* to_string(Verdict v);
const char* to_string(SurfaceCase c);

/* Outcome of a nonvanishing certificate for h^0(D) on a log surface.
   CertifiedPositive always carries a strictly positive lower bound;
   CertifiedByTheorem marks the a = 1 branch proved without an effective
   bound; Inconclusive carries nothing. */
struct NVCertificate {
  Verdict verdict;
  std::optional<Rational> bound;
  SurfaceCase case_tag;
};

/* D.H = 0 branch: h^0(D) = 1; otherwise the exact value
   (D.H + D.B)/2 + chi(O_X). */
NVCertificate prop41_case1(const Rational& dh, const Rational& db, const Rational& chi);

/* H.F = a > 1 branch: h^0(D) >= (a-1)/(2a^2) * H^2 */
NVCertificate prop41_case2a(const Rational& h2, const Rational& a);

/* D.F = a branch with H == cD, c > 1/2:
   h^0(D) >= (a+1)/(2a) * ((c - 1/a) D^2 + D.B); when a = 1 and the bound
   degenerates, nonvanishing still holds by the bundle reduction. */
NVCertificate prop41_case2b(const Rational& d2, const Rational& db, const Rational& a,
                            const Rational& c);

/* membership in {x C0 + y F : x + y >= 0}, which contains the cone of
   effective curves when e = -2 */
bool ne_cone_member_e_minus2(const NSClass& cls);

/* The two vanishing constraints on D = C0 + bF when h^0(D) = 0:
   DK = e - 2b + 2(g-1) (from h^0(D) = -D.K) and
   chi_D = -e + b + 2(1-g) (Euler characteristic of the pushforward).
   Both zero forces b = 0, then g = 2, e = -2 under e >= -g, g >= 2. */
struct Step2Numerology {
  Rational dk;
  Rational chi_d;
  bool consistent;
};
Step2Numerology step2_numerology(long g, long e, const Rational& b);

}  // namespace fano
