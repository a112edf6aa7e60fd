#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/invariants.hpp"
#include "fano/poly.hpp"

namespace fano {

/* Input for the Hilbert-polynomial constructors.  The auxiliary
   plurigenera p_j = h^0(K_X + jH) at j = n-2 and j = n-3 are geometric
   unknowns the invariants do not determine; they are caller inputs,
   required only by the cases that consume them. */
struct HilbertModel {
  FanoInvariants inv;
  std::optional<long> p_n2;  // h^0(K_X + (n-2)H), needed when floor(r) >= 3
  std::optional<long> p_n3;  // h^0(K_X + (n-3)H), needed when floor(r) = 4
};

enum class CaseTag { Curve, DelPezzo, CaseI, CaseII, CaseIII };
const char* to_string(CaseTag t);

struct HilbertResult {
  Poly p;        // p(t) = chi(O_X(tH))
  Rational h0;   // = p(1) = h^0(H)
  CaseTag case_tag;
};

/* positive integers k such that p(-k) = 0 is forced by vanishing,
   i.e. k = 1 .. n - floor(r); empty when n <= floor(r) */
std::vector<long> forced_roots(const FanoInvariants& inv);

/* n <= 2: the curve (h0 = d+1) and del Pezzo (p = (d/2)t^2 + ((3-r)d+delta)/2 t + 1)
   closed forms */
HilbertResult h0_lowdim(const FanoInvariants& inv);

/* n >= 3, floor(r) <= 2:
   p = d/n! (t+1)...(t+n-2)(t^2 + a t + n(n-1)/d),  h0 = n-1 + (d(4-r)+delta)/2 */
HilbertResult build_case_i(const HilbertModel& m);

/* n >= 3, floor(r) = 3; consumes p_n2:
   p = d/n! (t+1)...(t+n-3)(t^3 + a t^2 + b t + n(n-1)(n-2)/d),
   h0 = n-1 + p_{n-2} + (d(4-r)+delta)/2 */
HilbertResult build_case_ii(const HilbertModel& m);

/* n >= 4, floor(r) = 4; consumes p_n2 and p_n3:
   p = d/n! (t+1)...(t+n-4)(t^4 + a t^3 + b t^2 + c t + n(n-1)(n-2)(n-3)/d),
   h0 = (1 - p_{n-3})(n-1) + p_{n-2} + (d(4-r)+delta)/2 */
HilbertResult build_case_iii(const HilbertModel& m);

/* dispatch on n and floor(r) */
HilbertResult build(const HilbertModel& m);

/* p_j = (-1)^n p(-j) = h^0(K_X + jH) */
Rational plurigenus(const HilbertResult& res, const FanoInvariants& inv, long j);

/* Serre-style symmetry p(t) = (-1)^n p(-t - index), checked coefficientwise.
   Requires delta = 0 and integral index. */
bool duality_check(const HilbertResult& res, const FanoInvariants& inv);

/* residual quartic of the self-dual coindex-4 polynomial (n even):
   t^4 + 2(n-3)t^3 + alpha t^2 + [(n-3)alpha - (n-3)^3] t + n(n-1)(n-2)(n-3)/d */
Poly symmetric_quartic(int n, const Rational& d, const Rational& alpha);

/* the 4-fold family p_k(t) = d/4! t(t+1)(t-1)(t+2) + (k/2) t(t+1) + 1 */
Poly pk_poly(const Rational& d, long k);

/* Nonvanishing from forced zeros alone: true iff p is not identically zero,
   p(-k) = 0 for k = 1..dim-1, p(0) = 1 and p(1) > 0 (all exact).  A nonzero
   p of degree < dim-1 cannot carry all the forced zeros, so the degenerate
   branch reports false automatically.  "dim" is the dimension of the member
   carrying p (not its degree, which may be lower). */
bool nonvanishing_by_forced_roots(const Poly& p, int dim);

struct IdentityOptions {
  int n_min = 3;
  int n_max = 8;
  int samples = 5;         // grid points per formal variable; >= 3 required
  Rational perturb_a = 0;  // negative control: offset added to the solved coefficient a
};

struct IdentityFailure {
  int n;
  CaseTag case_tag;
  std::string check;   // which identity failed
  std::string sample;  // the offending (d, delta, r, ...) tuple
};

struct IdentityReport {
  long checked = 0;
  std::vector<IdentityFailure> failures;
  bool all_passed() const { return failures.empty(); }
};

/* Certify the coefficient identities behind the three cases by exact
   evaluation on grids larger than the identities' per-variable degrees:
   (a) the t^{n-1} coefficient of the constructed p equals
       (index*d + delta) / (2 (n-1)!),
   (b) p(1) equals the case's closed-form h0,
   (c) the case-iii elimination identity
       (n-2)[b(n-2)-c] - (n-1)[b(n-3)-c] = b+c.
   Agreement on the grid is a proof: all identities are polynomial in the
   sampled variables (after clearing the d denominators) of per-variable
   degree <= 2, so any >= 3 distinct sample values per variable suffice. */
IdentityReport verify_identities(const IdentityOptions& opt);

}  // namespace fano
