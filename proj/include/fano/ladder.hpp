#pragma once

#include <optional>
#include <vector>

#include "fano/hilbert.hpp"

namespace fano {

/* One member X_j of the ladder X_n > X_{n-1} > ... ; the adjoint
   coefficient index_j = j - r + 1 drops by one per restriction and its
   sign classifies the member.  h0 is present at weak log Fano rungs,
   where the closed forms apply. */
struct LadderRung {
  int j = 0;
  Rational index_j;
  MemberClass cls = MemberClass::WeakLogFano;
  std::optional<Rational> h0;
  Rational dim_bound;  // dim|H| >= j - 1 on the rung
};

struct MultiplicityBound {
  int m_max = 1;                              // largest integer m with m < 1 + 2/(n-2)
  bool canonical_double_point_possible = false;  // n = 3 only: m = 2 can occur
};

/* requires n >= 3 */
MultiplicityBound multiplicity_bound(int n);

/* dimension bound for the base locus of |H|: 0 when 0 < r < 3 (at most a
   finite set), 1 when 3 <= r < 4; requires 0 < r < 4 */
int bsl_dimension_bound(const Rational& r);

struct LadderReport {
  std::vector<LadderRung> rungs;  // j = n down to max(floor(r) - 1, 1)
  int c = 1;                      // lowest rung dimension (clamped at curves)
  long c_theorem = 0;             // floor(r) - 1, may be <= 0
  int bsl_dim_bound = 0;
  std::optional<MultiplicityBound> mult;  // absent below n = 3
};

/* requires r < 4 and positive index; d, delta, r and the auxiliary
   plurigenera are carried unchanged down the rungs */
LadderReport build_ladder(const HilbertModel& m);

/* h0 of the weak log Fano rungs, top down; consecutive values drop by
   exactly 1 */
std::vector<Rational> h0_sequence(const HilbertModel& m);

}  // namespace fano
