#include "fano/ladder.hpp"

#include <algorithm>

namespace fano {

MultiplicityBound multiplicity_bound(int n) {
  if (n < 3)
    throw HypothesisViolated("multiplicity bound requires n >= 3, got n = " + std::to_string(n));
  const Rational limit = Rational(1) + Rational(2) / Rational(n - 2);
  // strict inequality m < limit
  const long m_max = limit.is_integer() ? limit.floor_long() - 1 : limit.floor_long();
  return {static_cast<int>(m_max), m_max >= 2};
}

int bsl_dimension_bound(const Rational& r) {
  if (!(r > Rational(0) && r < Rational(4)))
    throw HypothesisViolated("base-locus bound requires coindex 0 < r < 4, got r = " + r.str());
  return r < Rational(3) ? 0 : 1;
}

LadderReport build_ladder(const HilbertModel& m) {
  const FanoInvariants& inv = m.inv;
  if (!(inv.r < Rational(4)))
    throw HypothesisViolated("the ladder requires coindex r < 4, got r = " + inv.r.str());
  if (!(inv.index() > Rational(0)))
    throw HypothesisViolated("the ladder requires index n - r + 1 > 0, got index = " +
                             inv.index().str());

  LadderReport rep;
  rep.c_theorem = inv.coindex_floor() - 1;
  rep.c = static_cast<int>(std::max<long>(rep.c_theorem, 1));
  rep.bsl_dim_bound = inv.r > Rational(0) ? bsl_dimension_bound(inv.r) : 0;
  if (inv.n >= 3) rep.mult = multiplicity_bound(inv.n);

  for (int j = inv.n; j >= rep.c; --j) {
    LadderRung rung;
    rung.j = j;
    rung.index_j = Rational(j) - inv.r + Rational(1);
    rung.cls = classify_member(j, inv.r);
    rung.dim_bound = Rational(j - 1);
    if (rung.cls == MemberClass::WeakLogFano) {
      const HilbertModel rung_model{FanoInvariants::from_coindex(j, inv.d, inv.delta, inv.r),
                                    m.p_n2, m.p_n3};
      rung.h0 = build(rung_model).h0;
    }
    rep.rungs.push_back(std::move(rung));
  }
  return rep;
}

std::vector<Rational> h0_sequence(const HilbertModel& m) {
  std::vector<Rational> out;
  for (const LadderRung& rung : build_ladder(m).rungs)
    if (rung.h0.has_value()) out.push_back(*rung.h0);
  return out;
}

}  // namespace fano
