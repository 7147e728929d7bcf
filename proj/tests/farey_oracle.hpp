#pragma once

// Brute-force triad-fan oracle, independent of the extended-gcd route the
// library takes: enumerate every candidate (p1, q1) and keep the pairs
// satisfying all conditions of the resolution lemma verbatim.

#include <optional>
#include <vector>

#include "dualknot/slope.hpp"

namespace dualknot::testing {

struct BruteFan {
  std::vector<TriadFan> solutions;  // should always be exactly one
};

inline BruteFan brute_force_fan(const Slope& r0) {
  const Int& p0 = r0.num();
  const Int& q0 = r0.den();
  const Int k = floor_slope(r0);
  BruteFan out;

  for (Int q1 = 0; q1 <= q0; ++q1) {
    Int p_lo = k * q1 - 2, p_hi = (k + 1) * q1 + 2;
    if (p_lo > p_hi) std::swap(p_lo, p_hi);
    for (Int p1 = p_lo; p1 <= p_hi; ++p1) {
      Int p2 = p0 - p1, q2 = q0 - q1;
      // Displayed determinant identities.
      if (p1 * q0 - p0 * q1 != 1) continue;
      if (p0 * q2 - p2 * q0 != 1) continue;
      if (p1 * q2 - p2 * q1 != 1) continue;
      // Sign agreement for nonzero entries.
      if (p1 != 0 && sgn(p1) != sgn(p0)) continue;
      if (p2 != 0 && sgn(p2) != sgn(p0)) continue;
      if (q1 < 0 || q2 < 0) continue;
      if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
      Slope r1(p1, q1), r2(p2, q2);
      // r1, r2 in [k, k+1] and r1 > r0 > r2.
      Slope lo = Slope::integer(k), hi = Slope::integer(k + 1);
      if (r1 < lo || r1 > hi || r2 < lo || r2 > hi) continue;
      if (!(r1 > r0 && r0 > r2)) continue;
      TriadFan fan{r0, r1, r2, mediant(r0, r1), Slope(0L, 1L)};
      fan.r4 = mediant(r0, fan.r3);
      out.solutions.push_back(fan);
    }
  }
  return out;
}

inline bool fans_equal(const TriadFan& a, const TriadFan& b) {
  return a.r0 == b.r0 && a.r1 == b.r1 && a.r2 == b.r2 && a.r3 == b.r3 &&
         a.r4 == b.r4;
}

}  // namespace dualknot::testing
