#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualknot/dimension.hpp"
#include "dualknot/knot.hpp"
#include "dualknot/slope.hpp"

#include <nlohmann/json_fwd.hpp>

namespace dualknot {

/// True iff p = l^k for an odd prime l and k >= 1. In particular 1 is not
/// a prime power and even numbers never qualify.
bool is_odd_prime_power(const Int& p);

struct ChecklistItem {
  std::string name;
  bool pass;
  std::string detail;
};

/// Obstruction verdicts are one-sided: NotAbelian certifies that every
/// hypothesis of the cited theorem holds; Inconclusive never asserts
/// SU(2)-abelianness.
struct Verdict {
  enum class Outcome { NotAbelian, Inconclusive };

  Outcome outcome;
  std::string theorem;  // "traceless" or "branched"
  Slope slope = Slope(0L, 1L);
  std::optional<Slope> branched_slope;
  std::vector<ChecklistItem> checklist;

  bool not_abelian() const { return outcome == Outcome::NotAbelian; }
  nlohmann::json to_json() const;
};

/// Obstruction for p/q-traceless representations of the knot complement:
/// NotAbelian iff the knot is not U/T_{2,3}/T_{2,5}, 0 < p/q < 6 (< 8
/// under the sgmme flag), p is an odd prime power, and p does not divide
/// det(K). Requires a finite slope with p > 0.
Verdict verdict_traceless(const KnotRecord& k, const Slope& r, bool sgmme);

/// Obstruction for the surgered double branched cover: the verdict is
/// about the manifold surgered at branched_surgery_slope(r) = p/2q and
/// requires det(K) = 1 in place of the divisibility hypothesis.
Verdict verdict_branched(const KnotRecord& k, const Slope& r, bool sgmme);

/// (qR + |p - qM|) - p: a positive gap contradicts the Floer-simple
/// conclusion of the representation-variety lemma at this slope.
Int simple_knot_gap(const Slope& r, const InvariantPair& inv);

/// The exact set of positive slopes where simple_knot_gap <= 0.
struct ObstructionWindow {
  enum class Kind { empty, ray };

  Kind kind;
  Slope min = Slope(0L, 1L);  // ray [min, +inf); meaningful for kind ray
  std::string derivation;

  bool contains(const Slope& r) const;
  nlohmann::json to_json() const;
};

ObstructionWindow obstruction_window(const InvariantPair& inv);

}  // namespace dualknot
