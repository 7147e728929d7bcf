#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dualknot/dimension.hpp"

namespace dualknot {

/// Interval state of one dimension variable. Bounds only shrink; a parity,
/// once set, never changes.
struct Interval {
  Int lo, hi;
  Parity parity = Parity::unknown;
};

struct DimVar {
  std::string id;
  Interval iv;
};

/// Exact-triangle constraint on three variables: each dimension is at most
/// the sum of the other two, and the three dimensions have even sum.
struct Triangle {
  int a, b, c;
  std::string label;
};

/// {value(x), value(y)} = {low, low + 2}: the two bundle classes of an
/// exceptional surgery jointly realize both values, in one of two orders.
struct AmbiguityCouple {
  int x, y;
  Int low;
};

/// value(var) = residue (mod 4). Encodes the Euler-characteristic parity
/// argument over characteristic 2: the unreduced dual dimension is twice a
/// number with the parity of the surgery numerator.
struct Mod4Constraint {
  int var;
  int residue;
};

struct ConstraintSystem {
  std::vector<DimVar> vars;
  std::vector<Triangle> triangles;
  std::vector<std::pair<int, DimValue>> pins;
  std::vector<std::pair<int, int>> equalities;
  std::vector<AmbiguityCouple> couples;
  std::vector<Mod4Constraint> mod4;

  int target = -1;     // dual-knot dimension, bundle class zero
  int target_mu = -1;  // dual-knot dimension, bundle class mu

  // Provenance, filled by build_system.
  bool mirrored = false;
  Slope slope_used = Slope(0L, 1L);

  int add_var(std::string id, Interval iv);
  /// Intersects the variable's interval with an exact or pair pin and
  /// records it. Pair pins are resolved by branch-and-union in propagate.
  void pin(int var, const DimValue& value);
  /// Hook for extra user-specified exact triangles beyond the two the
  /// case analysis ships: companions are pinned to the given values.
  void add_pinned_triangle(int var, const DimValue& first,
                           const DimValue& second, std::string label);
};

/// One narrowing step of the propagation trace.
struct PropagationStep {
  std::string rule;  // triangle-upper, triangle-lower, parity, couple, ...
  std::string var;
  std::string detail;
  Int old_lo, old_hi, new_lo, new_hi;
};

struct PropagationResult {
  std::map<std::string, DimValue> values;
  std::vector<PropagationStep> steps;
};

class InfeasibleSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the two exact-triangle constraint systems for the dual-knot
/// dimension at r0: the triad fan of r0 (integer fan at integral slopes)
/// pins the four companion surgery dimensions, the infinite slope pins to
/// dim I^sharp(S^3) = 1, the exceptional slope M contributes an ambiguity
/// couple, and the two bundle-class targets are identified by flip
/// symmetry. Slopes below M are mirror-reduced first.
ConstraintSystem build_system(const Slope& r0, const InvariantPair& inv,
                              const FieldSpec& field);

/// Interval narrowing to a fixed point. Ambiguity couples branch the
/// search; branch results are unioned. Throws InfeasibleSystem when every
/// branch ends with an empty interval.
PropagationResult propagate(const ConstraintSystem& sys);

enum class CertifyOutcome { Match, Consistent, Mismatch };

const char* to_string(CertifyOutcome o);

struct ProofReport {
  CertifyOutcome outcome;
  DimValue propagated;
  DimValue closed_form;
  bool mirrored = false;
  Slope slope_used = Slope(0L, 1L);
  std::vector<PropagationStep> steps;

  /// Line-oriented human-readable trace.
  std::string trace_text() const;
  nlohmann::json to_json() const;
};

/// Replays the case analysis at r0 and compares against the closed form:
/// Match when propagation pins the closed-form value uniquely, Consistent
/// when the closed form lies in a strictly larger propagated set,
/// Mismatch otherwise (including infeasible systems).
ProofReport certify(const Slope& r0, const InvariantPair& inv,
                    const FieldSpec& field);

}  // namespace dualknot
