#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualknot/knot.hpp"
#include "dualknot/slope.hpp"
#include "dualknot/surgery.hpp"

#include <nlohmann/json_fwd.hpp>

namespace dualknot {

enum class Parity { even, odd, unknown };

Parity parity_of(const Int& n);

/// The codomain of every dimension computation: an exact value, an honest
/// two-element ambiguity {a, a+2}, or a parity-constrained interval. Pair
/// values are never silently collapsed; callers must branch or carry them.
struct DimValue {
  enum class Kind { exact, pair, interval };

  Kind kind;
  Int a;            // exact value, pair low, or interval lo
  Int b;            // pair high or interval hi
  Parity parity = Parity::unknown;  // interval only

  static DimValue exact(Int n);
  static DimValue pair(Int low, Int high);  // requires high == low + 2
  static DimValue interval(Int lo, Int hi, Parity p);

  bool is_exact() const { return kind == Kind::exact; }
  const Int& value() const;  // exact only
  bool contains(const Int& n) const;

  nlohmann::json to_json() const;
  std::string str() const;

  friend bool operator==(const DimValue& x, const DimValue& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b &&
           x.parity == y.parity;
  }
};

/// dim I^sharp of p/q-surgery: exact qR + |p - qM| away from the
/// exceptional slope. At r = M/1 with M even the two bundle classes
/// jointly realize {R, R+2}; over characteristic 2 with the sgmme flag the
/// ambiguity resolves (bundle zero -> R+2, bundle mu -> R), otherwise the
/// pair is returned as-is. M odd at r = M/1 is not exceptional.
DimValue dim_framed(const Slope& r, const InvariantPair& inv,
                    const FieldSpec& field,
                    BundleClass bundle = BundleClass::zero);

/// Unreduced dual-knot dimension: exact 2qR + 2|p - qM| for r != M/1;
/// pair(2R, 2R+2) at r = M/1 over a generic field, exact 2R over
/// characteristic 2. Independent of the bundle class; a supplied bundle
/// argument is accepted and ignored.
DimValue dim_dual_unreduced(const Slope& r, const InvariantPair& inv,
                            const FieldSpec& field,
                            std::optional<BundleClass> bundle = std::nullopt);

/// Reduced dual-knot dimension over F_2: qR + |p - qM| for r != M/1, R at
/// r = M/1 (half the resolved unreduced value).
Int dim_dual_reduced_f2(const Slope& r, const InvariantPair& inv);

/// One consistency relation between dim I^sharp and dim I^natural.
struct RelationCheck {
  std::string name;
  bool checked;
  bool pass;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

/// Checks the doubling identity (char 2), the skein-triangle bound and
/// evenness (any field), and the spectral-sequence bound (char 0) on a
/// pair of exact values.
RelationReport validate_relations(const DimValue& d_sharp,
                                  const DimValue& d_natural,
                                  const FieldSpec& field);

/// qR + |p - qM| must have the parity of p (the Euler characteristic of
/// I^sharp equals |H_1| = p); holds for every pair with R = |M| + 2h.
bool euler_parity_check(const Slope& r, const InvariantPair& inv);

}  // namespace dualknot
