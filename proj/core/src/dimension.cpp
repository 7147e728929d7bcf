#include "dualknot/dimension.hpp"

#include <nlohmann/json.hpp>

namespace dualknot {

Parity parity_of(const Int& n) {
  return n % 2 == 0 ? Parity::even : Parity::odd;
}

DimValue DimValue::exact(Int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  return DimValue{Kind::exact, std::move(n), 0, Parity::unknown};
}

DimValue DimValue::pair(Int low, Int high) {
  if (low < 0 || high != low + 2)
    throw std::invalid_argument("dimension pair must be {a, a+2} with a >= 0");
  return DimValue{Kind::pair, std::move(low), std::move(high),
                  Parity::unknown};
}

DimValue DimValue::interval(Int lo, Int hi, Parity p) {
  if (lo < 0 || lo > hi)
    throw std::invalid_argument("bad dimension interval");
  return DimValue{Kind::interval, std::move(lo), std::move(hi), p};
}

const Int& DimValue::value() const {
  if (kind != Kind::exact)
    throw std::logic_error("value() on a non-exact DimValue " + str());
  return a;
}

bool DimValue::contains(const Int& n) const {
  switch (kind) {
    case Kind::exact:
      return n == a;
    case Kind::pair:
      return n == a || n == b;
    case Kind::interval:
      return n >= a && n <= b &&
             (parity == Parity::unknown || parity_of(n) == parity);
  }
  return false;
}

nlohmann::json DimValue::to_json() const {
  switch (kind) {
    case Kind::exact:
      return {{"kind", "exact"}, {"n", int_to_json(a)}};
    case Kind::pair:
      return {{"kind", "pair"}, {"a", int_to_json(a)}, {"b", int_to_json(b)}};
    case Kind::interval:
      return {{"kind", "interval"},
              {"lo", int_to_json(a)},
              {"hi", int_to_json(b)},
              {"parity", parity == Parity::even  ? "even"
                         : parity == Parity::odd ? "odd"
                                                 : "unknown"}};
  }
  return nullptr;
}

std::string DimValue::str() const { return to_json().dump(); }

namespace {

Int framed_formula(const Slope& r, const InvariantPair& inv) {
  return r.den() * inv.R + abs_int(r.num() - r.den() * inv.M);
}

bool is_exceptional_slope(const Slope& r, const InvariantPair& inv) {
  return r.is_integral() && r.num() == inv.M;
}

void require_finite(const Slope& r, const char* op) {
  if (r.is_infinite())
    throw std::invalid_argument(std::string(op) + ": infinite slope");
}

}  // namespace

DimValue dim_framed(const Slope& r, const InvariantPair& inv,
                    const FieldSpec& field, BundleClass bundle) {
  require_finite(r, "dim_framed");
  if (is_exceptional_slope(r, inv) && inv.M % 2 == 0) {
    if (field.characteristic == 2 && field.sgmme)
      return DimValue::exact(bundle == BundleClass::zero ? inv.R + 2 : inv.R);
    return DimValue::pair(inv.R, inv.R + 2);
  }
  return DimValue::exact(framed_formula(r, inv));
}

DimValue dim_dual_unreduced(const Slope& r, const InvariantPair& inv,
                            const FieldSpec& field,
                            std::optional<BundleClass>) {
  require_finite(r, "dim_dual_unreduced");
  if (is_exceptional_slope(r, inv)) {
    if (field.characteristic == 2) return DimValue::exact(2 * inv.R);
    return DimValue::pair(2 * inv.R, 2 * inv.R + 2);
  }
  return DimValue::exact(2 * framed_formula(r, inv));
}

Int dim_dual_reduced_f2(const Slope& r, const InvariantPair& inv) {
  require_finite(r, "dim_dual_reduced_f2");
  if (is_exceptional_slope(r, inv)) return inv.R;
  return framed_formula(r, inv);
}

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.checked && !c.pass) return false;
  return true;
}

RelationReport validate_relations(const DimValue& d_sharp,
                                  const DimValue& d_natural,
                                  const FieldSpec& field) {
  const Int& s = d_sharp.value();
  const Int& n = d_natural.value();
  RelationReport rep;
  rep.checks.push_back(
      {"char2_doubling", field.characteristic == 2, s == 2 * n});
  rep.checks.push_back({"skein_bound", true, s <= 2 * n});
  rep.checks.push_back({"unreduced_even", true, s % 2 == 0});
  rep.checks.push_back(
      {"char0_lower_bound", field.characteristic == 0, s >= n});
  return rep;
}

bool euler_parity_check(const Slope& r, const InvariantPair& inv) {
  require_finite(r, "euler_parity_check");
  return (framed_formula(r, inv) - r.num()) % 2 == 0;
}

}  // namespace dualknot
