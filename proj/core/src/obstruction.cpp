#include "dualknot/obstruction.hpp"

#include <nlohmann/json.hpp>

namespace dualknot {

bool is_odd_prime_power(const Int& p) {
  if (p < 3 || p % 2 == 0) return false;
  Int rest = p;
  Int base = 0;
  for (Int d = 3; d * d <= rest; d += 2) {
    if (rest % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) return true;  // p itself is an odd prime
  while (rest % base == 0) rest /= base;
  return rest == 1;
}

namespace {

Verdict run_checklist(const KnotRecord& k, const Slope& r, bool sgmme,
                      bool branched) {
  if (r.is_infinite() || r.num() <= 0)
    throw std::invalid_argument(
        "verdict: slope must be finite and positive, got " + r.str());

  Verdict v;
  v.theorem = branched ? "branched" : "traceless";
  v.slope = r;
  auto check = [&](std::string name, bool pass, std::string detail) {
    v.checklist.push_back({std::move(name), pass, std::move(detail)});
  };

  check("not_excluded", !k.exclusion_flag,
        k.exclusion_flag ? "knot is one of U, T_{2,3}, T_{2,5}"
                         : "knot is not U, T_{2,3}, T_{2,5}");

  const int bound = sgmme ? 8 : 6;
  bool in_window = r.num() < bound * r.den();
  check("window", in_window,
        r.str() + (in_window ? " lies in" : " outside") + " (0," +
            std::to_string(bound) + ")");

  bool pp = is_odd_prime_power(r.num());
  check("odd_prime_power", pp,
        "p = " + r.num().get_str() + (pp ? " is" : " is not") +
            " an odd prime power");

  Int det = knot_determinant(k);
  if (branched) {
    check("det_one", det == 1, "det(K) = " + det.get_str());
    if (r.num() % 2 != 0) v.branched_slope = branched_surgery_slope(r);
  } else {
    bool coprime = det % r.num() != 0;
    check("det_not_divisible", coprime,
          "p = " + r.num().get_str() + (coprime ? " does not divide" : " divides") +
              " det(K) = " + det.get_str());
  }

  bool all = true;
  for (const auto& item : v.checklist) all = all && item.pass;
  v.outcome = all ? Verdict::Outcome::NotAbelian : Verdict::Outcome::Inconclusive;
  return v;
}

}  // namespace

Verdict verdict_traceless(const KnotRecord& k, const Slope& r, bool sgmme) {
  return run_checklist(k, r, sgmme, false);
}

Verdict verdict_branched(const KnotRecord& k, const Slope& r, bool sgmme) {
  return run_checklist(k, r, sgmme, true);
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checklist)
    items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  nlohmann::json j = {
      {"outcome", not_abelian() ? "NotAbelian" : "Inconclusive"},
      {"theorem", theorem},
      {"slope", slope.str()},
      {"checklist", std::move(items)}};
  if (branched_slope) j["branched_slope"] = branched_slope->str();
  return j;
}

Int simple_knot_gap(const Slope& r, const InvariantPair& inv) {
  if (r.is_infinite() || r.num() <= 0)
    throw std::invalid_argument("simple_knot_gap: need a finite positive slope");
  return r.den() * inv.R + abs_int(r.num() - r.den() * inv.M) - r.num();
}

bool ObstructionWindow::contains(const Slope& r) const {
  if (r.is_infinite() || r.num() <= 0) return false;
  if (kind == Kind::empty) return false;
  return r >= min;
}

nlohmann::json ObstructionWindow::to_json() const {
  if (kind == Kind::empty)
    return {{"kind", "empty"}, {"derivation", derivation}};
  return {{"kind", "ray"}, {"min", min.str()}, {"derivation", derivation}};
}

ObstructionWindow obstruction_window(const InvariantPair& inv) {
  // gap(p/q) = q(R - M) for p/q >= M and q(R + M) - 2p for p/q < M.
  if (inv.R > inv.M)
    return {ObstructionWindow::Kind::empty, Slope(0L, 1L),
            "R > M: gap = q(R-M) > 0 above M and q(R+M) - 2p >= "
            "q(R-M) > 0 below, so no positive slope has gap <= 0"};
  // Valid pairs have R >= |M|, so the remaining case is R = M >= 0.
  return {ObstructionWindow::Kind::ray, Slope(inv.M, 1),
          "R = M: gap = q(R-M) = 0 for p/q >= M and q(R+M) - 2p = "
          "2(qM - p) > 0 below M"};
}

}  // namespace dualknot
