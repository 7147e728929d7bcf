#include "dualknot/prover.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>

namespace dualknot {

int ConstraintSystem::add_var(std::string id, Interval iv) {
  vars.push_back({std::move(id), std::move(iv)});
  return static_cast<int>(vars.size()) - 1;
}

void ConstraintSystem::pin(int var, const DimValue& value) {
  pins.emplace_back(var, value);
  Interval& iv = vars[var].iv;
  switch (value.kind) {
    case DimValue::Kind::exact:
      iv = {value.a, value.a, parity_of(value.a)};
      break;
    case DimValue::Kind::pair:
      iv = {value.a, value.b, parity_of(value.a)};
      break;
    case DimValue::Kind::interval:
      iv = {value.a, value.b, value.parity};
      break;
  }
}

void ConstraintSystem::add_pinned_triangle(int var, const DimValue& first,
                                           const DimValue& second,
                                           std::string label) {
  int x = add_var(label + ":a", {0, 0});
  int y = add_var(label + ":b", {0, 0});
  pin(x, first);
  pin(y, second);
  triangles.push_back({var, x, y, std::move(label)});
}

namespace {

int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }

struct Narrower {
  const ConstraintSystem& sys;
  std::vector<Interval> iv;
  std::vector<PropagationStep>* steps;
  std::string branch_tag;
  bool infeasible = false;
  bool changed = false;

  void record(const char* rule, int var, const Interval& before,
              const std::string& detail) {
    changed = true;
    if (steps)
      steps->push_back({rule, sys.vars[var].id, branch_tag + detail,
                        before.lo, before.hi, iv[var].lo, iv[var].hi});
  }

  void set_lo(int var, const Int& lo, const char* rule,
              const std::string& detail) {
    if (lo <= iv[var].lo) return;
    Interval before = iv[var];
    iv[var].lo = lo;
    record(rule, var, before, detail);
  }

  void set_hi(int var, const Int& hi, const char* rule,
              const std::string& detail) {
    if (hi >= iv[var].hi) return;
    Interval before = iv[var];
    iv[var].hi = hi;
    record(rule, var, before, detail);
  }

  void set_parity(int var, Parity p, const char* rule,
                  const std::string& detail) {
    if (p == Parity::unknown) return;
    if (iv[var].parity == p) return;
    if (iv[var].parity != Parity::unknown) {
      infeasible = true;  // a parity, once set, never changes
      return;
    }
    Interval before = iv[var];
    iv[var].parity = p;
    record(rule, var, before, detail);
    snap_parity(var);
  }

  void snap_parity(int var) {
    Interval& x = iv[var];
    if (x.parity == Parity::unknown) return;
    int want = parity_bit(x.parity);
    if (mpz_tstbit(x.lo.get_mpz_t(), 0) != want)
      set_lo(var, x.lo + 1, "parity-snap", "");
    if (mpz_tstbit(x.hi.get_mpz_t(), 0) != want && x.hi > x.lo)
      set_hi(var, x.hi - 1, "parity-snap", "");
    if (x.lo > x.hi || (x.lo == x.hi && mpz_tstbit(x.lo.get_mpz_t(), 0) != want))
      infeasible = true;
  }

  // One member of an exact triangle against the other two.
  void narrow_member(const Triangle& t, int x, int y, int z) {
    const std::string& d = t.label;
    set_hi(x, iv[y].hi + iv[z].hi, "triangle-upper", d);
    Int lo = std::max(Int(iv[y].lo - iv[z].hi), Int(iv[z].lo - iv[y].hi));
    if (lo > 0) set_lo(x, lo, "triangle-lower", d);
    if (iv[y].parity != Parity::unknown && iv[z].parity != Parity::unknown) {
      Parity p = (parity_bit(iv[y].parity) ^ parity_bit(iv[z].parity))
                     ? Parity::odd
                     : Parity::even;
      set_parity(x, p, "triangle-parity", d);
    }
    snap_parity(x);
    if (iv[x].lo > iv[x].hi) infeasible = true;
  }

  void apply_equality(int x, int y) {
    set_lo(x, iv[y].lo, "flip-equality", "");
    set_hi(x, iv[y].hi, "flip-equality", "");
    set_lo(y, iv[x].lo, "flip-equality", "");
    set_hi(y, iv[x].hi, "flip-equality", "");
    set_parity(x, iv[y].parity, "flip-equality", "");
    set_parity(y, iv[x].parity, "flip-equality", "");
    if (iv[x].lo > iv[x].hi || iv[y].lo > iv[y].hi) infeasible = true;
  }

  void apply_mod4(const Mod4Constraint& c) {
    Interval& x = iv[c.var];
    Int up = ((c.residue - x.lo) % 4 + 4) % 4;
    if (up > 0) set_lo(c.var, x.lo + up, "euler-parity", "");
    Int down = ((x.hi - c.residue) % 4 + 4) % 4;
    if (down > 0) set_hi(c.var, x.hi - down, "euler-parity", "");
    if (x.lo > x.hi) infeasible = true;
  }

  bool run() {
    // Bounds are monotone nonincreasing nonnegative integers, so the loop
    // terminates within the initial total slack.
    Int guard = 8;
    for (const auto& v : iv) guard += v.hi - v.lo + 3;
    for (Int iter = 0; iter < guard; ++iter) {
      changed = false;
      for (const auto& t : sys.triangles) {
        narrow_member(t, t.a, t.b, t.c);
        narrow_member(t, t.b, t.a, t.c);
        narrow_member(t, t.c, t.a, t.b);
        if (infeasible) return false;
      }
      for (const auto& [x, y] : sys.equalities) {
        apply_equality(x, y);
        if (infeasible) return false;
      }
      for (const auto& c : sys.mod4) {
        apply_mod4(c);
        if (infeasible) return false;
      }
      if (!changed) return true;
    }
    throw std::logic_error("propagate: fixed point not reached within slack");
  }
};

DimValue union_intervals(const std::vector<Interval>& branches) {
  Int lo = branches.front().lo, hi = branches.front().hi;
  Parity parity = branches.front().parity;
  for (const auto& b : branches) {
    lo = std::min(lo, b.lo);
    hi = std::max(hi, b.hi);
    if (b.parity != parity) parity = Parity::unknown;
  }
  if (lo == hi) return DimValue::exact(lo);
  if (hi - lo <= 64) {
    std::vector<Int> set;
    for (Int v = lo; v <= hi; ++v) {
      bool member = false;
      for (const auto& b : branches)
        if (v >= b.lo && v <= b.hi &&
            (b.parity == Parity::unknown || parity_of(v) == b.parity)) {
          member = true;
          break;
        }
      if (member) set.push_back(v);
    }
    if (set.size() == 1) return DimValue::exact(set.front());
    if (set.size() == 2 && set[1] == set[0] + 2)
      return DimValue::pair(set[0], set[1]);
  }
  return DimValue::interval(lo, hi, parity);
}

}  // namespace

PropagationResult propagate(const ConstraintSystem& sys) {
  // Branch points: ambiguity couples, plus any lone pair-valued pin not
  // already covered by a couple.
  std::set<int> coupled;
  for (const auto& c : sys.couples) {
    coupled.insert(c.x);
    coupled.insert(c.y);
  }
  std::vector<std::pair<int, Int>> lone_pairs;  // var, low value
  for (const auto& [var, dv] : sys.pins)
    if (dv.kind == DimValue::Kind::pair && !coupled.count(var))
      lone_pairs.emplace_back(var, dv.a);

  const std::size_t nbits = sys.couples.size() + lone_pairs.size();
  if (nbits > 16)
    throw std::invalid_argument("propagate: too many branch points");

  PropagationResult result;
  std::vector<std::vector<Interval>> feasible;
  for (std::size_t mask = 0; mask < (std::size_t{1} << nbits); ++mask) {
    Narrower n{sys, {}, &result.steps, {}};
    n.iv.reserve(sys.vars.size());
    for (const auto& v : sys.vars) n.iv.push_back(v.iv);
    std::string tag =
        nbits == 0 ? "" : "branch " + std::to_string(mask) + ": ";
    n.branch_tag = tag;
    std::size_t bit = 0;
    for (const auto& c : sys.couples) {
      bool swap = (mask >> bit++) & 1;
      const Int xv = swap ? Int(c.low + 2) : c.low;
      const Int yv = swap ? c.low : Int(c.low + 2);
      n.iv[c.x] = {xv, xv, parity_of(xv)};
      n.iv[c.y] = {yv, yv, parity_of(yv)};
      result.steps.push_back({"couple", sys.vars[c.x].id,
                              tag + "assume value " + xv.get_str(), c.low,
                              c.low + 2, xv, xv});
    }
    for (const auto& [var, low] : lone_pairs) {
      const Int v = ((mask >> bit++) & 1) ? Int(low + 2) : low;
      n.iv[var] = {v, v, parity_of(v)};
      result.steps.push_back({"pair-pin", sys.vars[var].id,
                              tag + "assume value " + v.get_str(), low,
                              low + 2, v, v});
    }
    if (n.run()) feasible.push_back(std::move(n.iv));
  }

  if (feasible.empty())
    throw InfeasibleSystem("every propagation branch is infeasible");

  for (std::size_t i = 0; i < sys.vars.size(); ++i) {
    std::vector<Interval> per_branch;
    per_branch.reserve(feasible.size());
    for (const auto& f : feasible) per_branch.push_back(f[i]);
    result.values.emplace(sys.vars[i].id, union_intervals(per_branch));
  }
  return result;
}

ConstraintSystem build_system(const Slope& r0_in, const InvariantPair& inv_in,
                              const FieldSpec& field) {
  if (r0_in.is_infinite())
    throw std::invalid_argument("build_system: infinite slope");

  ConstraintSystem sys;
  Slope r0 = r0_in;
  InvariantPair inv = inv_in;
  if (r0 < Slope::integer(inv.M)) {
    r0 = Slope(-r0.num(), r0.den());
    inv = inv.mirrored();
    sys.mirrored = true;
  }
  sys.slope_used = r0;

  const TriadFan fan =
      r0.is_integral() ? integer_fan(r0.num()) : farey_resolve(r0);
  const std::array<const Slope*, 5> ri = {&fan.r0, &fan.r1, &fan.r2, &fan.r3,
                                          &fan.r4};

  std::array<std::array<int, 2>, 5> comp{};
  for (int i = 1; i <= 4; ++i) {
    std::array<DimValue, 2> dv = {
        ri[i]->is_infinite()
            ? DimValue::exact(1)  // dim I^sharp(S^3) = 1
            : dim_framed(*ri[i], inv, field, BundleClass::zero),
        ri[i]->is_infinite()
            ? DimValue::exact(1)
            : dim_framed(*ri[i], inv, field, BundleClass::mu)};
    for (int b = 0; b < 2; ++b) {
      comp[i][b] = sys.add_var(
          "I#(" + ri[i]->str() + ")[" + (b ? "mu" : "0") + "]", {0, 0});
      sys.pin(comp[i][b], dv[b]);
    }
    if (dv[0].kind == DimValue::Kind::pair)
      sys.couples.push_back({comp[i][0], comp[i][1], dv[0].a});
  }

  for (int b = 0; b < 2; ++b) {
    Int hi = std::min(
        Int(sys.vars[comp[3][b]].iv.hi + sys.vars[comp[2][b]].iv.hi),
        Int(sys.vars[comp[4][b]].iv.hi + sys.vars[comp[1][b]].iv.hi));
    // Unreduced dimensions are even over every field.
    int d = sys.add_var(std::string("D[") + (b ? "mu" : "0") + "]",
                        {0, hi, Parity::even});
    if (b == 0)
      sys.target = d;
    else
      sys.target_mu = d;
    sys.triangles.push_back({d, comp[3][b], comp[2][b],
                             "(" + fan.r3.str() + "," + fan.r2.str() + ")"});
    sys.triangles.push_back({d, comp[4][b], comp[1][b],
                             "(" + fan.r4.str() + "," + fan.r1.str() + ")"});
  }
  sys.equalities.emplace_back(sys.target, sys.target_mu);

  if (field.characteristic == 2) {
    // Euler characteristic argument: D/2 has the parity of the numerator.
    int residue = mpz_tstbit(r0.num().get_mpz_t(), 0) ? 2 : 0;
    sys.mod4.push_back({sys.target, residue});
    sys.mod4.push_back({sys.target_mu, residue});
  }
  return sys;
}

const char* to_string(CertifyOutcome o) {
  switch (o) {
    case CertifyOutcome::Match:
      return "MATCH";
    case CertifyOutcome::Consistent:
      return "CONSISTENT";
    case CertifyOutcome::Mismatch:
      return "MISMATCH";
  }
  return "?";
}

ProofReport certify(const Slope& r0, const InvariantPair& inv,
                    const FieldSpec& field) {
  ConstraintSystem sys = build_system(r0, inv, field);
  ProofReport rep;
  rep.closed_form = dim_dual_unreduced(r0, inv, field);
  rep.mirrored = sys.mirrored;
  rep.slope_used = sys.slope_used;
  rep.propagated = DimValue::interval(0, 0, Parity::unknown);

  try {
    PropagationResult res = propagate(sys);
    rep.steps = std::move(res.steps);
    rep.propagated = res.values.at(sys.vars[sys.target].id);
  } catch (const InfeasibleSystem&) {
    rep.outcome = CertifyOutcome::Mismatch;
    return rep;
  }

  const DimValue& p = rep.propagated;
  const DimValue& c = rep.closed_form;
  if (p.is_exact() && c.is_exact()) {
    rep.outcome = p.value() == c.value() ? CertifyOutcome::Match
                                         : CertifyOutcome::Mismatch;
  } else {
    bool contained = c.is_exact() ? p.contains(c.a)
                                  : (p.contains(c.a) && p.contains(c.b));
    rep.outcome =
        contained ? CertifyOutcome::Consistent : CertifyOutcome::Mismatch;
  }
  return rep;
}

std::string ProofReport::trace_text() const {
  std::ostringstream out;
  out << to_string(outcome) << " at slope " << slope_used.str()
      << (mirrored ? " (mirror-reduced)" : "") << ": closed form "
      << closed_form.str() << ", propagated " << propagated.str() << "\n";
  for (const auto& s : steps)
    out << "  " << s.rule << " " << s.var << " [" << s.old_lo.get_str() << ","
        << s.old_hi.get_str() << "] -> [" << s.new_lo.get_str() << ","
        << s.new_hi.get_str() << "]"
        << (s.detail.empty() ? "" : "  " + s.detail) << "\n";
  return out.str();
}

nlohmann::json ProofReport::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps)
    steps_json.push_back({{"rule", s.rule},
                          {"var", s.var},
                          {"detail", s.detail},
                          {"old", {int_to_json(s.old_lo), int_to_json(s.old_hi)}},
                          {"new", {int_to_json(s.new_lo), int_to_json(s.new_hi)}}});
  return {{"outcome", to_string(outcome)},
          {"slope", slope_used.str()},
          {"mirrored", mirrored},
          {"closed_form", closed_form.to_json()},
          {"propagated", propagated.to_json()},
          {"steps", std::move(steps_json)}};
}

}  // namespace dualknot
