// Command-line front end: slope triads, dimension evaluation, proof
// replay, and SU(2) obstruction verdicts over knot tables.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dualknot/dimension.hpp"
#include "dualknot/knot.hpp"
#include "dualknot/obstruction.hpp"
#include "dualknot/prover.hpp"
#include "dualknot/slope.hpp"
#include "dualknot/surgery.hpp"

using nlohmann::json;
using namespace dualknot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Options {
  std::string format = "json";
  std::string slope_text;
  long nu = 0;
  long r = 0;
  std::string field = "f2";
  bool sgmme = false;
  std::string bundle = "0";
  bool trace = false;
  std::string table_path;
  std::string knot_name;
  std::string slopes_spec;
  std::string theorem = "both";
};

FieldSpec field_of(const Options& o) {
  if (o.field == "c0") return FieldSpec::char0(false);
  if (o.field == "f2") return FieldSpec::f2(o.sgmme);
  throw CLI::ValidationError("--field must be c0 or f2");
}

BundleClass bundle_of(const Options& o) {
  if (o.bundle == "0") return BundleClass::zero;
  if (o.bundle == "mu") return BundleClass::mu;
  throw CLI::ValidationError("--bundle must be 0 or mu");
}

InvariantPair pair_of(const Options& o) { return InvariantPair(o.nu, o.r); }

void emit(const Options& o, const json& j, const std::string& tsv) {
  if (o.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << tsv << "\n";
}

std::string dim_tsv(const DimValue& d) {
  switch (d.kind) {
    case DimValue::Kind::exact:
      return "exact\t" + d.a.get_str();
    case DimValue::Kind::pair:
      return "pair\t" + d.a.get_str() + "\t" + d.b.get_str();
    case DimValue::Kind::interval:
      return "interval\t" + d.a.get_str() + "\t" + d.b.get_str();
  }
  return "";
}

std::vector<KnotRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table '" + path + "'");
  IngestResult res = ingest_table(in);
  for (const auto& e : res.errors)
    std::cerr << path << ":" << e.line << ": " << e.message << "\n";
  if (res.records.empty())
    throw std::runtime_error("table '" + path + "' has no valid rows");
  return std::move(res.records);
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& table,
                            const std::string& name) {
  for (const auto& k : table)
    if (k.name == name) return k;
  throw std::runtime_error("unknown knot name '" + name + "'");
}

// A slope spec is a comma list of p/q tokens or range specs
// "p_min..p_max/q" expanded over p coprime to q.
std::vector<Slope> expand_slopes(const std::string& spec) {
  std::vector<Slope> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(Slope::parse(token));
      continue;
    }
    auto slash = token.find('/', dots);
    if (slash == std::string::npos)
      throw std::invalid_argument("range spec '" + token +
                                  "' needs the form p_min..p_max/q");
    Int lo = int_from_string(token.substr(0, dots));
    Int hi = int_from_string(token.substr(dots + 2, slash - dots - 2));
    Int q = int_from_string(token.substr(slash + 1));
    if (q <= 0) throw std::invalid_argument("range denominator must be >= 1");
    for (Int p = lo; p <= hi; ++p)
      if (p != 0 && gcd(p, q) == 1) out.push_back(Slope(p, q));
  }
  if (out.empty()) throw std::invalid_argument("empty slope spec");
  return out;
}

int cmd_triad(const Options& o) {
  Slope r = Slope::parse(o.slope_text);
  if (r.is_infinite())
    throw std::invalid_argument("triad: the infinite slope has no fan");
  TriadFan fan = r.is_integral() ? integer_fan(r.num()) : farey_resolve(r);
  emit(o,
       json{{"r0", fan.r0.str()},
            {"r1", fan.r1.str()},
            {"r2", fan.r2.str()},
            {"r3", fan.r3.str()},
            {"r4", fan.r4.str()}},
       fan.r0.str() + "\t" + fan.r1.str() + "\t" + fan.r2.str() + "\t" +
           fan.r3.str() + "\t" + fan.r4.str());
  return kExitOk;
}

int cmd_dim_surgery(const Options& o) {
  DimValue d = dim_framed(Slope::parse(o.slope_text), pair_of(o), field_of(o),
                          bundle_of(o));
  emit(o, d.to_json(), dim_tsv(d));
  return kExitOk;
}

int cmd_dim_dual(const Options& o) {
  Slope r = Slope::parse(o.slope_text);
  InvariantPair inv = pair_of(o);
  DimValue unreduced = dim_dual_unreduced(r, inv, field_of(o), bundle_of(o));
  Int reduced = dim_dual_reduced_f2(r, inv);
  json j = {{"unreduced", unreduced.to_json()},
            {"reduced_f2", int_to_json(reduced)},
            {"note", "independent of the bundle class"}};
  emit(o, j, dim_tsv(unreduced) + "\t" + reduced.get_str());
  return kExitOk;
}

int cmd_prove(const Options& o) {
  ProofReport rep = certify(Slope::parse(o.slope_text), pair_of(o), field_of(o));
  json j = rep.to_json();
  if (!o.trace) j.erase("steps");
  emit(o, j, rep.trace_text());
  return rep.outcome == CertifyOutcome::Mismatch ? kExitMismatch : kExitOk;
}

int cmd_verdict(const Options& o, bool branched) {
  auto table = load_table(o.table_path);
  const KnotRecord& k = find_knot(table, o.knot_name);
  Slope r = Slope::parse(o.slope_text);
  Verdict v =
      branched ? verdict_branched(k, r, o.sgmme) : verdict_traceless(k, r, o.sgmme);
  std::string tsv = o.knot_name + "\t" + r.str() + "\t" +
                    (v.not_abelian() ? "NotAbelian" : "Inconclusive");
  if (v.branched_slope) tsv += "\t" + v.branched_slope->str();
  emit(o, v.to_json(), tsv);
  return kExitOk;
}

int cmd_scan(const Options& o) {
  auto table = load_table(o.table_path);
  auto slopes = expand_slopes(o.slopes_spec);
  bool do_traceless = o.theorem == "both" || o.theorem == "traceless";
  bool do_branched = o.theorem == "both" || o.theorem == "branched";
  if (!do_traceless && !do_branched)
    throw std::invalid_argument("--theorem must be traceless, branched or both");

  json rows = json::array();
  for (const auto& k : table) {
    for (const auto& r : slopes) {
      json cell = {{"knot", k.name}, {"slope", r.str()}};
      std::string tsv = k.name + "\t" + r.str();
      if (do_traceless) {
        Verdict v = verdict_traceless(k, r, o.sgmme);
        cell["traceless"] = v.not_abelian() ? "NotAbelian" : "Inconclusive";
        tsv += "\t" + cell["traceless"].get<std::string>();
      }
      if (do_branched) {
        Verdict v = verdict_branched(k, r, o.sgmme);
        cell["branched"] = v.not_abelian() ? "NotAbelian" : "Inconclusive";
        if (v.branched_slope) cell["branched_slope"] = v.branched_slope->str();
        tsv += "\t" + cell["branched"].get<std::string>();
      }
      if (o.format == "tsv") std::cout << tsv << "\n";
      rows.push_back(std::move(cell));
    }
  }
  if (o.format == "json") std::cout << rows.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic calculator and mini-prover for instanton "
               "surgery dimensions and SU(2) obstruction verdicts"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "Coefficient field (c0 or f2)")
        ->check(CLI::IsMember({"c0", "f2"}));
    c->add_flag("--sgmme", o.sgmme,
                "Assume the characteristic-2 refinement (nu, r divisible by 4)");
  };
  auto add_inv = [&](CLI::App* c) {
    c->add_option("--nu", o.nu, "Invariant nu_sharp (M)")->required();
    c->add_option("--r", o.r, "Invariant r (R)")->required();
  };

  auto* triad = app.add_subcommand("triad", "Resolve a slope into its triad fan");
  triad->add_option("slope", o.slope_text, "Slope p/q")->required();

  auto* dims = app.add_subcommand("dim-surgery",
                                  "Framed instanton dimension of p/q-surgery");
  dims->add_option("slope", o.slope_text, "Slope p/q")->required();
  add_inv(dims);
  add_field(dims);
  dims->add_option("--bundle", o.bundle, "Bundle class (0 or mu)")
      ->check(CLI::IsMember({"0", "mu"}));

  auto* dimd = app.add_subcommand(
      "dim-dual", "Unreduced and reduced dual-knot dimensions");
  dimd->add_option("slope", o.slope_text, "Slope p/q")->required();
  add_inv(dimd);
  add_field(dimd);
  dimd->add_option("--bundle", o.bundle,
                   "Bundle class (accepted and ignored)")
      ->check(CLI::IsMember({"0", "mu"}));

  auto* prove = app.add_subcommand(
      "prove", "Replay the exact-triangle proof and compare with the formula");
  prove->add_option("slope", o.slope_text, "Slope p/q")->required();
  add_inv(prove);
  add_field(prove);
  prove->add_flag("--trace", o.trace, "Include the narrowing trace");

  auto* verdict = app.add_subcommand("verdict", "SU(2) obstruction verdict");
  std::string variant;
  verdict->add_option("variant", variant, "traceless or branched")
      ->required()
      ->check(CLI::IsMember({"traceless", "branched"}));
  verdict->add_option("--knot", o.knot_name, "Knot name in the table")
      ->required();
  verdict->add_option("--slope", o.slope_text, "Slope p/q")->required();
  verdict->add_option("--table", o.table_path, "Knot table (CSV or JSON)")
      ->required();
  verdict->add_flag("--sgmme", o.sgmme, "Extend the slope window to (0,8)");

  auto* scan = app.add_subcommand("scan", "Verdict matrix over table x slopes");
  scan->add_option("--table", o.table_path, "Knot table (CSV or JSON)")
      ->required();
  scan->add_option("--slopes", o.slopes_spec,
                   "Comma list of p/q or range p_min..p_max/q")
      ->required();
  scan->add_option("--theorem", o.theorem, "traceless, branched, or both")
      ->check(CLI::IsMember({"traceless", "branched", "both"}));
  scan->add_flag("--sgmme", o.sgmme, "Extend the slope window to (0,8)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (triad->parsed()) return cmd_triad(o);
    if (dims->parsed()) return cmd_dim_surgery(o);
    if (dimd->parsed()) return cmd_dim_dual(o);
    if (prove->parsed()) return cmd_prove(o);
    if (verdict->parsed()) return cmd_verdict(o, variant == "branched");
    if (scan->parsed()) return cmd_scan(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
