#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "dualknot/obstruction.hpp"

using namespace dualknot;

namespace {

KnotRecord det_one_knot() {
  KnotRecord k;
  k.name = "det1";
  k.det_direct = 1;
  k.exclusion_flag = false;
  return k;
}

bool checklist_all_pass(const Verdict& v) {
  for (const auto& item : v.checklist)
    if (!item.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("is_odd_prime_power") {
  CHECK(is_odd_prime_power(3));
  CHECK(is_odd_prime_power(9));
  CHECK(is_odd_prime_power(27));
  CHECK(is_odd_prime_power(125));
  CHECK(is_odd_prime_power(7));
  CHECK_FALSE(is_odd_prime_power(1));
  CHECK_FALSE(is_odd_prime_power(2));
  CHECK_FALSE(is_odd_prime_power(8));
  CHECK_FALSE(is_odd_prime_power(15));
  CHECK_FALSE(is_odd_prime_power(45));
  CHECK_FALSE(is_odd_prime_power(0));
  CHECK_FALSE(is_odd_prime_power(-9));
}

TEST_CASE("verdict_traceless worked examples") {
  KnotRecord k = det_one_knot();

  Verdict v = verdict_traceless(k, Slope(9, 2), false);
  CHECK(v.not_abelian());
  CHECK(v.theorem == "traceless");
  CHECK(checklist_all_pass(v));

  Verdict w = verdict_traceless(k, Slope(15, 4), false);
  CHECK_FALSE(w.not_abelian());

  // window flips with the sgmme flag: 7/1 is outside (0,6) but inside (0,8)
  CHECK_FALSE(verdict_traceless(k, Slope(7, 1), false).not_abelian());
  CHECK(verdict_traceless(k, Slope(7, 1), true).not_abelian());

  CHECK_THROWS_AS(verdict_traceless(k, Slope(-3, 1), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(verdict_traceless(k, Slope::infinite(), false),
                  std::invalid_argument);
}

TEST_CASE("verdict_traceless divisibility and exclusion gates") {
  KnotRecord k = det_one_knot();
  k.det_direct = 9;
  CHECK_FALSE(verdict_traceless(k, Slope(3, 1), false).not_abelian());
  k.det_direct = 7;
  CHECK(verdict_traceless(k, Slope(3, 1), false).not_abelian());
  k.exclusion_flag = true;
  CHECK_FALSE(verdict_traceless(k, Slope(3, 1), false).not_abelian());
}

TEST_CASE("verdict_branched worked examples") {
  KnotRecord k = det_one_knot();

  Verdict v = verdict_branched(k, Slope(9, 2), false);
  CHECK(v.not_abelian());
  CHECK(v.theorem == "branched");
  REQUIRE(v.branched_slope.has_value());
  CHECK(*v.branched_slope == Slope(9, 4));

  Verdict w = verdict_branched(k, Slope(27, 5), false);
  CHECK(w.not_abelian());  // 27 = 3^3 and 27/5 < 6

  // branched theorem needs det = 1, not mere indivisibility
  KnotRecord d = det_one_knot();
  d.det_direct = 7;
  CHECK_FALSE(verdict_branched(d, Slope(9, 2), false).not_abelian());
}

TEST_CASE("verdict serialization") {
  Verdict v = verdict_branched(det_one_knot(), Slope(9, 2), false);
  auto j = v.to_json();
  CHECK(j["outcome"] == "NotAbelian");
  CHECK(j["theorem"] == "branched");
  CHECK(j["branched_slope"] == "9/4");
  CHECK(j["checklist"].is_array());

  Verdict w = verdict_traceless(det_one_knot(), Slope(15, 4), false);
  auto jw = w.to_json();
  CHECK(jw["outcome"] == "Inconclusive");
  CHECK_FALSE(jw.contains("branched_slope"));
}

TEST_CASE("NotAbelian implies a fully passing checklist (fuzz)") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> dp(1, 40), dq(1, 8), ddet(1, 30),
      coin(0, 1);
  int not_abelian_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    long p = dp(rng), q = dq(rng);
    if (std::gcd(p, q) != 1) continue;
    KnotRecord k;
    k.name = "fuzz";
    k.det_direct = 2 * ddet(rng) - 1;
    k.exclusion_flag = coin(rng) == 1;
    bool sgmme = coin(rng) == 1;
    for (const Verdict& v :
         {verdict_traceless(k, Slope(p, q), sgmme),
          verdict_branched(k, Slope(p, q), sgmme)}) {
      if (v.not_abelian()) {
        ++not_abelian_seen;
        CHECK(checklist_all_pass(v));
      }
    }
  }
  CHECK(not_abelian_seen > 0);
}

TEST_CASE("enabling sgmme never loses a NotAbelian verdict") {
  KnotRecord k = det_one_knot();
  for (long q = 1; q <= 6; ++q)
    for (long p = 1; p <= 50; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (verdict_traceless(k, Slope(p, q), false).not_abelian())
        CHECK(verdict_traceless(k, Slope(p, q), true).not_abelian());
      if (verdict_branched(k, Slope(p, q), false).not_abelian())
        CHECK(verdict_branched(k, Slope(p, q), true).not_abelian());
    }
}

TEST_CASE("simple_knot_gap") {
  CHECK(simple_knot_gap(Slope(9, 2), InvariantPair(0, 4)) == 8);
  CHECK(simple_knot_gap(Slope(5, 1), InvariantPair(4, 4)) == 0);
  CHECK(simple_knot_gap(Slope(3, 1), InvariantPair(4, 4)) == 2);
  for (long p = 1; p <= 20; ++p)
    CHECK(simple_knot_gap(Slope(p, 1), InvariantPair(0, 0)) == 0);
}

TEST_CASE("obstruction_window cases") {
  ObstructionWindow empty = obstruction_window(InvariantPair(0, 4));
  CHECK(empty.kind == ObstructionWindow::Kind::empty);
  CHECK_FALSE(empty.contains(Slope(9, 2)));
  CHECK_FALSE(empty.derivation.empty());

  ObstructionWindow ray = obstruction_window(InvariantPair(4, 4));
  CHECK(ray.kind == ObstructionWindow::Kind::ray);
  CHECK(ray.min == Slope(4, 1));
  CHECK(ray.contains(Slope(4, 1)));
  CHECK(ray.contains(Slope(9, 2)));
  CHECK_FALSE(ray.contains(Slope(7, 2)));

  ObstructionWindow all = obstruction_window(InvariantPair(0, 0));
  CHECK(all.kind == ObstructionWindow::Kind::ray);
  CHECK(all.min == Slope(0, 1));
  CHECK(all.contains(Slope(1, 20)));

  auto j = ray.to_json();
  CHECK(j["kind"] == "ray");
  CHECK(j["min"] == "4/1");
}

TEST_CASE("window membership matches the gap sign on a sample grid") {
  // the full q <= 20, p <= 120 grid runs in the acceptance suite
  for (long m = 0; m <= 6; m += 2)
    for (long h = 0; h <= 2; ++h) {
      InvariantPair inv(m, m + 2 * h);
      ObstructionWindow w = obstruction_window(inv);
      for (long q = 1; q <= 8; ++q)
        for (long p = 1; p <= 40; ++p) {
          if (std::gcd(p, q) != 1) continue;
          Slope r(p, q);
          CHECK(w.contains(r) == (simple_knot_gap(r, inv) <= 0));
        }
    }
}
