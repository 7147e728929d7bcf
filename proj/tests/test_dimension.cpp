#include <doctest.h>

#include <nlohmann/json.hpp>

#include "dualknot/dimension.hpp"

using namespace dualknot;

namespace {
const FieldSpec kC0 = FieldSpec::char0();
const FieldSpec kF2 = FieldSpec::f2();
const FieldSpec kF2Sgmme = FieldSpec::f2(true);
}  // namespace

TEST_CASE("DimValue construction and serialization") {
  CHECK(DimValue::exact(26).to_json().dump() == R"({"kind":"exact","n":26})");
  CHECK(DimValue::pair(8, 10).to_json().dump() ==
        R"({"a":8,"b":10,"kind":"pair"})");
  auto iv = DimValue::interval(4, 6, Parity::even).to_json();
  CHECK(iv["parity"] == "even");
  CHECK_THROWS(DimValue::pair(8, 11));
  CHECK_THROWS(DimValue::interval(5, 3, Parity::unknown));
  CHECK(DimValue::pair(8, 10).contains(10));
  CHECK_FALSE(DimValue::interval(4, 8, Parity::even).contains(5));
}

TEST_CASE("dim_framed away from the exceptional slope") {
  CHECK(dim_framed(Slope(5, 2), InvariantPair(0, 0), kC0) ==
        DimValue::exact(5));
  CHECK(dim_framed(Slope(7, 2), InvariantPair(1, 3), kC0) ==
        DimValue::exact(11));
  CHECK_THROWS_AS(dim_framed(Slope::infinite(), InvariantPair(0, 0), kC0),
                  std::invalid_argument);
}

TEST_CASE("dim_framed exceptional slope M with M even") {
  InvariantPair inv(4, 4);
  CHECK(dim_framed(Slope(4, 1), inv, kC0) == DimValue::pair(4, 6));
  CHECK(dim_framed(Slope(4, 1), inv, kF2) == DimValue::pair(4, 6));
  CHECK(dim_framed(Slope(4, 1), inv, kF2Sgmme, BundleClass::zero) ==
        DimValue::exact(6));
  CHECK(dim_framed(Slope(4, 1), inv, kF2Sgmme, BundleClass::mu) ==
        DimValue::exact(4));
  // M odd at slope M is not exceptional
  CHECK(dim_framed(Slope(3, 1), InvariantPair(3, 5), kC0) ==
        DimValue::exact(5));
}

TEST_CASE("dim_dual_unreduced") {
  CHECK(dim_dual_unreduced(Slope(7, 3), InvariantPair(2, 4), kC0) ==
        DimValue::exact(26));
  CHECK(dim_dual_unreduced(Slope(2, 1), InvariantPair(2, 4), kC0) ==
        DimValue::pair(8, 10));
  CHECK(dim_dual_unreduced(Slope(2, 1), InvariantPair(2, 4), kF2) ==
        DimValue::exact(8));
  // at slope M the ambiguity is present for odd M too
  CHECK(dim_dual_unreduced(Slope(3, 1), InvariantPair(3, 3), kC0) ==
        DimValue::pair(6, 8));
  // bundle argument accepted and ignored
  CHECK(dim_dual_unreduced(Slope(7, 3), InvariantPair(2, 4), kC0,
                           BundleClass::mu) == DimValue::exact(26));
}

TEST_CASE("dim_dual_reduced_f2") {
  CHECK(dim_dual_reduced_f2(Slope(9, 2), InvariantPair(0, 4)) == 17);
  CHECK(dim_dual_reduced_f2(Slope(4, 1), InvariantPair(4, 8)) == 8);
  for (long p = 1; p <= 10; ++p)
    CHECK(dim_dual_reduced_f2(Slope(p, 1), InvariantPair(0, 0)) == p);
}

TEST_CASE("doubling: unreduced = 2 x reduced over characteristic 2") {
  for (long m = -4; m <= 4; ++m)
    for (long h = 0; h <= 3; ++h)
      for (long p = -15; p <= 15; ++p)
        for (long q = 1; q <= 4; ++q) {
          if (p == 0 && q == 0) continue;
          if (std::gcd(std::abs(p), q) != 1) continue;
          InvariantPair inv(m, std::abs(m) + 2 * h);
          Slope r(p, q);
          DimValue un = dim_dual_unreduced(r, inv, kF2);
          CHECK(un.value() == 2 * dim_dual_reduced_f2(r, inv));
          CHECK(un.value() % 2 == 0);
        }
}

TEST_CASE("factor-2 identity against dim_framed away from M") {
  for (long m = -3; m <= 3; ++m)
    for (long p = -12; p <= 12; ++p)
      for (long q = 1; q <= 3; ++q) {
        if (std::gcd(std::abs(p), q) != 1) continue;
        if (q == 1 && p == m) continue;
        InvariantPair inv(m, std::abs(m) + 2);
        for (const FieldSpec& f : {kC0, kF2}) {
          CHECK(dim_dual_unreduced(Slope(p, q), inv, f).value() ==
                2 * dim_framed(Slope(p, q), inv, f).value());
        }
      }
}

TEST_CASE("mirror invariance of the dimension formulas") {
  for (long m = -4; m <= 4; ++m)
    for (long h = 0; h <= 2; ++h)
      for (long p = -10; p <= 10; ++p)
        for (long q = 1; q <= 3; ++q) {
          if (std::gcd(std::abs(p), q) != 1) continue;
          InvariantPair inv(m, std::abs(m) + 2 * h);
          InvariantPair minv = inv.mirrored();
          Slope r(p, q), mr(-p, q);
          CHECK(dim_framed(r, inv, kC0) == dim_framed(mr, minv, kC0));
          CHECK(dim_dual_unreduced(r, inv, kC0) ==
                dim_dual_unreduced(mr, minv, kC0));
          CHECK(dim_dual_reduced_f2(r, inv) == dim_dual_reduced_f2(mr, minv));
        }
}

TEST_CASE("validate_relations") {
  CHECK(validate_relations(DimValue::exact(34), DimValue::exact(17), kF2)
            .all_pass());
  CHECK_FALSE(validate_relations(DimValue::exact(10), DimValue::exact(4), kF2)
                  .all_pass());
  CHECK_FALSE(validate_relations(DimValue::exact(6), DimValue::exact(7), kC0)
                  .all_pass());
  // over char 0 the doubling identity is not required
  CHECK(validate_relations(DimValue::exact(12), DimValue::exact(7), kC0)
            .all_pass());
  CHECK_FALSE(validate_relations(DimValue::exact(7), DimValue::exact(4), kC0)
                  .all_pass());  // odd unreduced dimension
  CHECK_THROWS(validate_relations(DimValue::pair(8, 10), DimValue::exact(4),
                                  kC0));
}

TEST_CASE("euler_parity_check") {
  CHECK(euler_parity_check(Slope(3, 1), InvariantPair(0, 0)));
  for (long m = -5; m <= 5; ++m)
    for (long h = 0; h <= 3; ++h)
      for (long p = -20; p <= 20; ++p)
        for (long q = 1; q <= 5; ++q) {
          if (std::gcd(std::abs(p), q) != 1) continue;
          CHECK(euler_parity_check(Slope(p, q),
                                   InvariantPair(m, std::abs(m) + 2 * h)));
        }
  // an invalid injected pair is detected
  CHECK_FALSE(
      euler_parity_check(Slope(1, 1), InvariantPair::unchecked(1, 2)));
}
