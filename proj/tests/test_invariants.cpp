#include "doctest.h"

#include <random>

#include "chern/invariants.hpp"

using namespace chern;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("euler_from_fibration") {
  CHECK(euler_from_fibration(0, 0) == 4);
  CHECK(euler_from_fibration(1, 12) == 12);
  CHECK(euler_from_fibration(2, 5) == 1);
}

TEST_CASE("euler_from_fibration recovers n for E(1)") {
  // e = 12 chi_h - c1^2 = 12 for E(1); torus fibers leave every unit of e to the fishtails.
  const Integer e = 12 * 1 - 0;
  Integer n = -1;
  for (Integer candidate = 0; candidate <= 100; ++candidate)
    if (euler_from_fibration(1, candidate) == e) n = candidate;
  CHECK(n == 12);
}

TEST_CASE("complete_invariants") {
  CHECK(complete_invariants(1, 8) == FourManifoldInvariants{0, 4, 1, 8, 4});
  CHECK(complete_invariants(0, 0) == FourManifoldInvariants{0, 0, 0, 0, 0});
  for (Integer m = 1; m <= 6; ++m) {
    const auto inv = complete_invariants(m, 0);
    CHECK(inv.sigma == -8 * m);
    CHECK(inv.euler == 12 * m);
    CHECK(inv.c2 == 12 * m);
  }
}

TEST_CASE("complete_invariants is always consistent") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<Integer> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 5000; ++i) {
    const Integer chi = dist(rng);
    const Integer c1 = dist(rng);
    const auto inv = complete_invariants(chi, c1);
    CHECK(inv.sigma == c1 - 8 * chi);
    CHECK(validate(inv).empty());
  }
}

TEST_CASE("validate_block") {
  SUBCASE("E(1)") {
    LefschetzBlock e1("E(1)", 1, 0, 1, 12, true);
    CHECK(validate_block(e1).empty());
    CHECK(euler_from_fibration(e1.fiber_genus(), e1.singular_fibers()) == e1.invariants().euler);
  }
  SUBCASE("too few singular fibers for simple connectivity") {
    LefschetzBlock b("bad", 1, 0, 1, 1, true);
    const auto vs = validate_block(b);
    CHECK(has_kind(vs, ViolationKind::simple_connectivity));
    CHECK(has_kind(vs, ViolationKind::fibration_euler));
  }
  SUBCASE("same block not claimed simply connected") {
    LefschetzBlock b("bad", 1, 0, 1, 1, false);
    CHECK_FALSE(has_kind(validate_block(b), ViolationKind::simple_connectivity));
  }
  SUBCASE("holomorphic Euler characteristic mismatch") {
    const FourManifoldInvariants inv{.sigma = 1, .euler = 1, .chi_h = 1, .c1_sq = 0, .c2 = 1};
    const auto vs = validate(inv);
    CHECK(has_kind(vs, ViolationKind::holomorphic_euler));
    CHECK_FALSE(has_kind(vs, ViolationKind::second_chern_euler));
    LefschetzBlock b("raw", inv, 0, 0, false);
    CHECK(has_kind(validate_block(b), ViolationKind::holomorphic_euler));
  }
  SUBCASE("sphere fibration without singular fibers is exempt from n > 2g") {
    LefschetzBlock b("S2xS2", 1, 8, 0, 0, true);
    CHECK(validate_block(b).empty());
  }
}

TEST_CASE("negative genus or fiber count is rejected at construction") {
  CHECK_THROWS_AS(SurfaceInvariants(-1), ParameterError);
  CHECK_THROWS_AS(LefschetzBlock("x", 1, 0, -1, 12, true), ParameterError);
  CHECK_THROWS_AS(LefschetzBlock("x", 1, 0, 1, -12, true), ParameterError);
  CHECK(SurfaceInvariants(3).euler() == -4);
}

TEST_CASE("require_valid throws with every violation") {
  LefschetzBlock b("bad", 1, 0, 1, 1, true);
  try {
    require_valid(b);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("blocks built from complete invariants round-trip the Euler identity") {
  for (Integer g = 0; g <= 6; ++g)
    for (Integer chi = 0; chi <= 8; ++chi)
      for (Integer c1 = -8; c1 <= 16; ++c1) {
        const Integer n = 12 * chi - c1 - 2 * (2 - 2 * g);
        if (n < 0) continue;
        LefschetzBlock b("x", chi, c1, g, n, false);
        CHECK(validate_block(b).empty());
        CHECK(euler_from_fibration(g, n) == b.invariants().euler);
      }
}
