#include "doctest.h"

#include "chern/geography.hpp"
#include "chern/invariants.hpp"

using namespace chern;

TEST_CASE("halic_divisibility_check") {
  CHECK(halic_divisibility_check({24, 0, 24}).all_pass);
  CHECK(halic_divisibility_check({0, 0, 0}).all_pass);
  const auto r = halic_divisibility_check({2, 2, 12});
  CHECK(r.c3_even);
  CHECK(r.c1cubed_even);
  CHECK_FALSE(r.c1c2_mod24);
  CHECK_FALSE(r.all_pass);
  CHECK_FALSE(halic_divisibility_check({1, 0, 0}).c3_even);
  CHECK_FALSE(halic_divisibility_check({0, -3, 0}).c1cubed_even);
  CHECK(halic_divisibility_check({-2, -4, -48}).all_pass);
}

TEST_CASE("construction_obstruction") {
  const auto ob = construction_obstruction({2, 2, 24});
  REQUIRE(ob);
  CHECK(ob->reasons == std::vector{ObstructionKind::c1cubed_not_divisible_by_6});
  CHECK_FALSE(construction_obstruction({24, 0, 24}));
  CHECK_FALSE(construction_obstruction({0, 48, 0}));
  const auto halic = construction_obstruction({0, 0, 1});
  REQUIRE(halic);
  CHECK(halic->reasons == std::vector{ObstructionKind::c1c2_not_divisible_by_24});
  const auto odd = construction_obstruction({1, 3, 24});
  REQUIRE(odd);
  CHECK(odd->reasons ==
        std::vector{ObstructionKind::c3_odd, ObstructionKind::c1cubed_odd,
                    ObstructionKind::c1cubed_not_divisible_by_6});
}

TEST_CASE("classify: elliptic axis") {
  for (Integer n = 3; n <= 12; ++n) {
    const auto r = classify_geography_point(n, 0);
    CHECK(r.has(RegionLabel::many_basic_classes));
    CHECK(r.basic_class_count == n - 2);
    CHECK(r.on_elliptic_axis);
    CHECK(r.signature_sign == -1);
  }
  CHECK(classify_geography_point(1, 0).on_elliptic_axis);
  CHECK_FALSE(classify_geography_point(0, 0).on_elliptic_axis);
}

TEST_CASE("classify: named points") {
  const auto bmy = classify_geography_point(1, 9);
  CHECK(bmy.has(RegionLabel::general_type));
  CHECK_FALSE(bmy.has(RegionLabel::above_bmy_unknown));
  CHECK(bmy.on(BoundaryLine::bmy));
  CHECK(bmy.signature_sign == 1);

  const auto s = classify_geography_point(1, 8);
  CHECK(s.has(RegionLabel::general_type));
  CHECK(s.on(BoundaryLine::zero_signature));
  CHECK(s.signature_sign == 0);

  CHECK(classify_geography_point(1, 10).labels == std::vector{RegionLabel::above_bmy_unknown});
  CHECK(classify_geography_point(5, -1).labels == std::vector{RegionLabel::negative_c1sq_unknown});
}

TEST_CASE("classify: boundaries carry every adjacent label") {
  // (3, 0) lies on c1^2 = 0, chi - 3 and 2chi - 6 at once.
  const auto r = classify_geography_point(3, 0);
  CHECK(r.labels == std::vector{RegionLabel::many_basic_classes, RegionLabel::one_basic_class,
                                RegionLabel::general_type});
  CHECK(r.basic_class_count == 1);
  const auto one = classify_geography_point(10, 7);  // chi - 3
  CHECK(one.has(RegionLabel::many_basic_classes));
  CHECK(one.has(RegionLabel::one_basic_class));
  const auto noether = classify_geography_point(10, 14);  // 2chi - 6
  CHECK(noether.has(RegionLabel::one_basic_class));
  CHECK(noether.has(RegionLabel::general_type));
  CHECK(noether.on(BoundaryLine::noether));
}

TEST_CASE("classify: empty strips for small chi match nothing") {
  const auto r = classify_geography_point(1, 0);
  CHECK_FALSE(r.has(RegionLabel::many_basic_classes));
  CHECK_FALSE(r.has(RegionLabel::one_basic_class));
  CHECK_FALSE(r.basic_class_count);
}

TEST_CASE("classify: signature sign and coverage over a grid") {
  for (Integer chi = -5; chi <= 30; ++chi)
    for (Integer c1 = -20; c1 <= 280; ++c1) {
      const auto r = classify_geography_point(chi, c1);
      const Integer sigma = complete_invariants(chi, c1).sigma;
      CHECK(r.signature_sign == (sigma > 0) - (sigma < 0));
      if (chi >= 3) CHECK_FALSE(r.labels.empty());
    }
}
