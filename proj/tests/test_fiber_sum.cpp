#include "doctest.h"

#include <random>

#include "chern/catalog.hpp"
#include "chern/fiber_sum.hpp"
#include "support/surface_products.hpp"

using namespace chern;

TEST_CASE("cross_section_of_surfaces") {
  CHECK(cross_section_of_surfaces(1, 1) == CrossSectionInvariants{0, 0});
  CHECK(cross_section_of_surfaces(1, 0) == CrossSectionInvariants{0, 0});
  for (Integer g1 = 0; g1 <= 5; ++g1)
    for (Integer g2 = 0; g2 <= 5; ++g2) {
      const auto oracle = testing::pair_product_of_surfaces(g1, g2);
      const auto x = cross_section_of_surfaces(g1, g2);
      CHECK(x == CrossSectionInvariants{oracle.c1_sq, oracle.c2});
      CHECK(x.c2 == (2 - 2 * g1) * (2 - 2 * g2));
      CHECK(x.c1_sq == 2 * x.c2);
    }
  CHECK(cross_section_of_surfaces(0, 0) == CrossSectionInvariants{8, 4});
}

TEST_CASE("fiber_sum_corrections") {
  CHECK(fiber_sum_corrections({}, {}, {}) == ChernTriple{});
  for (Integer m = 1; m <= 5; ++m)
    CHECK(fiber_sum_corrections({24 * m, 0, 24 * m}, {}, {}) == ChernTriple{24 * m, 0, 24 * m});

  // Two copies of S2 x S2 x S2 summed along S2 x S2: the result is again
  // S2 x S2 x S2, so the brute-force triple-sphere numbers must come back.
  const auto spheres = testing::triple_product_of_surfaces(0, 0, 0);
  const ChernTriple m{spheres.c3, spheres.c1_cubed, spheres.c1c2};
  const auto locus = testing::pair_product_of_surfaces(0, 0);
  CHECK(fiber_sum_corrections(m, m, {locus.c1_sq, locus.c2}) == ChernTriple{8, 48, 24});
}

TEST_CASE("halic_construction examples") {
  SUBCASE("E(m) with S2 x S2") {
    for (Integer m = 1; m <= 10; ++m)
      CHECK(halic_construction(elliptic_surface(m), ruled_spheres()) ==
            ChernTriple{24 * m, 0, 24 * m});
  }
  SUBCASE("E(m) with E(k)_K") {
    for (Integer m = 1; m <= 4; ++m)
      for (Integer k = 1; k <= 4; ++k)
        for (Integer g = 0; g <= 3; ++g) {
          const Integer v = 24 * m * (2 - 2 * g - k);
          CHECK(halic_construction(elliptic_surface(m), knot_surgered_elliptic(k, g)) ==
                ChernTriple{v, 0, v});
        }
  }
  SUBCASE("Calabi-Yau point") {
    CHECK(halic_construction(elliptic_surface(2), knot_surgered_elliptic(2, 0)) == ChernTriple{});
  }
  SUBCASE("invalid blocks") {
    LefschetzBlock bad("bad", 1, 0, 1, 1, true);
    CHECK_THROWS_AS(halic_construction(bad, ruled_spheres()), ValidationError);
    CHECK_THROWS_AS(halic_construction_via_oracle(ruled_spheres(), bad), ValidationError);
  }
}

TEST_CASE("oracle path agrees on named blocks") {
  CHECK(halic_construction_via_oracle(elliptic_surface(3), ruled_spheres()) == ChernTriple{72, 0, 72});
  CHECK(halic_construction_via_oracle(elliptic_surface(2), knot_surgered_elliptic(2, 0)) ==
        ChernTriple{});
  const auto s = ruled_spheres();
  CHECK(halic_construction_via_oracle(s, s) == halic_construction(s, s));
  CHECK(halic_construction(s, s) == ChernTriple{8, 48, 24});
}

TEST_CASE("closed form properties on random blocks") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Integer> genus(0, 12), chi(-50, 50), c1(-200, 200);
  for (int i = 0; i < 20000; ++i) {
    const BlockData a{chi(rng), c1(rng), genus(rng)};
    const BlockData b{chi(rng), c1(rng), genus(rng)};
    const auto t = closed_form_triple(a, b);
    CHECK(t == oracle_triple(a, b));
    CHECK(t == closed_form_triple(b, a));
    CHECK(t.c1_cubed % 6 == 0);
    CHECK(t.c1c2 % 24 == 0);
    CHECK(t.c3 % 2 == 0);
    const BlockData ta{a.chi_h, a.c1_sq, 1};
    const BlockData tb{b.chi_h, b.c1_sq, 1};
    CHECK(closed_form_triple(ta, tb) == ChernTriple{});
  }
}
