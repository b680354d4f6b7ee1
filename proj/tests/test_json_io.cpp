#include "doctest.h"

#include <random>

#include "chern/json_io.hpp"

using namespace chern;

TEST_CASE("block JSON recomputes derived fields") {
  const auto j = Json::parse(R"j({"name": "E(1)", "chi_h": 1, "c1_sq": 0, "fiber_genus": 1,
                                 "singular_fibers": 12, "simply_connected": true,
                                 "sigma": 99, "euler": 99, "c2": 99})j");
  const auto b = block_from_json(j);
  CHECK(b.invariants() == complete_invariants(1, 0));
  CHECK(b.name() == "E(1)");
  CHECK(validate_block(b).empty());

  CHECK_THROWS_AS(block_from_json(Json::parse(R"j({"chi_h": 1})j")), ParameterError);
  CHECK_THROWS_AS(block_from_json(Json::parse(R"j({"chi_h": "1", "c1_sq": 0, "fiber_genus": 1,
                                                  "singular_fibers": 1})j")),
                  ParameterError);
}

TEST_CASE("block and triple JSON round trip") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Integer> small(0, 20), any(-100, 100);
  for (int i = 0; i < 200; ++i) {
    LefschetzBlock b("b" + std::to_string(i), any(rng), any(rng), small(rng), small(rng), i % 2 == 0);
    CHECK(block_from_json(Json::parse(to_json(b).dump())) == b);
    const ChernTriple t{any(rng), any(rng), any(rng)};
    CHECK(triple_from_json(to_json(t)) == t);
  }
  CHECK(to_json(ChernTriple{1, 2, 3}).dump() == R"j({"c1_cubed":2,"c1c2":3,"c3":1})j");
}

TEST_CASE("catalog JSON") {
  const auto j = Json::parse(R"j([
    {"family": "elliptic", "params": {"m": 2}},
    {"family": "ruled-spheres"},
    {"family": "knot-surgered-elliptic", "params": {"k": 2, "knot_genus": 0}, "name": "K3_K"},
    {"name": "custom", "chi_h": 1, "c1_sq": 8, "fiber_genus": 0, "singular_fibers": 0, "simply_connected": true}
  ])j");
  const auto cat = catalog_from_json(j);
  REQUIRE(cat.size() == 4);
  CHECK(cat[0].block == elliptic_surface(2));
  CHECK(cat[1].block == ruled_spheres());
  CHECK(cat[2].block.name() == "K3_K");
  CHECK(cat[3].family.id == FamilyId::generic);
  CHECK(cat[3].block.invariants() == ruled_spheres().invariants());

  const auto again = catalog_from_json(catalog_to_json(cat));
  CHECK(again == cat);

  CHECK_THROWS_AS(catalog_from_json(Json::object()), ParameterError);
  CHECK_THROWS_AS(catalog_from_json(Json::parse(R"j([{"family": "torus"}])j")), ParameterError);
  CHECK_THROWS_AS(catalog_from_json(Json::parse(R"j([{"family": "elliptic", "params": {"m": 0}}])j")),
                  ParameterError);
}

TEST_CASE("search bounds JSON") {
  const auto j = Json::parse(R"j({"elliptic": {"m": [1, 5]}, "ruled_spheres": true,
                                 "knot_surgered_elliptic": {"k": [1, 3], "knot_genus": [0, 2]},
                                 "generic": {"chi_h": [0, 3], "c1_sq": [-2, 9], "fiber_genus": [0, 2]}})j");
  const auto b = search_bounds_from_json(j);
  CHECK(b.elliptic_m == IntRange{1, 5});
  CHECK(b.ruled_spheres);
  CHECK(b.knot_k == IntRange{1, 3});
  CHECK(b.knot_genus == IntRange{0, 2});
  REQUIRE(b.generic);
  CHECK(b.generic->c1_sq == IntRange{-2, 9});
  CHECK(search_bounds_from_json(to_json(b)) == b);
  CHECK_THROWS_AS(search_bounds_from_json(Json::parse(R"j({"elliptic": {"m": [1]}})j")), ParameterError);
}
