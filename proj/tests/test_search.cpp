#include "doctest.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "chern/fiber_sum.hpp"
#include "chern/search.hpp"
#include "chern/sweep.hpp"

using namespace chern;

namespace {

using PairKey = std::pair<std::string, std::string>;

std::set<PairKey> keys(const std::vector<Realization>& rs) {
  std::set<PairKey> out;
  for (const auto& r : rs) out.insert({r.first.block.name(), r.second.block.name()});
  return out;
}

// Independent enumeration: every ordered pair, symbolic oracle, unordered names.
std::set<PairKey> brute_force(const TargetTriple& t, const std::vector<CatalogEntry>& blocks) {
  std::set<PairKey> out;
  for (const auto& a : blocks)
    for (const auto& b : blocks)
      if (halic_construction_via_oracle(a.block, b.block) == t) {
        if (canonical_less(b, a))
          out.insert({b.block.name(), a.block.name()});
        else
          out.insert({a.block.name(), b.block.name()});
      }
  return out;
}

bool same_realizations(const std::vector<Realization>& a, const std::vector<Realization>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].first == b[i].first && a[i].second == b[i].second && a[i].triple == b[i].triple))
      return false;
  return true;
}

}  // namespace

TEST_CASE("enumerate_candidates") {
  SearchBounds b;
  b.elliptic_m = IntRange{1, 3};
  b.ruled_spheres = true;
  const auto c = enumerate_candidates(b);
  REQUIRE(c.size() == 4);
  CHECK(c[0].block.name() == "E(1)");
  CHECK(c[3].block.name() == "S2xS2");

  b.extra = {elliptic_entry(2)};  // duplicate
  CHECK(enumerate_candidates(b).size() == 4);

  SearchBounds bad;
  bad.elliptic_m = IntRange{0, 3};
  CHECK_THROWS_AS(enumerate_candidates(bad), ParameterError);
}

TEST_CASE("generic grid skips points without a valid simply connected block") {
  SearchBounds b;
  b.generic = GenericGrid{{0, 2}, {-2, 10}, {0, 2}};
  for (const auto& e : enumerate_candidates(b)) {
    CHECK(validate_block(e.block).empty());
    CHECK(e.block.simply_connected());
  }
}

TEST_CASE("search examples") {
  SUBCASE("Example with E(1) and S2 x S2") {
    SearchBounds b;
    b.elliptic_m = IntRange{1, 5};
    b.ruled_spheres = true;
    const auto r = search_realizations({24, 0, 24}, b);
    CHECK_FALSE(r.obstruction);
    CHECK(keys(r.realizations).contains({"E(1)", "S2xS2"}));
    for (const auto& x : r.realizations) CHECK(halic_construction(x.first.block, x.second.block) == x.triple);
  }
  SUBCASE("zero triple includes the Calabi-Yau pair and torus-absorbed pairs") {
    SearchBounds b;
    b.elliptic_m = IntRange{1, 3};
    b.knot_k = IntRange{1, 3};
    b.knot_genus = IntRange{0, 2};
    const auto r = search_realizations({0, 0, 0}, b);
    const auto k = keys(r.realizations);
    CHECK(k.contains({"E(2)", "E(2)_K[g=0]"}));
    CHECK(k.contains({"E(1)", "E(1)"}));
    CHECK(k == brute_force({0, 0, 0}, enumerate_candidates(b)));
    for (const auto& x : r.realizations)
      CHECK((x.first.block.fiber_genus() == 1 && x.second.block.fiber_genus() == 1));
  }
  SUBCASE("obstructed target") {
    const auto r = search_realizations({2, 2, 24}, default_search_bounds());
    CHECK(r.obstruction);
    CHECK(r.realizations.empty());
  }
}

TEST_CASE("parallel search matches the serial reference for any thread count") {
  SearchBounds b = default_search_bounds();
  b.generic = GenericGrid{{0, 4}, {-4, 12}, {0, 3}};
  for (TargetTriple t : {TargetTriple{48, 0, 48}, TargetTriple{0, 0, 0}, TargetTriple{8, 48, 24},
                         TargetTriple{-24, 0, -24}}) {
    const auto serial = search_realizations_serial(t, b);
    for (int threads : {1, 2, 3, 8}) {
      const auto par = search_realizations(t, b, {threads});
      CHECK(same_realizations(serial.realizations, par.realizations));
    }
    CHECK(keys(serial.realizations) == brute_force(t, enumerate_candidates(b)));
  }
}

TEST_CASE("sweep kernels") {
  const SweepGrid grid{{0, 2}, {-1, 3}, {-4, 4}};
  CHECK(grid.block_count() == 3 * 5 * 9);
  CHECK(grid.block_at(0) == BlockData{-1, -4, 0});
  CHECK(grid.block_at(grid.block_count() - 1) == BlockData{3, 4, 2});

  const auto serial = sweep_grid_serial(grid);
  CHECK(serial.pairs == grid.pair_count());
  CHECK(serial.clean());
  for (int threads : {1, 2, 4}) {
    const auto par = sweep_grid(grid, threads);
    CHECK(par.pairs == serial.pairs);
    CHECK(par.oracle_mismatches == serial.oracle_mismatches);
    CHECK(par.divisibility_failures == serial.divisibility_failures);
    CHECK(par.mod6_failures == serial.mod6_failures);
  }
}
