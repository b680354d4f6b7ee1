#include "chern/json_io.hpp"

namespace chern {

namespace {

Integer get_integer(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParameterError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParameterError(std::string("field '") + key + "' must be an integer");
  return v.get<Integer>();
}

IntRange get_range(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParameterError(std::string("missing range '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ParameterError(std::string("range '") + key + "' must be [lo, hi]");
  return {v[0].get<Integer>(), v[1].get<Integer>()};
}

Json range_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

}  // namespace

Json to_json(const FourManifoldInvariants& inv) {
  return {{"sigma", inv.sigma}, {"euler", inv.euler}, {"chi_h", inv.chi_h},
          {"c1_sq", inv.c1_sq}, {"c2", inv.c2}};
}

Json to_json(const LefschetzBlock& block) {
  const auto& inv = block.invariants();
  return {{"name", block.name()},
          {"chi_h", inv.chi_h},
          {"c1_sq", inv.c1_sq},
          {"fiber_genus", block.fiber_genus()},
          {"singular_fibers", block.singular_fibers()},
          {"simply_connected", block.simply_connected()},
          {"sigma", inv.sigma},
          {"euler", inv.euler},
          {"c2", inv.c2}};
}

Json to_json(const ChernTriple& t) {
  return {{"c3", t.c3}, {"c1_cubed", t.c1_cubed}, {"c1c2", t.c1c2}};
}

Json to_json(const BlockFamily& family) {
  Json params = Json::object();
  for (const auto& [k, v] : family.params) params[k] = v;
  return {{"family", to_string(family.id)}, {"params", params}};
}

Json to_json(const CatalogEntry& entry) {
  Json j = to_json(entry.family);
  j["name"] = entry.block.name();
  j["block"] = to_json(entry.block);
  return j;
}

Json to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return out;
}

Json to_json(const DivisibilityReport& r) {
  return {{"c3_even", r.c3_even},
          {"c1cubed_even", r.c1cubed_even},
          {"c1c2_mod24", r.c1c2_mod24},
          {"all_pass", r.all_pass}};
}

Json to_json(const Obstruction& obstruction) {
  Json reasons = Json::array();
  for (auto kind : obstruction.reasons) reasons.push_back(to_string(kind));
  return {{"reasons", reasons}, {"message", obstruction.message()}};
}

Json to_json(const GeographyRegion& region) {
  Json labels = Json::array();
  for (auto l : region.labels) labels.push_back(to_string(l));
  Json lines = Json::array();
  for (auto l : region.lines) lines.push_back(to_string(l));
  return {{"chi_h", region.chi_h},
          {"c1_sq", region.c1_sq},
          {"labels", labels},
          {"lines", lines},
          {"on_elliptic_axis", region.on_elliptic_axis},
          {"signature_sign", region.signature_sign},
          {"basic_class_count",
           region.basic_class_count ? Json(*region.basic_class_count) : Json(nullptr)}};
}

Json to_json(const Realization& r) {
  return {{"first", to_json(r.first)}, {"second", to_json(r.second)}, {"triple", to_json(r.triple)}};
}

Json to_json(const SearchResult& result) {
  Json realizations = Json::array();
  for (const auto& r : result.realizations) realizations.push_back(to_json(r));
  return {{"candidates", result.candidates},
          {"obstruction", result.obstruction ? to_json(*result.obstruction) : Json(nullptr)},
          {"realizations", realizations}};
}

LefschetzBlock block_from_json(const Json& j) {
  if (!j.is_object()) throw ParameterError("block must be a JSON object");
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>()
                                                                     : std::string{};
  bool simply_connected = true;
  if (j.contains("simply_connected")) {
    if (!j.at("simply_connected").is_boolean())
      throw ParameterError("field 'simply_connected' must be a boolean");
    simply_connected = j.at("simply_connected").get<bool>();
  }
  // sigma, euler and c2 are recomputed, whatever the file says.
  return generic_block(get_integer(j, "chi_h"), get_integer(j, "c1_sq"),
                       get_integer(j, "fiber_genus"), get_integer(j, "singular_fibers"),
                       simply_connected, std::move(name))
      .block;
}

ChernTriple triple_from_json(const Json& j) {
  return {get_integer(j, "c3"), get_integer(j, "c1_cubed"), get_integer(j, "c1c2")};
}

BlockFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw ParameterError("family record needs a string 'family' field");
  BlockFamily family{parse_family(j.at("family").get<std::string>()), {}};
  if (j.contains("params")) {
    const auto& params = j.at("params");
    if (!params.is_object()) throw ParameterError("'params' must be an object");
    for (const auto& [key, value] : params.items()) {
      if (value.is_boolean())
        family.params[key] = value.get<bool>() ? 1 : 0;
      else if (value.is_number_integer())
        family.params[key] = value.get<Integer>();
      else
        throw ParameterError("parameter '" + key + "' must be an integer");
    }
  }
  return family;
}

std::vector<CatalogEntry> catalog_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  for (const auto& item : j) {
    std::string name = item.is_object() && item.contains("name") && item.at("name").is_string()
                           ? item.at("name").get<std::string>()
                           : std::string{};
    if (item.is_object() && item.contains("family")) {
      out.push_back(make_entry(family_from_json(item), std::move(name)));
    } else {
      const auto block = block_from_json(item);
      BlockFamily family{FamilyId::generic,
                         {{"chi_h", block.invariants().chi_h},
                          {"c1_sq", block.invariants().c1_sq},
                          {"fiber_genus", block.fiber_genus()},
                          {"singular_fibers", block.singular_fibers()},
                          {"simply_connected", block.simply_connected() ? 1 : 0}}};
      out.push_back({std::move(family), block});
    }
  }
  return out;
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

SearchBounds search_bounds_from_json(const Json& j) {
  if (!j.is_object()) throw ParameterError("search bounds must be a JSON object");
  SearchBounds b;
  if (j.contains("elliptic")) b.elliptic_m = get_range(j.at("elliptic"), "m");
  if (j.contains("ruled_spheres")) {
    if (!j.at("ruled_spheres").is_boolean())
      throw ParameterError("'ruled_spheres' must be a boolean");
    b.ruled_spheres = j.at("ruled_spheres").get<bool>();
  }
  if (j.contains("knot_surgered_elliptic")) {
    const auto& k = j.at("knot_surgered_elliptic");
    b.knot_k = get_range(k, "k");
    b.knot_genus = get_range(k, "knot_genus");
  }
  if (j.contains("generic")) {
    const auto& g = j.at("generic");
    b.generic = GenericGrid{get_range(g, "chi_h"), get_range(g, "c1_sq"), get_range(g, "fiber_genus")};
  }
  return b;
}

Json to_json(const SearchBounds& b) {
  Json j = Json::object();
  if (b.elliptic_m) j["elliptic"] = {{"m", range_json(*b.elliptic_m)}};
  j["ruled_spheres"] = b.ruled_spheres;
  if (b.knot_k)
    j["knot_surgered_elliptic"] = {{"k", range_json(*b.knot_k)},
                                   {"knot_genus", range_json(b.knot_genus.value_or(IntRange{0, 0}))}};
  if (b.generic)
    j["generic"] = {{"chi_h", range_json(b.generic->chi_h)},
                    {"c1_sq", range_json(b.generic->c1_sq)},
                    {"fiber_genus", range_json(b.generic->fiber_genus)}};
  return j;
}

}  // namespace chern
