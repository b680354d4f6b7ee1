// chern6: Chern numbers of symplectic 6-manifolds built by fiber-summing
// products of Lefschetz fibrations with surfaces.
//
// Exit codes: 0 success (including an empty search), 1 domain or validation
// error, 2 usage error.

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "block_spec.hpp"
#include "chern/catalog.hpp"
#include "chern/class_algebra.hpp"
#include "chern/fiber_sum.hpp"
#include "chern/geography.hpp"
#include "chern/json_io.hpp"
#include "chern/plot.hpp"
#include "chern/search.hpp"

namespace {

using namespace chern;
using cli::UsageError;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

enum class Format { table, json, csv, svg };

Format parse_format(const std::string& s) {
  if (s == "table" || s == "human-table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "svg") return Format::svg;
  throw UsageError("unknown format '" + s + "' (expected table, json, csv or svg)");
}

void require_not_svg(Format f) {
  if (f == Format::svg) throw UsageError("--format svg is only valid for the plot command");
}

IntRange parse_range(const std::string& text, const std::string& what) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw UsageError(what + ": expected a range lo..hi, got '" + text + "'");
  IntRange r{cli::parse_integer(m[1], what), cli::parse_integer(m[2], what)};
  if (r.empty()) throw UsageError(what + ": empty range '" + text + "'");
  return r;
}

ChernTriple parse_target(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw UsageError("--target: expected c3,c1^3,c1c2, got '" + text + "'");
  return {cli::parse_integer(m[1], "c3"), cli::parse_integer(m[2], "c1^3"),
          cli::parse_integer(m[3], "c1c2")};
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("catalog file '" + path + "': " + e.what());
  }
  return catalog_from_json(j);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Shared state between parsing and dispatch

struct Globals {
  std::string format = "table";
  std::string catalog_path;

  Format fmt() const { return parse_format(format); }
  std::vector<CatalogEntry> catalog() const {
    return catalog_path.empty() ? default_catalog() : load_catalog_file(catalog_path);
  }
};

cli::CommandTokens parse_prefix(const std::vector<std::string>& tokens, Globals& globals,
                                std::set<std::string> value_options,
                                const std::set<std::string>& flag_options) {
  value_options.insert({"format", "catalog"});
  auto parsed = cli::parse_command_tokens(tokens, value_options, flag_options);
  if (auto it = parsed.options.find("format"); it != parsed.options.end()) globals.format = it->second;
  if (auto it = parsed.options.find("catalog"); it != parsed.options.end())
    globals.catalog_path = it->second;
  return parsed;
}

// ---------------------------------------------------------------------------
// block

void print_block_table(const CatalogEntry& e, const std::vector<Violation>& violations) {
  const auto& b = e.block;
  const auto& inv = b.invariants();
  fmt::print("block             {}\n", b.name());
  fmt::print("family            {}\n", to_string(e.family.id));
  fmt::print("chi_h             {}\n", inv.chi_h);
  fmt::print("c1^2              {}\n", inv.c1_sq);
  fmt::print("sigma             {}\n", inv.sigma);
  fmt::print("euler             {}\n", inv.euler);
  fmt::print("c2                {}\n", inv.c2);
  fmt::print("fiber genus       {}\n", b.fiber_genus());
  fmt::print("singular fibers   {}\n", b.singular_fibers());
  fmt::print("simply connected  {}\n", yes_no(b.simply_connected()));
  fmt::print("valid             {}\n", yes_no(violations.empty()));
  for (const auto& v : violations) fmt::print("  violation {}: {}\n", to_string(v.kind), v.detail);
}

constexpr const char* kBlockCsvHeader =
    "name,family,chi_h,c1_sq,sigma,euler,c2,fiber_genus,singular_fibers,simply_connected,valid";

std::string block_csv_row(const CatalogEntry& e, bool valid) {
  const auto& b = e.block;
  const auto& inv = b.invariants();
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", b.name(), to_string(e.family.id),
                     inv.chi_h, inv.c1_sq, inv.sigma, inv.euler, inv.c2, b.fiber_genus(),
                     b.singular_fibers(), b.simply_connected(), valid);
}

int cmd_block(const std::vector<std::string>& tokens, Globals& globals) {
  auto parsed = parse_prefix(tokens, globals, {}, {});
  const Format f = globals.fmt();
  require_not_svg(f);
  if (parsed.blocks.size() != 1) throw UsageError("block: expected exactly one block specification");
  const auto& entry = parsed.blocks.front();
  const auto violations = validate_block(entry.block);

  switch (f) {
    case Format::json: {
      Json j = to_json(entry);
      j["violations"] = to_json(violations);
      j["valid"] = violations.empty();
      print_json(j);
      break;
    }
    case Format::csv:
      fmt::print("{}\n{}\n", kBlockCsvHeader, block_csv_row(entry, violations.empty()));
      break;
    default: print_block_table(entry, violations);
  }
  if (!violations.empty()) {
    std::cerr << "block '" << entry.block.name() << "' violates " << violations.size()
              << " invariant(s)\n";
    return kDomainError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// product

void print_triple(Format f, const ChernTriple& t, Json context) {
  switch (f) {
    case Format::json:
      context["triple"] = to_json(t);
      print_json(context);
      break;
    case Format::csv: fmt::print("c3,c1_cubed,c1c2\n{},{},{}\n", t.c3, t.c1_cubed, t.c1c2); break;
    default: fmt::print("c3     {}\nc1^3   {}\nc1c2   {}\n", t.c3, t.c1_cubed, t.c1c2);
  }
}

int cmd_product(const std::vector<std::string>& tokens, Globals& globals) {
  auto parsed = parse_prefix(tokens, globals, {"surface-genus"}, {});
  const Format f = globals.fmt();
  require_not_svg(f);
  if (parsed.blocks.size() != 1) throw UsageError("product: expected exactly one block specification");
  auto it = parsed.options.find("surface-genus");
  if (it == parsed.options.end()) throw UsageError("product: --surface-genus is required");
  const Integer genus = cli::parse_integer(it->second, "--surface-genus");
  const auto& block = parsed.blocks.front().block;
  require_valid(block);

  const auto triple = chern_numbers_of_product(block.invariants(), SurfaceInvariants(genus));
  if (f == Format::table) fmt::print("{} x S(g={})\n", block.name(), genus);
  print_triple(f, triple, {{"block", to_json(block)}, {"surface_genus", genus}});
  return kOk;
}

// ---------------------------------------------------------------------------
// fibersum

int cmd_fibersum(const std::vector<std::string>& tokens, Globals& globals) {
  auto parsed = parse_prefix(tokens, globals, {}, {"oracle"});
  const Format f = globals.fmt();
  require_not_svg(f);
  if (parsed.blocks.size() != 2) throw UsageError("fibersum: expected two block specifications");
  const auto& b1 = parsed.blocks[0].block;
  const auto& b2 = parsed.blocks[1].block;
  const bool with_oracle = parsed.flags.contains("oracle");

  const auto triple = halic_construction(b1, b2);
  std::optional<ChernTriple> oracle;
  if (with_oracle) oracle = halic_construction_via_oracle(b1, b2);
  const bool agrees = !oracle || *oracle == triple;
  const auto divisibility = halic_divisibility_check(triple);

  switch (f) {
    case Format::json: {
      Json j{{"first", to_json(b1)},
             {"second", to_json(b2)},
             {"triple", to_json(triple)},
             {"divisibility", to_json(divisibility)},
             {"c1_cubed_mod6", triple.c1_cubed % 6 == 0}};
      j["oracle"] = oracle ? to_json(*oracle) : Json(nullptr);
      j["oracle_agrees"] = oracle ? Json(agrees) : Json(nullptr);
      print_json(j);
      break;
    }
    case Format::csv:
      fmt::print("first,second,c3,c1_cubed,c1c2{}\n", with_oracle ? ",oracle_agrees" : "");
      fmt::print("{},{},{},{},{}{}\n", b1.name(), b2.name(), triple.c3, triple.c1_cubed,
                 triple.c1c2, with_oracle ? fmt::format(",{}", agrees) : std::string{});
      break;
    default:
      fmt::print("M = ({} x S[g={}]) # ({} x S[g={}])\n", b1.name(), b2.fiber_genus(), b2.name(),
                 b1.fiber_genus());
      fmt::print("c3     {}\nc1^3   {}\nc1c2   {}\n", triple.c3, triple.c1_cubed, triple.c1c2);
      fmt::print("divisibility  c3 even: {}, c1^3 even: {}, c1c2 = 0 mod 24: {}\n",
                 yes_no(divisibility.c3_even), yes_no(divisibility.c1cubed_even),
                 yes_no(divisibility.c1c2_mod24));
      if (oracle)
        fmt::print("oracle ({}, {}, {}) {}\n", oracle->c3, oracle->c1_cubed, oracle->c1c2,
                   agrees ? "agrees" : "DISAGREES");
  }
  if (!agrees) {
    std::cerr << "oracle mismatch: closed form " << triple << ", oracle " << *oracle << '\n';
    return kDomainError;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string target;
  std::optional<Integer> max_m, max_k, max_knot_genus;
  std::vector<std::string> families;
  std::string generic_chi, generic_c1sq, generic_genus;
  std::string config;
  int threads = 0;
  bool serial = false;
  bool use_catalog = false;
};

SearchBounds bounds_from_args(const SearchArgs& a, const Globals& globals) {
  SearchBounds b;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw std::runtime_error("cannot open search config '" + a.config + "'");
    try {
      b = search_bounds_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
      throw UsageError("search config: " + std::string(e.what()));
    }
  } else {
    std::set<FamilyId> families;
    if (a.families.empty())
      families = {FamilyId::elliptic, FamilyId::ruled_spheres, FamilyId::knot_surgered_elliptic};
    for (const auto& name : a.families) {
      try {
        families.insert(parse_family(name));
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
    }
    const auto defaults = default_search_bounds();
    if (families.contains(FamilyId::elliptic))
      b.elliptic_m = IntRange{1, a.max_m.value_or(defaults.elliptic_m->hi)};
    b.ruled_spheres = families.contains(FamilyId::ruled_spheres);
    if (families.contains(FamilyId::knot_surgered_elliptic)) {
      b.knot_k = IntRange{1, a.max_k.value_or(defaults.knot_k->hi)};
      b.knot_genus = IntRange{0, a.max_knot_genus.value_or(defaults.knot_genus->hi)};
    }
  }
  const int given = !a.generic_chi.empty() + !a.generic_c1sq.empty() + !a.generic_genus.empty();
  if (given != 0 && given != 3)
    throw UsageError("--generic-chi, --generic-c1sq and --generic-genus must be given together");
  if (given == 3)
    b.generic = GenericGrid{parse_range(a.generic_chi, "--generic-chi"),
                            parse_range(a.generic_c1sq, "--generic-c1sq"),
                            parse_range(a.generic_genus, "--generic-genus")};
  if (a.use_catalog) b.extra = globals.catalog();

  constexpr Integer kLimit = 100000;
  auto check = [](const std::optional<IntRange>& r, const char* what) {
    if (r && (r->lo < -kLimit || r->hi > kLimit))
      throw UsageError(std::string(what) + " bound exceeds " + std::to_string(kLimit));
  };
  check(b.elliptic_m, "elliptic m");
  check(b.knot_k, "knot k");
  check(b.knot_genus, "knot genus");
  if (b.generic) {
    check(b.generic->chi_h, "generic chi_h");
    check(b.generic->c1_sq, "generic c1_sq");
    check(b.generic->fiber_genus, "generic genus");
  }
  return b;
}

int cmd_search(const SearchArgs& args, const Globals& globals) {
  const Format f = globals.fmt();
  require_not_svg(f);
  const auto target = parse_target(args.target);
  const auto bounds = bounds_from_args(args, globals);
  const auto result = args.serial ? search_realizations_serial(target, bounds)
                                  : search_realizations(target, bounds, {args.threads});

  if (result.obstruction)
    std::cerr << "obstruction for " << target << ": " << result.obstruction->message() << '\n';

  switch (f) {
    case Format::json: {
      Json j = to_json(result);
      j["target"] = to_json(target);
      j["bounds"] = to_json(bounds);
      print_json(j);
      break;
    }
    case Format::csv:
      fmt::print("first,second,c3,c1_cubed,c1c2\n");
      for (const auto& r : result.realizations)
        fmt::print("{},{},{},{},{}\n", r.first.block.name(), r.second.block.name(), r.triple.c3,
                   r.triple.c1_cubed, r.triple.c1c2);
      break;
    default:
      fmt::print("target ({}, {}, {}): {} realization(s) among {} candidate blocks\n", target.c3,
                 target.c1_cubed, target.c1c2, result.realizations.size(), result.candidates);
      for (const auto& r : result.realizations)
        fmt::print("  {} [g={}] + {} [g={}] -> ({}, {}, {})\n", r.first.block.name(),
                   r.first.block.fiber_genus(), r.second.block.name(),
                   r.second.block.fiber_genus(), r.triple.c3, r.triple.c1_cubed, r.triple.c1c2);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// classify, plot, catalog

int cmd_classify(Integer chi, Integer c1sq, const Globals& globals) {
  const Format f = globals.fmt();
  require_not_svg(f);
  const auto region = classify_geography_point(chi, c1sq);
  auto join = [](const auto& items) {
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : ";") + to_string(item);
    return out;
  };
  switch (f) {
    case Format::json: print_json(to_json(region)); break;
    case Format::csv:
      fmt::print("chi_h,c1_sq,labels,lines,on_elliptic_axis,signature_sign,basic_class_count\n");
      fmt::print("{},{},{},{},{},{},{}\n", chi, c1sq, join(region.labels), join(region.lines),
                 region.on_elliptic_axis, region.signature_sign,
                 region.basic_class_count ? std::to_string(*region.basic_class_count) : "");
      break;
    default:
      fmt::print("point            (chi_h, c1^2) = ({}, {})\n", chi, c1sq);
      fmt::print("regions          {}\n", region.labels.empty() ? "(none)" : join(region.labels));
      fmt::print("on lines         {}\n", region.lines.empty() ? "(none)" : join(region.lines));
      fmt::print("elliptic axis    {}\n", yes_no(region.on_elliptic_axis));
      fmt::print("signature        {}\n", region.signature_sign > 0   ? "sigma > 0"
                                          : region.signature_sign < 0 ? "sigma < 0"
                                                                      : "sigma = 0");
      if (region.basic_class_count)
        fmt::print("basic classes    {}\n", *region.basic_class_count);
  }
  return kOk;
}

int cmd_plot(const std::string& chi, const std::string& c1sq, const std::string& output,
             const Globals& globals) {
  const Format f = globals.fmt();
  const PlotWindow window{parse_range(chi, "--chi"), parse_range(c1sq, "--c1sq")};
  constexpr Integer kMaxPoints = 10'000'000;
  if (window.chi_h.size() * window.c1_sq.size() > kMaxPoints)
    throw UsageError("plot window too large");

  std::string text;
  switch (f) {
    case Format::svg: text = render_geography_svg(window); break;
    case Format::json: {
      Json points = Json::array();
      for (Integer x = window.chi_h.lo; x <= window.chi_h.hi; ++x)
        for (Integer y = window.c1_sq.lo; y <= window.c1_sq.hi; ++y)
          points.push_back(to_json(classify_geography_point(x, y)));
      text = points.dump(2) + "\n";
      break;
    }
    default: text = render_geography_csv(window);
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write '" + output + "'");
    out << text;
  }
  return kOk;
}

int cmd_catalog(const Globals& globals) {
  const Format f = globals.fmt();
  require_not_svg(f);
  auto entries = globals.catalog();
  std::stable_sort(entries.begin(), entries.end(), canonical_less);
  switch (f) {
    case Format::json: {
      Json out = Json::array();
      for (const auto& e : entries) {
        Json j = to_json(e);
        j["violations"] = to_json(validate_block(e.block));
        out.push_back(j);
      }
      print_json(out);
      break;
    }
    case Format::csv:
      fmt::print("{}\n", kBlockCsvHeader);
      for (const auto& e : entries)
        fmt::print("{}\n", block_csv_row(e, validate_block(e.block).empty()));
      break;
    default:
      fmt::print("{:<22} {:<24} {:>6} {:>6} {:>6} {:>6} {:>4} {:>6} {}\n", "name", "family",
                 "chi_h", "c1^2", "sigma", "euler", "g", "n", "valid");
      for (const auto& e : entries) {
        const auto& inv = e.block.invariants();
        fmt::print("{:<22} {:<24} {:>6} {:>6} {:>6} {:>6} {:>4} {:>6} {}\n", e.block.name(),
                   to_string(e.family.id), inv.chi_h, inv.c1_sq, inv.sigma, inv.euler,
                   e.block.fiber_genus(), e.block.singular_fibers(),
                   yes_no(validate_block(e.block).empty()));
      }
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Chern-number geography of symplectic 6-manifolds built by fiber sums"};
  app.name("chern6");
  app.require_subcommand(1);

  Globals globals;
  auto add_globals = [&](CLI::App* cmd) {
    cmd->add_option("--format", globals.format, "Output format: table, json, csv, svg (plot only)");
    cmd->add_option("--catalog", globals.catalog_path, "Catalog JSON file (default: built-in)");
  };
  add_globals(&app);

  const char* block_help =
      "Block specs: elliptic --m M | ruled-spheres | knot-elliptic --k K --knot-genus G | "
      "generic --chi X --c1sq Y --genus G --n N [--not-simply-connected] [--name NAME]";

  auto* block = app.add_subcommand("block", std::string("Show a block and its invariants. ") + block_help);
  block->prefix_command();
  block->allow_extras();

  auto* product = app.add_subcommand(
      "product", std::string("Chern numbers of X x S (--surface-genus G). ") + block_help);
  product->prefix_command();
  product->allow_extras();

  auto* fibersum = app.add_subcommand(
      "fibersum",
      std::string("Chern numbers of the fiber sum of two blocks (--oracle cross-checks). ") +
          block_help);
  fibersum->prefix_command();
  fibersum->allow_extras();

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "Search block pairs realizing a target triple");
  add_globals(search);
  search->add_option("--target", sargs.target, "Target c3,c1^3,c1c2")->required();
  search->add_option("--max-m", sargs.max_m, "Largest m for E(m) (default 5)");
  search->add_option("--max-k", sargs.max_k, "Largest k for E(k)_K (default 3)");
  search->add_option("--max-knot-genus", sargs.max_knot_genus, "Largest knot genus (default 2)");
  search->add_option("--families", sargs.families,
                     "Families to include (default: elliptic ruled-spheres knot-elliptic)");
  search->add_option("--generic-chi", sargs.generic_chi, "Generic grid chi_h range lo..hi");
  search->add_option("--generic-c1sq", sargs.generic_c1sq, "Generic grid c1^2 range lo..hi");
  search->add_option("--generic-genus", sargs.generic_genus, "Generic grid fiber genus range lo..hi");
  search->add_option("--config", sargs.config, "JSON file with search bounds");
  search->add_option("--threads", sargs.threads, "Worker threads (0: OpenMP default)");
  search->add_flag("--serial", sargs.serial, "Use the serial reference search");
  search->add_flag("--use-catalog", sargs.use_catalog, "Add the catalog blocks to the candidates");

  Integer chi = 0, c1sq = 0;
  auto* classify = app.add_subcommand("classify", "Classify a point of the (chi_h, c1^2) plane");
  add_globals(classify);
  classify->add_option("--chi", chi, "chi_h")->required();
  classify->add_option("--c1sq", c1sq, "c1^2")->required();

  std::string plot_chi, plot_c1sq, plot_output;
  auto* plot = app.add_subcommand("plot", "Emit the geography chart as CSV, JSON or SVG");
  add_globals(plot);
  plot->add_option("--chi", plot_chi, "chi_h range lo..hi")->required();
  plot->add_option("--c1sq", plot_c1sq, "c1^2 range lo..hi")->required();
  plot->add_option("--output,-o", plot_output, "Write to a file instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "List the catalog blocks");
  add_globals(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (*block) return cmd_block(block->remaining(), globals);
  if (*product) return cmd_product(product->remaining(), globals);
  if (*fibersum) return cmd_fibersum(fibersum->remaining(), globals);
  if (*search) return cmd_search(sargs, globals);
  if (*classify) return cmd_classify(chi, c1sq, globals);
  if (*plot) return cmd_plot(plot_chi, plot_c1sq, plot_output, globals);
  if (*catalog) return cmd_catalog(globals);
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const chern::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const chern::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
}
