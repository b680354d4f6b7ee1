#include "block_spec.hpp"

#include <charconv>

namespace chern::cli {

namespace {

bool is_option(const std::string& token) {
  return token.size() > 2 && token.starts_with("--");
}

struct PendingBlock {
  FamilyId family;
  std::map<std::string, std::string> values;
  bool not_simply_connected = false;
};

const std::map<std::string, std::string>& block_option_keys(FamilyId id) {
  static const std::map<FamilyId, std::map<std::string, std::string>> keys{
      {FamilyId::elliptic, {{"m", "m"}}},
      {FamilyId::ruled_spheres, {}},
      {FamilyId::knot_surgered_elliptic, {{"k", "k"}, {"knot-genus", "knot_genus"}}},
      {FamilyId::generic,
       {{"chi", "chi_h"},
        {"c1sq", "c1_sq"},
        {"genus", "fiber_genus"},
        {"n", "singular_fibers"},
        {"name", "name"}}},
  };
  return keys.at(id);
}

CatalogEntry finish(const PendingBlock& p) {
  BlockFamily family{p.family, {}};
  std::string name;
  for (const auto& [key, text] : p.values) {
    if (key == "name")
      name = text;
    else
      family.params[key] = parse_integer(text, "--" + key);
  }
  if (p.family == FamilyId::generic)
    family.params["simply_connected"] = p.not_simply_connected ? 0 : 1;
  return make_entry(family, name);
}

}  // namespace

Integer parse_integer(const std::string& text, const std::string& what) {
  Integer value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  return value;
}

CommandTokens parse_command_tokens(const std::vector<std::string>& tokens,
                                   const std::set<std::string>& value_options,
                                   const std::set<std::string>& flag_options) {
  CommandTokens out;
  std::optional<PendingBlock> pending;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (!is_option(token)) {
      if (pending) out.blocks.push_back(finish(*pending));
      try {
        pending = PendingBlock{parse_family(token), {}, false};
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
      continue;
    }

    std::string key = token.substr(2);
    std::optional<std::string> inline_value;
    if (auto eq = key.find('='); eq != std::string::npos) {
      inline_value = key.substr(eq + 1);
      key = key.substr(0, eq);
    }
    auto take_value = [&]() -> std::string {
      if (inline_value) return *inline_value;
      if (i + 1 >= tokens.size()) throw UsageError("--" + key + " needs a value");
      return tokens[++i];
    };

    if (flag_options.contains(key)) {
      out.flags.insert(key);
      continue;
    }
    if (value_options.contains(key)) {
      out.options[key] = take_value();
      continue;
    }
    if (!pending) throw UsageError("option --" + key + " given before any block family");
    if (pending->family == FamilyId::generic && key == "not-simply-connected") {
      pending->not_simply_connected = true;
      continue;
    }
    const auto& keys = block_option_keys(pending->family);
    auto it = keys.find(key);
    if (it == keys.end())
      throw UsageError("unknown option --" + key + " for " + to_string(pending->family));
    pending->values[it->second] = take_value();
  }
  if (pending) out.blocks.push_back(finish(*pending));
  return out;
}

}  // namespace chern::cli
