#pragma once

// Parsing of block specifications on the command line, e.g.
//   elliptic --m 3 ruled-spheres
//   knot-elliptic --k 2 --knot-genus 0
//   generic --chi 1 --c1sq 8 --genus 0 --n 0 [--not-simply-connected] [--name X]

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chern/catalog.hpp"

namespace chern::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandTokens {
  std::vector<CatalogEntry> blocks;
  // Command-level options found among the tokens, keyed without dashes.
  std::map<std::string, std::string> options;
  std::set<std::string> flags;
};

/// value_options / flag_options name the command-level options accepted
/// anywhere in the token stream. Throws UsageError (or ParameterError from
/// the catalog constructors).
CommandTokens parse_command_tokens(const std::vector<std::string>& tokens,
                                   const std::set<std::string>& value_options,
                                   const std::set<std::string>& flag_options);

Integer parse_integer(const std::string& text, const std::string& what);

}  // namespace chern::cli
