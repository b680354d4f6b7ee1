#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

using Integer = std::int64_t;

/// Numeric invariants of a closed almost complex 4-manifold.
///
/// The record is a plain aggregate so that inconsistent values can be
/// represented and reported by validate(); use complete_invariants() to
/// build a consistent record from (chi_h, c1^2).
struct FourManifoldInvariants {
  Integer sigma = 0;
  Integer euler = 0;
  Integer chi_h = 0;
  Integer c1_sq = 0;
  Integer c2 = 0;

  friend bool operator==(const FourManifoldInvariants&, const FourManifoldInvariants&) = default;
};

/// Closed oriented surface of genus g; euler is also <c1(S), [S]>.
class SurfaceInvariants {
 public:
  explicit SurfaceInvariants(Integer genus);

  Integer genus() const noexcept { return genus_; }
  Integer euler() const noexcept { return 2 - 2 * genus_; }

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;

 private:
  Integer genus_;
};

enum class ViolationKind {
  chern_square,         // c1^2 != 3 sigma + 2 e
  second_chern_euler,   // c2 != e
  holomorphic_euler,    // 4 chi_h != sigma + e
  fibration_euler,      // e != 2(2 - 2g) + n
  simple_connectivity,  // simply connected but 0 < n <= 2g
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(ViolationKind kind);

/// A 4-manifold carrying a Lefschetz fibration over the sphere, with only
/// fishtail singular fibers.
class LefschetzBlock {
 public:
  // Derives sigma, e, c2 from (chi_h, c1^2).
  LefschetzBlock(std::string name, Integer chi_h, Integer c1_sq, Integer fiber_genus,
                 Integer singular_fibers, bool simply_connected);
  // Takes the invariant record as given, consistent or not.
  LefschetzBlock(std::string name, FourManifoldInvariants invariants, Integer fiber_genus,
                 Integer singular_fibers, bool simply_connected);

  const std::string& name() const noexcept { return name_; }
  const FourManifoldInvariants& invariants() const noexcept { return invariants_; }
  Integer fiber_genus() const noexcept { return fiber_genus_; }
  Integer singular_fibers() const noexcept { return singular_fibers_; }
  bool simply_connected() const noexcept { return simply_connected_; }
  SurfaceInvariants fiber() const { return SurfaceInvariants(fiber_genus_); }

  friend bool operator==(const LefschetzBlock&, const LefschetzBlock&) = default;

 private:
  std::string name_;
  FourManifoldInvariants invariants_;
  Integer fiber_genus_;
  Integer singular_fibers_;
  bool simply_connected_;
};

/// Raised where a valid block is required; carries every violated identity.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string block_name, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Euler characteristic 2(2 - 2g) + n of a Lefschetz fibration over S^2.
Integer euler_from_fibration(Integer genus, Integer singular_fibers);

/// e = c2 = 12 chi_h - c1^2 and sigma = c1^2 - 8 chi_h.
FourManifoldInvariants complete_invariants(Integer chi_h, Integer c1_sq);

std::vector<Violation> validate(const FourManifoldInvariants& inv);

/// Every violated identity of the block, in ViolationKind order. An empty
/// result means the block is valid. The n > 2g simple-connectivity rule is
/// applied only to fibrations with singular fibers (n > 0).
std::vector<Violation> validate_block(const LefschetzBlock& block);

void require_valid(const LefschetzBlock& block);

}  // namespace chern
