#pragma once

// Chern numbers of M = (X1 x S2) #_{S1 x S2} (X2 x S1), where S_i is the
// generic fiber of the Lefschetz fibration on X_i, summed along the
// codimension-two locus S1 x S2 with trivial normal bundle.

#include "chern/chern_triple.hpp"
#include "chern/invariants.hpp"

namespace chern {

/// c1^2 and c2 of the codimension-two summing locus.
struct CrossSectionInvariants {
  Integer c1_sq = 0;
  Integer c2 = 0;

  friend bool operator==(const CrossSectionInvariants&, const CrossSectionInvariants&) = default;
};

/// The three numbers the closed forms read from a block. Kernels taking
/// this type accept arbitrary integers, geometric or not.
struct BlockData {
  Integer chi_h = 0;
  Integer c1_sq = 0;
  Integer fiber_genus = 0;

  friend bool operator==(const BlockData&, const BlockData&) = default;
};

BlockData block_data(const LefschetzBlock& block);

/// Invariants of S1 x S2 obtained by evaluating c(S1)c(S2) symbolically.
CrossSectionInvariants cross_section_of_surfaces(Integer g1, Integer g2);

/// Generic correction for a fiber sum of two 6-manifolds along a common
/// codimension-two submanifold with trivial normal bundle.
ChernTriple fiber_sum_corrections(const ChernTriple& m1, const ChernTriple& m2,
                                  const CrossSectionInvariants& x);

/// Closed forms in (chi_h, c1^2, g) of both blocks.
ChernTriple closed_form_triple(const BlockData& b1, const BlockData& b2) noexcept;

/// Same triple through product expansion and fiber-sum corrections only.
ChernTriple oracle_triple(const BlockData& b1, const BlockData& b2);

/// Closed-form path; both blocks must validate (throws ValidationError).
ChernTriple halic_construction(const LefschetzBlock& b1, const LefschetzBlock& b2);

/// Symbolic path; both blocks must validate (throws ValidationError).
ChernTriple halic_construction_via_oracle(const LefschetzBlock& b1, const LefschetzBlock& b2);

}  // namespace chern
