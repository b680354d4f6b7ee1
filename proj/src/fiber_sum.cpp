#include "chern/fiber_sum.hpp"

#include "chern/class_algebra.hpp"

namespace chern {

namespace {

struct CrossSectionClasses {
  GradedClassExpression c1_sq;
  GradedClassExpression c2;
};

const CrossSectionClasses& cross_section_classes() {
  static const CrossSectionClasses classes = [] {
    const auto total =
        total_chern_class(Factor::surface1) * total_chern_class(Factor::surface2);
    return CrossSectionClasses{total.graded_part(2).pow(2), total.graded_part(4)};
  }();
  return classes;
}

ChernTriple oracle_from_invariants(const FourManifoldInvariants& x1, Integer g1,
                                   const FourManifoldInvariants& x2, Integer g2) {
  const SurfaceInvariants s1(g1);
  const SurfaceInvariants s2(g2);
  const auto m1 = chern_numbers_of_product(x1, s2, Factor::block1, Factor::surface2);
  const auto m2 = chern_numbers_of_product(x2, s1, Factor::block2, Factor::surface1);
  return fiber_sum_corrections(m1, m2, cross_section_of_surfaces(g1, g2));
}

}  // namespace

BlockData block_data(const LefschetzBlock& block) {
  return {block.invariants().chi_h, block.invariants().c1_sq, block.fiber_genus()};
}

CrossSectionInvariants cross_section_of_surfaces(Integer g1, Integer g2) {
  const auto& classes = cross_section_classes();
  const auto ctx = EvaluationContext::surfaces(SurfaceInvariants(g1), SurfaceInvariants(g2));
  return {evaluate(classes.c1_sq, ctx), evaluate(classes.c2, ctx)};
}

ChernTriple fiber_sum_corrections(const ChernTriple& m1, const ChernTriple& m2,
                                  const CrossSectionInvariants& x) {
  return {m1.c3 + m2.c3 - 2 * x.c2,
          m1.c1_cubed + m2.c1_cubed - 6 * x.c1_sq,
          m1.c1c2 + m2.c1c2 - 2 * x.c1_sq - 2 * x.c2};
}

ChernTriple closed_form_triple(const BlockData& b1, const BlockData& b2) noexcept {
  const Integer a1 = 1 - b1.fiber_genus;
  const Integer a2 = 1 - b2.fiber_genus;
  return {2 * (12 * b1.chi_h - b1.c1_sq) * a2 + 2 * (12 * b2.chi_h - b2.c1_sq) * a1 - 8 * a1 * a2,
          6 * a2 * b1.c1_sq + 6 * a1 * b2.c1_sq - 48 * a1 * a2,
          24 * a2 * b1.chi_h + 24 * a1 * b2.chi_h - 24 * a1 * a2};
}

ChernTriple oracle_triple(const BlockData& b1, const BlockData& b2) {
  return oracle_from_invariants(complete_invariants(b1.chi_h, b1.c1_sq), b1.fiber_genus,
                                complete_invariants(b2.chi_h, b2.c1_sq), b2.fiber_genus);
}

ChernTriple halic_construction(const LefschetzBlock& b1, const LefschetzBlock& b2) {
  require_valid(b1);
  require_valid(b2);
  return closed_form_triple(block_data(b1), block_data(b2));
}

ChernTriple halic_construction_via_oracle(const LefschetzBlock& b1, const LefschetzBlock& b2) {
  require_valid(b1);
  require_valid(b2);
  return oracle_from_invariants(b1.invariants(), b1.fiber_genus(), b2.invariants(),
                                b2.fiber_genus());
}

}  // namespace chern
