#pragma once

// Formal commutative algebra of Chern-class monomials on products of
// 4-manifolds and surfaces, with evaluation on the fundamental class.
//
// Every generator has even real degree, so the algebra is strictly
// commutative. Products are never truncated: a monomial of degree larger than
// the ambient dimension survives until evaluate() rejects it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chern/chern_triple.hpp"
#include "chern/invariants.hpp"

namespace chern {

enum class Factor : std::uint8_t { block1 = 0, block2 = 1, surface1 = 2, surface2 = 3 };
enum class ChernKind : std::uint8_t { c1 = 0, c2 = 1 };

inline constexpr std::size_t kFactorCount = 4;

constexpr bool is_block(Factor f) noexcept { return f == Factor::block1 || f == Factor::block2; }
constexpr int real_dimension(Factor f) noexcept { return is_block(f) ? 4 : 2; }

struct ClassGenerator {
  Factor source;
  ChernKind kind;

  constexpr int degree() const noexcept { return kind == ChernKind::c1 ? 2 : 4; }
  friend constexpr bool operator==(const ClassGenerator&, const ClassGenerator&) = default;
};

std::string to_string(Factor f);
std::string to_string(ClassGenerator g);

/// A multiset of generators, stored as one exponent per (factor, kind).
class Monomial {
 public:
  static constexpr std::size_t kSlots = kFactorCount * 2;

  Monomial() = default;
  explicit Monomial(ClassGenerator g);

  int degree() const noexcept;
  int factor_degree(Factor f) const noexcept;
  unsigned exponent(ClassGenerator g) const noexcept { return exps_[slot(g)]; }
  bool is_unit() const noexcept;

  Monomial operator*(const Monomial& rhs) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded order: lower degree first, then lexicographic on exponents.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept;

  std::string to_string() const;

 private:
  static constexpr std::size_t slot(ClassGenerator g) noexcept {
    return static_cast<std::size_t>(g.source) * 2 + static_cast<std::size_t>(g.kind);
  }
  std::array<std::uint16_t, kSlots> exps_{};
};

/// Finite integer combination of monomials in canonical form: terms sorted
/// by monomial, no zero coefficients.
class GradedClassExpression {
 public:
  using Term = std::pair<Monomial, Integer>;

  GradedClassExpression() = default;

  static GradedClassExpression constant(Integer c);
  static GradedClassExpression one() { return constant(1); }
  static GradedClassExpression generator(Factor f, ChernKind k);
  static GradedClassExpression c1(Factor f) { return generator(f, ChernKind::c1); }
  static GradedClassExpression c2(Factor f) { return generator(f, ChernKind::c2); }

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const noexcept;

  // Degree of a homogeneous nonzero expression, nullopt otherwise.
  std::optional<int> homogeneous_degree() const noexcept;
  GradedClassExpression graded_part(int degree) const;

  GradedClassExpression operator+(const GradedClassExpression& rhs) const;
  GradedClassExpression operator-(const GradedClassExpression& rhs) const;
  GradedClassExpression operator*(const GradedClassExpression& rhs) const;
  GradedClassExpression operator*(Integer scalar) const;
  GradedClassExpression pow(unsigned exponent) const;

  friend bool operator==(const GradedClassExpression&, const GradedClassExpression&) = default;

  /// Deterministic rendering, e.g. "3*c1(X1)^2*c1(S2) + c2(X1)".
  std::string to_string() const;

 private:
  explicit GradedClassExpression(std::vector<Term> raw);
  void canonicalize();
  std::vector<Term> terms_;
};

GradedClassExpression multiply(const GradedClassExpression& a, const GradedClassExpression& b);

/// Values used to evaluate monomials on a product manifold. Each present
/// factor belongs to the ambient product.
class EvaluationContext {
 public:
  struct BlockValues {
    Integer c1_sq;
    Integer c2;
  };

  EvaluationContext& with_block(Factor f, const FourManifoldInvariants& inv);
  EvaluationContext& with_surface(Factor f, const SurfaceInvariants& s);

  static EvaluationContext product(Factor block, const FourManifoldInvariants& x, Factor surface,
                                   const SurfaceInvariants& s);
  static EvaluationContext surfaces(const SurfaceInvariants& s1, const SurfaceInvariants& s2);

  bool contains(Factor f) const noexcept;
  int dimension() const noexcept;

  const std::optional<BlockValues>& block(Factor f) const { return blocks_[index(f)]; }
  const std::optional<Integer>& surface_euler(Factor f) const { return surfaces_[index(f) - 2]; }

 private:
  static std::size_t index(Factor f) noexcept { return static_cast<std::size_t>(f); }
  std::array<std::optional<BlockValues>, 2> blocks_{};
  std::array<std::optional<Integer>, 2> surfaces_{};
};

/// Evaluates a homogeneous top-degree expression on the fundamental class.
/// Throws DimensionMismatch unless the expression is zero or homogeneous of
/// degree ctx.dimension(); throws EvaluationError for monomials on factors
/// outside the product and for products with two 4-manifold factors.
Integer evaluate(const GradedClassExpression& e, const EvaluationContext& ctx);

/// c(X x S) = c(X) c(S) = (1 + c1(X) + c2(X)) (1 + c1(S)), fully expanded.
GradedClassExpression total_chern_of_product(Factor block, Factor surface);

/// Total Chern class of a single factor: 1 + c1 + c2 for a 4-manifold,
/// 1 + c1 for a surface.
GradedClassExpression total_chern_class(Factor f);

/// (c3, c1^3, c1 c2) of X x S, computed by symbolic expansion of the total
/// Chern class and evaluation. Tags default to the first factors.
ChernTriple chern_numbers_of_product(const FourManifoldInvariants& x, const SurfaceInvariants& s,
                                     Factor block = Factor::block1,
                                     Factor surface = Factor::surface1);

}  // namespace chern
