#include "chern/class_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chern {

std::string to_string(Factor f) {
  switch (f) {
    case Factor::block1: return "X1";
    case Factor::block2: return "X2";
    case Factor::surface1: return "S1";
    case Factor::surface2: return "S2";
  }
  return "?";
}

std::string to_string(ClassGenerator g) {
  return (g.kind == ChernKind::c1 ? "c1(" : "c2(") + to_string(g.source) + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(ClassGenerator g) { exps_[slot(g)] = 1; }

int Monomial::degree() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < kSlots; ++i) d += exps_[i] * (i % 2 == 0 ? 2 : 4);
  return d;
}

int Monomial::factor_degree(Factor f) const noexcept {
  const auto base = static_cast<std::size_t>(f) * 2;
  return 2 * exps_[base] + 4 * exps_[base + 1];
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const noexcept {
  Monomial out;
  for (std::size_t i = 0; i < kSlots; ++i)
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] + rhs.exps_[i]);
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // Higher powers of earlier generators sort first, so c1(X1)^2 precedes c2(X1).
  return b.exps_ < a.exps_;
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kSlots; ++i) {
    if (exps_[i] == 0) continue;
    const ClassGenerator g{static_cast<Factor>(i / 2), static_cast<ChernKind>(i % 2)};
    if (!first) os << '*';
    first = false;
    os << chern::to_string(g);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GradedClassExpression

GradedClassExpression::GradedClassExpression(std::vector<Term> raw) : terms_(std::move(raw)) {
  canonicalize();
}

void GradedClassExpression::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

GradedClassExpression GradedClassExpression::constant(Integer c) {
  return GradedClassExpression({{Monomial{}, c}});
}

GradedClassExpression GradedClassExpression::generator(Factor f, ChernKind k) {
  return GradedClassExpression({{Monomial(ClassGenerator{f, k}), 1}});
}

Integer GradedClassExpression::coefficient(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  return it != terms_.end() && it->first == m ? it->second : 0;
}

std::optional<int> GradedClassExpression::homogeneous_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().first.degree();
  // Terms are sorted by degree first.
  if (terms_.back().first.degree() != d) return std::nullopt;
  return d;
}

GradedClassExpression GradedClassExpression::graded_part(int degree) const {
  GradedClassExpression out;
  for (const auto& t : terms_)
    if (t.first.degree() == degree) out.terms_.push_back(t);
  return out;
}

GradedClassExpression GradedClassExpression::operator+(const GradedClassExpression& rhs) const {
  std::vector<Term> raw = terms_;
  raw.insert(raw.end(), rhs.terms_.begin(), rhs.terms_.end());
  return GradedClassExpression(std::move(raw));
}

GradedClassExpression GradedClassExpression::operator-(const GradedClassExpression& rhs) const {
  return *this + rhs * Integer{-1};
}

GradedClassExpression GradedClassExpression::operator*(const GradedClassExpression& rhs) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) raw.emplace_back(ma * mb, ca * cb);
  return GradedClassExpression(std::move(raw));
}

GradedClassExpression GradedClassExpression::operator*(Integer scalar) const {
  std::vector<Term> raw = terms_;
  for (auto& t : raw) t.second *= scalar;
  return GradedClassExpression(std::move(raw));
}

GradedClassExpression GradedClassExpression::pow(unsigned exponent) const {
  GradedClassExpression out = one();
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::string GradedClassExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      mag = c < 0 ? -c : c;
    }
    first = false;
    if (m.is_unit())
      os << mag;
    else if (mag == 1)
      os << m.to_string();
    else
      os << mag << '*' << m.to_string();
  }
  return os.str();
}

GradedClassExpression multiply(const GradedClassExpression& a, const GradedClassExpression& b) {
  return a * b;
}

// ---------------------------------------------------------------------------
// Evaluation

EvaluationContext& EvaluationContext::with_block(Factor f, const FourManifoldInvariants& inv) {
  if (!is_block(f)) throw EvaluationError(to_string(f) + " is not a 4-manifold factor");
  blocks_[index(f)] = BlockValues{inv.c1_sq, inv.c2};
  return *this;
}

EvaluationContext& EvaluationContext::with_surface(Factor f, const SurfaceInvariants& s) {
  if (is_block(f)) throw EvaluationError(to_string(f) + " is not a surface factor");
  surfaces_[index(f) - 2] = s.euler();
  return *this;
}

EvaluationContext EvaluationContext::product(Factor block, const FourManifoldInvariants& x,
                                             Factor surface, const SurfaceInvariants& s) {
  EvaluationContext ctx;
  ctx.with_block(block, x).with_surface(surface, s);
  return ctx;
}

EvaluationContext EvaluationContext::surfaces(const SurfaceInvariants& s1,
                                              const SurfaceInvariants& s2) {
  EvaluationContext ctx;
  ctx.with_surface(Factor::surface1, s1).with_surface(Factor::surface2, s2);
  return ctx;
}

bool EvaluationContext::contains(Factor f) const noexcept {
  return is_block(f) ? blocks_[index(f)].has_value() : surfaces_[index(f) - 2].has_value();
}

int EvaluationContext::dimension() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    const auto f = static_cast<Factor>(i);
    if (contains(f)) d += real_dimension(f);
  }
  return d;
}

namespace {

// <part of m on factor f, [f]>; zero unless the part has top degree.
Integer evaluate_on_factor(const Monomial& m, Factor f, const EvaluationContext& ctx) {
  if (m.factor_degree(f) != real_dimension(f)) return 0;
  if (is_block(f)) {
    const auto& values = *ctx.block(f);
    return m.exponent({f, ChernKind::c1}) == 2 ? values.c1_sq : values.c2;
  }
  return *ctx.surface_euler(f);
}

}  // namespace

Integer evaluate(const GradedClassExpression& e, const EvaluationContext& ctx) {
  if (ctx.contains(Factor::block1) && ctx.contains(Factor::block2))
    throw EvaluationError("products of two 4-manifold factors are not supported");
  if (e.is_zero()) return 0;

  const auto degree = e.homogeneous_degree();
  if (!degree || *degree != ctx.dimension()) {
    std::ostringstream os;
    os << "expression " << e.to_string() << " is not homogeneous of degree " << ctx.dimension();
    throw DimensionMismatch(os.str());
  }

  Integer total = 0;
  for (const auto& [m, c] : e.terms()) {
    Integer value = c;
    for (std::size_t i = 0; i < kFactorCount; ++i) {
      const auto f = static_cast<Factor>(i);
      if (!ctx.contains(f)) {
        if (m.factor_degree(f) != 0)
          throw EvaluationError("monomial " + m.to_string() + " involves " + to_string(f) +
                                ", which is not a factor of the product");
        continue;
      }
      value *= evaluate_on_factor(m, f, ctx);
    }
    total += value;
  }
  return total;
}

GradedClassExpression total_chern_class(Factor f) {
  using E = GradedClassExpression;
  if (is_block(f)) return E::one() + E::c1(f) + E::c2(f);
  return E::one() + E::c1(f);
}

GradedClassExpression total_chern_of_product(Factor block, Factor surface) {
  if (!is_block(block) || is_block(surface))
    throw EvaluationError("expected a 4-manifold factor and a surface factor");
  return total_chern_class(block) * total_chern_class(surface);
}

namespace {

struct ProductNumberClasses {
  GradedClassExpression c3;
  GradedClassExpression c1_cubed;
  GradedClassExpression c1c2;
};

ProductNumberClasses expand_product_classes(Factor block, Factor surface) {
  const auto total = total_chern_of_product(block, surface);
  const auto c1 = total.graded_part(2);
  const auto c2 = total.graded_part(4);
  return {total.graded_part(6), c1.pow(3), c1 * c2};
}

// The symbolic expansion depends only on the factor tags, so it is done once
// per tag pair and reused for every evaluation.
const ProductNumberClasses& product_classes(Factor block, Factor surface) {
  static const std::array<ProductNumberClasses, 4> cache = [] {
    std::array<ProductNumberClasses, 4> out;
    for (Factor b : {Factor::block1, Factor::block2})
      for (Factor s : {Factor::surface1, Factor::surface2})
        out[static_cast<std::size_t>(b) * 2 + static_cast<std::size_t>(s) - 2] =
            expand_product_classes(b, s);
    return out;
  }();
  if (!is_block(block) || is_block(surface))
    throw EvaluationError("expected a 4-manifold factor and a surface factor");
  return cache[static_cast<std::size_t>(block) * 2 + static_cast<std::size_t>(surface) - 2];
}

}  // namespace

ChernTriple chern_numbers_of_product(const FourManifoldInvariants& x, const SurfaceInvariants& s,
                                     Factor block, Factor surface) {
  const auto& classes = product_classes(block, surface);
  const auto ctx = EvaluationContext::product(block, x, surface, s);
  return {evaluate(classes.c3, ctx), evaluate(classes.c1_cubed, ctx), evaluate(classes.c1c2, ctx)};
}

}  // namespace chern
