#include "chern/invariants.hpp"

#include <sstream>
#include <utility>

namespace chern {

namespace {

void require_non_negative(Integer value, const char* what) {
  if (value < 0) {
    std::ostringstream os;
    os << what << " must be non-negative, got " << value;
    throw ParameterError(os.str());
  }
}

std::string summarize(const std::string& name, const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid block '" << name << "':";
  for (const auto& v : violations) os << ' ' << v.detail << ';';
  return os.str();
}

}  // namespace

SurfaceInvariants::SurfaceInvariants(Integer genus) : genus_(genus) {
  require_non_negative(genus, "surface genus");
}

LefschetzBlock::LefschetzBlock(std::string name, Integer chi_h, Integer c1_sq,
                               Integer fiber_genus, Integer singular_fibers,
                               bool simply_connected)
    : LefschetzBlock(std::move(name), complete_invariants(chi_h, c1_sq), fiber_genus,
                     singular_fibers, simply_connected) {}

LefschetzBlock::LefschetzBlock(std::string name, FourManifoldInvariants invariants,
                               Integer fiber_genus, Integer singular_fibers,
                               bool simply_connected)
    : name_(std::move(name)),
      invariants_(invariants),
      fiber_genus_(fiber_genus),
      singular_fibers_(singular_fibers),
      simply_connected_(simply_connected) {
  require_non_negative(fiber_genus, "fiber genus");
  require_non_negative(singular_fibers, "singular fiber count");
}

ValidationError::ValidationError(std::string block_name, std::vector<Violation> violations)
    : std::runtime_error(summarize(block_name, violations)), violations_(std::move(violations)) {}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::chern_square: return "chern-square";
    case ViolationKind::second_chern_euler: return "second-chern-euler";
    case ViolationKind::holomorphic_euler: return "holomorphic-euler";
    case ViolationKind::fibration_euler: return "fibration-euler";
    case ViolationKind::simple_connectivity: return "simple-connectivity";
  }
  return "unknown";
}

Integer euler_from_fibration(Integer genus, Integer singular_fibers) {
  return 2 * (2 - 2 * genus) + singular_fibers;
}

FourManifoldInvariants complete_invariants(Integer chi_h, Integer c1_sq) {
  const Integer euler = 12 * chi_h - c1_sq;
  return {.sigma = 4 * chi_h - euler, .euler = euler, .chi_h = chi_h, .c1_sq = c1_sq, .c2 = euler};
}

std::vector<Violation> validate(const FourManifoldInvariants& inv) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back({kind, os.str()});
  };
  if (inv.c1_sq != 3 * inv.sigma + 2 * inv.euler)
    report(ViolationKind::chern_square, "c1^2 = ", inv.c1_sq, " but 3*sigma + 2*e = ",
           3 * inv.sigma + 2 * inv.euler);
  if (inv.c2 != inv.euler)
    report(ViolationKind::second_chern_euler, "c2 = ", inv.c2, " but e = ", inv.euler);
  if (4 * inv.chi_h != inv.sigma + inv.euler)
    report(ViolationKind::holomorphic_euler, "4*chi_h = ", 4 * inv.chi_h,
           " but sigma + e = ", inv.sigma + inv.euler);
  return out;
}

std::vector<Violation> validate_block(const LefschetzBlock& block) {
  auto out = validate(block.invariants());
  const Integer g = block.fiber_genus();
  const Integer n = block.singular_fibers();
  const Integer expected = euler_from_fibration(g, n);
  if (block.invariants().euler != expected) {
    std::ostringstream os;
    os << "e = " << block.invariants().euler << " but 2(2 - 2g) + n = " << expected;
    out.push_back({ViolationKind::fibration_euler, os.str()});
  }
  if (block.simply_connected() && n > 0 && n <= 2 * g) {
    std::ostringstream os;
    os << "simply connected requires n > 2g, got n = " << n << ", 2g = " << 2 * g;
    out.push_back({ViolationKind::simple_connectivity, os.str()});
  }
  return out;
}

void require_valid(const LefschetzBlock& block) {
  auto violations = validate_block(block);
  if (!violations.empty()) throw ValidationError(block.name(), std::move(violations));
}

}  // namespace chern
