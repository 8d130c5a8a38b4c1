#include <wzwblocks/lattice.hpp>

#include <stdexcept>
#include <utility>

namespace wzw {

RuledSurface::RuledSurface(Int invariant) : e_(std::move(invariant)) {
  if (e_ < 0) {
    throw std::invalid_argument("ruled surface invariant e = -Sigma^2 must be >= 0, got " +
                                e_.str());
  }
}

Int RuledSurface::intersect(const Divisor& x, const Divisor& y) const {
  return -e_ * x.a * y.a + x.a * y.b + y.a * x.b;
}

Divisor RuledSurface::canonical_class() const {
  return {-2, -(e_ + 2)};
}

Int RuledSurface::adjunction_genus(const Divisor& curve) const {
  // C^2 + C.K is even for every divisor class on a smooth surface.
  return 1 + half_exact(intersect(curve, curve + canonical_class()), "adjunction genus");
}

bool RuledSurface::parity_ok(const Divisor& curve) const {
  return intersect(section_class(), curve) % 2 == 0;
}

SmoothHint RuledSurface::smooth_member_hint(const Divisor& curve) const {
  const Int& a = curve.a;
  const Int& b = curve.b;
  // The section and the fiber themselves, and the very-ample range b > a*e.
  if ((a == 1 && b == 0) || (a == 0 && b == 1)) return SmoothHint::Yes;
  if (a >= 1 && b > a * e_) return SmoothHint::Yes;
  if (a < 0) return SmoothHint::No;
  if (a == 0 && b != 1 && b <= 0) return SmoothHint::No;
  if (intersect(section_class(), curve) < 0 && intersect(fiber_class(), curve) < 0) {
    return SmoothHint::No;
  }
  // Includes the boundary b = a*e with a >= 2, which is deliberately
  // left unclassified.
  return SmoothHint::Unknown;
}

}  // namespace wzw
