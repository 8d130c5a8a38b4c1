#pragma once

// Intersection theory on the rational ruled surface F_e, the P^1-bundle
// over P^1 with invariant e = -Sigma^2 >= 0. The Picard lattice is free on
// the section class Sigma and the fiber class f, with Sigma.f = 1, f^2 = 0;
// a divisor class is the integer pair (a, b) meaning a*Sigma + b*f.

#include <wzwblocks/numeric.hpp>

namespace wzw {

struct Divisor {
  Int a;  // coefficient of Sigma
  Int b;  // coefficient of f

  bool operator==(const Divisor&) const = default;

  friend Divisor operator+(const Divisor& x, const Divisor& y) { return {x.a + y.a, x.b + y.b}; }
  friend Divisor operator-(const Divisor& x, const Divisor& y) { return {x.a - y.a, x.b - y.b}; }
  friend Divisor operator-(const Divisor& x) { return {-x.a, -x.b}; }
  friend Divisor operator*(const Int& t, const Divisor& x) { return {t * x.a, t * x.b}; }
};

// Advisory classification of whether a class can contain a smooth
// irreducible curve. Never blocks a computation.
enum class SmoothHint { Yes, No, Unknown };

class RuledSurface {
 public:
  // Base curve is P^1, so the invariant is non-negative.
  explicit RuledSurface(Int invariant);

  const Int& e() const { return e_; }

  static Divisor section_class() { return {1, 0}; }
  static Divisor fiber_class() { return {0, 1}; }

  // Symmetric bilinear form: Sigma^2 = -e, Sigma.f = 1, f^2 = 0.
  Int intersect(const Divisor& x, const Divisor& y) const;

  // K = -2*Sigma - (e+2)*f.
  Divisor canonical_class() const;

  // Arithmetic genus by adjunction, g = 1 + C.(C+K)/2. Purely numerical:
  // defined for every class, negative for degenerate ones.
  Int adjunction_genus(const Divisor& curve) const;

  // True iff Sigma.C = b - a*e is even, the rank-2 divisibility hypothesis.
  bool parity_ok(const Divisor& curve) const;

  SmoothHint smooth_member_hint(const Divisor& curve) const;

 private:
  Int e_;
};

}  // namespace wzw
