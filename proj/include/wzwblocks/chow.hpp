#pragma once

// Truncated graded-ring calculator for C x P^n, C a smooth curve. An
// element is q(h) + pt*r(h) with rational coefficients, where h is the
// hyperplane class of P^n (h^{n+1} = 0) and pt is the point class of C
// (pt^2 = 0). This is enough ring to carry Chern characters of split
// rank-2 families and their Todd-twisted pushforward to P^n, which is the
// Grothendieck-Riemann-Roch route to the determinant-bundle degree --
// deliberately independent of the closed-form intersection-number route
// in the moduli pipeline.

#include <wzwblocks/numeric.hpp>

#include <cstddef>
#include <vector>

namespace wzw {

class ChowElement {
 public:
  // The zero element of the ring for C x P^n.
  explicit ChowElement(std::size_t ambient_dim)
      : base_(ambient_dim + 1), fiber_(ambient_dim + 1) {}

  static ChowElement one(std::size_t ambient_dim);
  static ChowElement hyperplane(std::size_t ambient_dim);
  static ChowElement curve_point(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return base_.size() - 1; }

  // Coefficient of h^j.
  const Rat& base(std::size_t j) const { return base_.at(j); }
  Rat& base(std::size_t j) { return base_.at(j); }

  // Coefficient of pt*h^j.
  const Rat& fiber(std::size_t j) const { return fiber_.at(j); }
  Rat& fiber(std::size_t j) { return fiber_.at(j); }

  bool operator==(const ChowElement&) const = default;

  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  friend ChowElement operator+(ChowElement x, const ChowElement& y) { return x += y; }
  friend ChowElement operator-(ChowElement x, const ChowElement& y) { return x -= y; }

  // Graded product with truncation h^{n+1} = 0, pt^2 = 0. Mixing ambient
  // dimensions changes the ring and is rejected.
  friend ChowElement operator*(const ChowElement& x, const ChowElement& y);

 private:
  std::vector<Rat> base_;
  std::vector<Rat> fiber_;
};

// One line-bundle summand (degree d on C) boxtimes O(k*h) of a split family.
struct LineSummand {
  Int curve_degree;
  Int h_twist;
};

// Chern data of a family on C x P^n whose Chern character is the sum of
// line summands. The genus enters only through the Todd class and may be
// negative for the adjunction genus of a degenerate class.
struct FamilyChernData {
  std::size_t ambient_dim = 0;
  Int genus;
  std::vector<LineSummand> summands;
};

// ch((deg d on C) boxtimes O(k)) = (1 + d*pt) * exp(k*h), truncated.
ChowElement ch_line(std::size_t ambient_dim, const Int& curve_degree, const Int& h_twist);

// Todd class of the relative tangent along C: 1 + (1-g)*pt.
ChowElement todd_curve(std::size_t ambient_dim, const Int& genus);

// GRR pushforward to P^n of the family twisted by a degree-`twist` line
// bundle on C: the pt-component of sum_i ch_line(n, d_i + twist, k_i) *
// todd_curve(n, g), as coefficients [r_0, r_1, ..., r_n]. r_0 is the
// fiberwise Euler characteristic and r_1 is c_1 of the derived pushforward.
std::vector<Rat> grr_pushforward(const FamilyChernData& family, const Int& twist);

// Degree m of the dual determinant of cohomology O(m) on P^n for the
// two-summand family [(d1, 0), (d2, -1)]. Requires the twist to make the
// virtual rank r_0 vanish; returns -r_1 (dualizing flips the sign).
Int det_degree_grr(std::size_t ambient_dim, const Int& genus, const Int& d1, const Int& d2,
                   const Int& twist);

}  // namespace wzw
