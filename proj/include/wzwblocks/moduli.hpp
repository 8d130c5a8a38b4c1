#pragma once

// The rank-2, c1 = Sigma pipeline on F_e. In the stability window
// c > max(-e/4, 0) every stable bundle with these invariants is a
// nontrivial extension 0 -> O(Sigma - c*f) -> E -> O(c*f) -> 0, so the
// moduli space is the projective space P^n of extension classes with
// n = h^1(O(Sigma - 2c*f)) - 1 = 4c + e - 3. Over a curve C with Sigma.C
// even the determinant line bundle is O(m) with m = (c*f - Sigma/2).C and
// the space of conformal blocks has dimension binom(n+m, n). Every report
// carries m twice: the closed form and the GRR oracle value, which must
// agree or the run aborts.

#include <wzwblocks/cohomology.hpp>
#include <wzwblocks/lattice.hpp>

namespace wzw {

// Full record of one pipeline run.
struct BlocksReport {
  Int e;
  Int c;
  Divisor curve;
  bool parity_ok = false;
  SmoothHint smooth_hint = SmoothHint::Unknown;
  Int genus;       // adjunction genus of C
  Int n;           // dim of the moduli space P^n
  Int d1;          // (Sigma - c*f).C, degree of the sub line bundle on C
  Int d2;          // (c*f).C, degree of the quotient line bundle on C
  Int twist_ell;   // degree of the auxiliary twist L on C
  Int m_closed;    // determinant degree, intersection-number route
  Int m_grr;       // determinant degree, GRR route
  Int dim_blocks;  // h^0(P^n, O(m)) = binom(n+m, n), 0 for m < 0
};

// c > max(-e/4, 0), compared exactly over the rationals.
bool check_stability(const RuledSurface& surface, const Int& c);

// n = h^1(O(Sigma - 2c*f)) - 1, asserted equal to 4c + e - 3.
Int moduli_dimension(const RuledSurface& surface, const Int& c);

// The unique degree ell = g(C) - 1 - (d1+d2)/2 making chi(E|_C (x) L) = 0
// for every rank-2 E with det E|_C of degree Sigma.C. Integral exactly
// when Sigma.C is even.
Int twist_degree(const RuledSurface& surface, const Int& c, const Divisor& curve);

// m = (c*f - Sigma/2).C = c*(f.C) - (Sigma.C)/2.
Int det_degree_closed(const RuledSurface& surface, const Int& c, const Divisor& curve);

// End-to-end pipeline for one (e, c, C). Throws stability_error or
// parity_error on invalid input and oracle_error if the two determinant
// routes ever disagree.
BlocksReport conformal_block_dim(const RuledSurface& surface, const Int& c, const Divisor& curve);

// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Int binom(const Int& n, const Int& k);

}  // namespace wzw
