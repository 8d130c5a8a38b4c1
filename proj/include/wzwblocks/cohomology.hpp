#pragma once

// Exact cohomology of line bundles O(a*Sigma + b*f) on F_e. For a >= 0 the
// pushforward to the base decomposes as pi_* O(a*Sigma + b*f) =
// (+)_{k=0..a} O(b - k*e) on P^1 with vanishing R^1 pi_*, so every h^i on
// the surface is a finite sum of h^i(P^1, O(d)). Negative a is handled by
// Serre duality against K. This module is the independent check on the
// closed-form dimension counts used by the moduli pipeline.

#include <wzwblocks/lattice.hpp>

#include <vector>

namespace wzw {

struct CohomologyTable {
  Int h0;
  Int h1;
  Int h2;

  bool operator==(const CohomologyTable&) const = default;
};

// Twists of the direct-image decomposition: [b, b-e, ..., b-a*e].
// Requires a >= 0; dualize first for negative a.
std::vector<Int> pushforward_degrees(const RuledSurface& surface, const Divisor& divisor);

CohomologyTable cohomology_table(const RuledSurface& surface, const Divisor& divisor);

// Riemann-Roch on a rational surface: chi(D) = 1 + D.(D-K)/2.
Int chi_rr(const RuledSurface& surface, const Divisor& divisor);

// h^1(F_e, O(Sigma - 2c*f)), the dimension of the space of extensions of
// O(c*f) by O(Sigma - c*f). Computed through the cohomology table and
// cross-checked against the closed form 4c + e - 2. Requires c >= 1.
Int dim_extension_space(const RuledSurface& surface, const Int& c);

}  // namespace wzw
