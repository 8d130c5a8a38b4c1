#include <wzwblocks/cohomology.hpp>

#include <wzwblocks/errors.hpp>

#include <stdexcept>

namespace wzw {

namespace {

// h^0(P^1, O(d)) = max(d+1, 0); h^1(P^1, O(d)) = max(-d-1, 0).
Int h0_line(const Int& d) { return d >= -1 ? Int(d + 1) : Int(0); }
Int h1_line(const Int& d) { return d <= -1 ? Int(-d - 1) : Int(0); }

}  // namespace

std::vector<Int> pushforward_degrees(const RuledSurface& surface, const Divisor& divisor) {
  if (divisor.a < 0) {
    throw std::invalid_argument("pushforward_degrees needs a >= 0 (dualize first), got a = " +
                                divisor.a.str());
  }
  std::vector<Int> degrees;
  for (Int k = 0; k <= divisor.a; ++k) {
    degrees.push_back(divisor.b - k * surface.e());
  }
  return degrees;
}

CohomologyTable cohomology_table(const RuledSurface& surface, const Divisor& divisor) {
  if (divisor.a >= 0) {
    CohomologyTable table{0, 0, 0};
    for (const Int& d : pushforward_degrees(surface, divisor)) {
      table.h0 += h0_line(d);
      table.h1 += h1_line(d);
    }
    return table;
  }
  // a = -1: both direct images vanish.
  if (divisor.a == -1) return {0, 0, 0};
  // a <= -2: Serre duality h^i(D) = h^{2-i}(K - D); K - D lands in the
  // a >= 0 branch.
  CohomologyTable dual = cohomology_table(surface, surface.canonical_class() - divisor);
  return {dual.h2, dual.h1, dual.h0};
}

Int chi_rr(const RuledSurface& surface, const Divisor& divisor) {
  return 1 + half_exact(surface.intersect(divisor, divisor - surface.canonical_class()),
                        "Riemann-Roch");
}

Int dim_extension_space(const RuledSurface& surface, const Int& c) {
  if (c < 1) {
    throw std::invalid_argument("extension space needs c >= 1, got c = " + c.str());
  }
  const Divisor twisted{1, -2 * c};
  const CohomologyTable table = cohomology_table(surface, twisted);
  const Int expected = 4 * c + surface.e() - 2;
  if (table.h1 != expected) {
    throw oracle_error("extension-space dimension: cohomology gives h^1 = " + table.h1.str() +
                       " but the closed form gives " + expected.str());
  }
  return table.h1;
}

}  // namespace wzw
