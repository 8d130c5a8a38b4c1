#include <wzwblocks/moduli.hpp>

#include <wzwblocks/chow.hpp>
#include <wzwblocks/errors.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wzw {

bool check_stability(const RuledSurface& surface, const Int& c) {
  const Rat bound = std::max(Rat(-surface.e(), 4), Rat(0));
  return Rat(c) > bound;
}

Int moduli_dimension(const RuledSurface& surface, const Int& c) {
  if (!check_stability(surface, c)) {
    throw stability_error("c = " + c.str() + " is outside the stability window c > max(-e/4, 0)");
  }
  const Int n = dim_extension_space(surface, c) - 1;
  const Int expected = 4 * c + surface.e() - 3;
  if (n != expected) {
    throw oracle_error("moduli dimension: cohomology gives " + n.str() +
                       " but the closed form gives " + expected.str());
  }
  return n;
}

Int twist_degree(const RuledSurface& surface, const Int& c, const Divisor& curve) {
  if (!surface.parity_ok(curve)) {
    throw parity_error("Sigma.C = " + surface.intersect(RuledSurface::section_class(), curve).str() +
                       " is odd; no integral twist degree exists");
  }
  const Int genus = surface.adjunction_genus(curve);
  const Int d1 = surface.intersect(RuledSurface::section_class() - c * RuledSurface::fiber_class(),
                                   curve);
  const Int d2 = surface.intersect(c * RuledSurface::fiber_class(), curve);
  // d1 + d2 = Sigma.C, even by the parity check above.
  return genus - 1 - half_exact(d1 + d2, "twist degree");
}

Int det_degree_closed(const RuledSurface& surface, const Int& c, const Divisor& curve) {
  if (!surface.parity_ok(curve)) {
    throw parity_error("Sigma.C = " + surface.intersect(RuledSurface::section_class(), curve).str() +
                       " is odd; the determinant degree is not integral");
  }
  const Divisor doubled = 2 * c * RuledSurface::fiber_class() - RuledSurface::section_class();
  return half_exact(surface.intersect(doubled, curve), "determinant degree");
}

BlocksReport conformal_block_dim(const RuledSurface& surface, const Int& c, const Divisor& curve) {
  if (!check_stability(surface, c)) {
    throw stability_error("c = " + c.str() + " is outside the stability window c > max(-e/4, 0)");
  }
  if (!surface.parity_ok(curve)) {
    throw parity_error("Sigma.C = " + surface.intersect(RuledSurface::section_class(), curve).str() +
                       " is odd; the divisibility hypothesis fails");
  }

  BlocksReport report;
  report.e = surface.e();
  report.c = c;
  report.curve = curve;
  report.parity_ok = true;
  report.smooth_hint = surface.smooth_member_hint(curve);
  report.genus = surface.adjunction_genus(curve);
  report.n = moduli_dimension(surface, c);
  report.d1 = surface.intersect(RuledSurface::section_class() - c * RuledSurface::fiber_class(),
                                curve);
  report.d2 = surface.intersect(c * RuledSurface::fiber_class(), curve);
  report.twist_ell = twist_degree(surface, c, curve);
  report.m_closed = det_degree_closed(surface, c, curve);

  if (report.n > std::numeric_limits<std::size_t>::max()) {
    throw std::invalid_argument("moduli dimension " + report.n.str() +
                                " is too large for the determinant oracle");
  }
  report.m_grr = det_degree_grr(report.n.convert_to<std::size_t>(), report.genus, report.d1,
                                report.d2, report.twist_ell);
  if (report.m_closed != report.m_grr) {
    throw oracle_error("determinant degree mismatch: closed form " + report.m_closed.str() +
                       " vs GRR " + report.m_grr.str() + " at e=" + report.e.str() +
                       " c=" + c.str() + " C=(" + curve.a.str() + "," + curve.b.str() + ")");
  }

  // h^0(P^n, O(m)) vanishes for m < 0.
  report.dim_blocks = report.m_closed < 0 ? Int(0) : binom(report.n + report.m_closed, report.n);
  return report;
}

Int binom(const Int& n, const Int& k) {
  if (n < 0) {
    throw std::invalid_argument("binom needs n >= 0, got n = " + n.str());
  }
  if (k < 0 || k > n) return 0;
  const Int smaller = std::min(k, Int(n - k));
  // Multiplicative form; each intermediate quotient is itself a binomial,
  // so every division is exact.
  Int out = 1;
  for (Int i = 1; i <= smaller; ++i) {
    out *= n - smaller + i;
    out /= i;
  }
  return out;
}

}  // namespace wzw
