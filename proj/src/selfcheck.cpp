#include <wzwblocks/selfcheck.hpp>

#include <wzwblocks/chow.hpp>
#include <wzwblocks/cohomology.hpp>
#include <wzwblocks/lattice.hpp>
#include <wzwblocks/moduli.hpp>

#include <sstream>
#include <stdexcept>

namespace wzw {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

void record(SuiteResult& suite, bool ok, const std::string& detail) {
  ++suite.cases;
  if (ok) return;
  ++suite.failures;
  if (suite.counterexamples.size() < kMaxCounterexamples) {
    suite.counterexamples.push_back(detail);
  }
}

std::string tuple_tag(const Int& e, const Int& a, const Int& b) {
  std::ostringstream out;
  out << "e=" << e << " D=(" << a << "," << b << ")";
  return out.str();
}

std::string pipeline_tag(const Int& e, const Int& c, const Divisor& curve) {
  std::ostringstream out;
  out << "e=" << e << " c=" << c << " C=(" << curve.a << "," << curve.b << ")";
  return out.str();
}

// chi from the cohomology table must equal Riemann-Roch; two fully
// independent computations.
SuiteResult check_euler(int grid) {
  SuiteResult suite{.name = "euler-characteristic"};
  const int span = 2 * grid;
  for (int e = 0; e <= grid; ++e) {
    const RuledSurface surface{e};
    for (int a = -span; a <= span; ++a) {
      for (int b = -span; b <= span; ++b) {
        const Divisor divisor{a, b};
        const CohomologyTable table = cohomology_table(surface, divisor);
        const Int chi = table.h0 - table.h1 + table.h2;
        const Int rr = chi_rr(surface, divisor);
        record(suite, chi == rr,
               tuple_tag(e, a, b) + ": table chi=" + chi.str() + " riemann-roch=" + rr.str());
      }
    }
  }
  return suite;
}

SuiteResult check_serre(int grid) {
  SuiteResult suite{.name = "serre-duality"};
  const int span = 2 * grid;
  for (int e = 0; e <= grid; ++e) {
    const RuledSurface surface{e};
    for (int a = -span; a <= span; ++a) {
      for (int b = -span; b <= span; ++b) {
        const Divisor divisor{a, b};
        const CohomologyTable direct = cohomology_table(surface, divisor);
        const CohomologyTable dual =
            cohomology_table(surface, surface.canonical_class() - divisor);
        const bool ok =
            direct.h0 == dual.h2 && direct.h1 == dual.h1 && direct.h2 == dual.h0;
        record(suite, ok, tuple_tag(e, a, b) + ": h(D) does not mirror h(K-D)");
      }
    }
  }
  return suite;
}

// h^1(O(Sigma - 2c*f)) = 4c + e - 2, with vanishing h^0 and h^2.
SuiteResult check_extension_dim(int grid) {
  SuiteResult suite{.name = "extension-dimension"};
  for (int e = 0; e <= grid + 2; ++e) {
    const RuledSurface surface{e};
    for (int c = 1; c <= 2 * grid + 2; ++c) {
      const Divisor twisted{1, -2 * c};
      const CohomologyTable table = cohomology_table(surface, twisted);
      const Int expected = 4 * c + e - 2;
      const bool ok = table.h1 == expected && table.h0 == 0 && table.h2 == 0;
      record(suite, ok,
             "e=" + std::to_string(e) + " c=" + std::to_string(c) + ": (h0,h1,h2)=(" +
                 table.h0.str() + "," + table.h1.str() + "," + table.h2.str() + ") expected (0," +
                 expected.str() + ",0)");
    }
  }
  return suite;
}

SuiteResult check_moduli_dim(int grid) {
  SuiteResult suite{.name = "moduli-dimension"};
  for (int e = 0; e <= grid + 2; ++e) {
    const RuledSurface surface{e};
    for (int c = 1; c <= 2 * grid + 2; ++c) {
      const Int n = moduli_dimension(surface, c);
      const bool ok = n == 4 * c + e - 3 && n == dim_extension_space(surface, c) - 1;
      record(suite, ok,
             "e=" + std::to_string(e) + " c=" + std::to_string(c) + ": n=" + n.str());
    }
  }
  return suite;
}

SuiteResult check_det_oracle(int grid) {
  SuiteResult suite{.name = "determinant-oracle"};
  const int span = grid + 2;
  for (int e = 0; e <= grid; ++e) {
    const RuledSurface surface{e};
    for (int c = 1; c <= span; ++c) {
      for (int a = 0; a <= span; ++a) {
        for (int b = -span; b <= span; ++b) {
          const Divisor curve{a, b};
          if (!surface.parity_ok(curve)) continue;
          const Int closed = det_degree_closed(surface, c, curve);
          const Int genus = surface.adjunction_genus(curve);
          const Int d1 = surface.intersect(
              RuledSurface::section_class() - Int(c) * RuledSurface::fiber_class(), curve);
          const Int d2 =
              surface.intersect(Int(c) * RuledSurface::fiber_class(), curve);
          const Int ell = twist_degree(surface, c, curve);
          const Int n = moduli_dimension(surface, c);
          const Int grr = det_degree_grr(n.convert_to<std::size_t>(), genus, d1, d2, ell);
          const Int formula = Int(c) * surface.intersect(RuledSurface::fiber_class(), curve) -
                              half_exact(surface.intersect(RuledSurface::section_class(), curve),
                                         "det formula");
          const bool ok = closed == grr && closed == formula;
          record(suite, ok,
                 pipeline_tag(e, c, curve) + ": closed=" + closed.str() + " grr=" + grr.str() +
                     " formula=" + formula.str());
        }
      }
    }
  }
  return suite;
}

// With the canonical twist, the virtual rank r_0 of the pushforward
// vanishes: the chi(E|_C (x) L) = 0 normalization.
SuiteResult check_twist_rank_zero(int grid) {
  SuiteResult suite{.name = "twist-rank-zero"};
  const int span = grid + 2;
  for (int e = 0; e <= grid; ++e) {
    const RuledSurface surface{e};
    for (int c = 1; c <= span; ++c) {
      for (int a = 0; a <= span; ++a) {
        for (int b = -span; b <= span; ++b) {
          const Divisor curve{a, b};
          if (!surface.parity_ok(curve)) continue;
          const Int genus = surface.adjunction_genus(curve);
          const Int d1 = surface.intersect(
              RuledSurface::section_class() - Int(c) * RuledSurface::fiber_class(), curve);
          const Int d2 =
              surface.intersect(Int(c) * RuledSurface::fiber_class(), curve);
          const Int ell = twist_degree(surface, c, curve);
          const std::size_t n = moduli_dimension(surface, c).convert_to<std::size_t>();
          const FamilyChernData family{n, genus, {{d1, 0}, {d2, -1}}};
          const std::vector<Rat> pushed = grr_pushforward(family, ell);
          record(suite, pushed[0] == 0,
                 pipeline_tag(e, c, curve) + ": r_0 = " + pushed[0].str());
        }
      }
    }
  }
  return suite;
}

// Number of monomials of degree m in n+1 variables, by brute enumeration.
Int count_monomials(int num_vars, int degree) {
  if (num_vars == 1) return 1;
  Int total = 0;
  for (int used = 0; used <= degree; ++used) {
    total += count_monomials(num_vars - 1, degree - used);
  }
  return total;
}

SuiteResult check_block_dim(int grid) {
  SuiteResult suite{.name = "block-dimension"};
  const int budget = 2 * grid + 4;
  for (int n = 0; n <= budget; ++n) {
    for (int m = 0; n + m <= budget; ++m) {
      const Int counted = count_monomials(n + 1, m);
      const Int bin = binom(n + m, n);
      record(suite, counted == bin,
             "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": enumeration " +
                 counted.str() + " vs binom " + bin.str());
    }
  }
  // The pipeline value obeys the same rule, including dim 0 for m < 0.
  const int span = grid + 2;
  for (int e = 0; e <= grid; ++e) {
    const RuledSurface surface{e};
    for (int c = 1; c <= span; ++c) {
      for (int a = 0; a <= span; ++a) {
        for (int b = -span; b <= span; ++b) {
          const Divisor curve{a, b};
          if (!surface.parity_ok(curve)) continue;
          const BlocksReport report = conformal_block_dim(surface, c, curve);
          const Int expected =
              report.m_closed < 0 ? Int(0) : binom(report.n + report.m_closed, report.n);
          record(suite, report.dim_blocks == expected,
                 pipeline_tag(e, c, curve) + ": dim=" + report.dim_blocks.str() + " expected " +
                     expected.str());
        }
      }
    }
  }
  return suite;
}

}  // namespace

VerifyReport run_selfcheck(int grid) {
  if (grid < 1) {
    throw std::invalid_argument("selfcheck grid must be >= 1, got " + std::to_string(grid));
  }
  VerifyReport report;
  report.suites.push_back(check_euler(grid));
  report.suites.push_back(check_serre(grid));
  report.suites.push_back(check_extension_dim(grid));
  report.suites.push_back(check_moduli_dim(grid));
  report.suites.push_back(check_det_oracle(grid));
  report.suites.push_back(check_twist_rank_zero(grid));
  report.suites.push_back(check_block_dim(grid));
  return report;
}

}  // namespace wzw
